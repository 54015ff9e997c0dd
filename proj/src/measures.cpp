#include "musb/measures.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "musb/errors.hpp"
#include "musb/specfun.hpp"

namespace musb {

namespace {

void check_radius(double r) {
    if (!std::isfinite(r) || r <= 0.0) {
        throw std::domain_error("density defined for r > 0 only, got " +
                                std::to_string(r));
    }
}

// 2^{1/2-mu} / (pi Gamma(mu+1/2))
double norm_constant(double mu) {
    return std::pow(2.0, 0.5 - mu) / (M_PI * specfun::gamma_fn(mu + 0.5));
}

// lambda * C_mu * rho^{2mu+1} * K_nu(rho^2) with rho = sqrt(lambda) r
double density_value(const DeformationParams& p, double order, double r) {
    check_radius(r);
    const double rho = std::sqrt(p.lambda) * r;
    return p.lambda * norm_constant(p.mu) * std::pow(rho, 2.0 * p.mu + 1.0) *
           specfun::bessel_k(order, rho * rho);
}

// d/dr of the above; d/drho [rho^a K(rho^2)] = a rho^{a-1} K + 2 rho^{a+1} K'
double density_derivative(const DeformationParams& p, double order, double r) {
    check_radius(r);
    const double rho = std::sqrt(p.lambda) * r;
    const double a = 2.0 * p.mu + 1.0;
    const double x = rho * rho;
    const double d_rho = a * std::pow(rho, a - 1.0) * specfun::bessel_k(order, x) +
                         2.0 * std::pow(rho, a + 1.0) * specfun::bessel_k_prime(order, x);
    return p.lambda * norm_constant(p.mu) * d_rho * std::sqrt(p.lambda);
}

}  // namespace

DeformationParams::DeformationParams(double mu_, double lambda_)
    : mu(mu_), lambda(lambda_) {
    if (!std::isfinite(mu) || mu <= -0.5) {
        throw std::domain_error("deformation parameter must satisfy mu > -1/2, got " +
                                std::to_string(mu));
    }
    if (!std::isfinite(lambda) || lambda <= 0.0) {
        throw std::domain_error("scale must satisfy lambda > 0, got " +
                                std::to_string(lambda));
    }
}

double density_even(const DeformationParams& params, double r) {
    return density_value(params, params.mu - 0.5, r);
}

double density_odd(const DeformationParams& params, double r) {
    return density_value(params, params.mu + 0.5, r);
}

double gaussian_density(double r) {
    if (!std::isfinite(r) || r < 0.0) {
        throw std::domain_error("gaussian_density requires r >= 0");
    }
    return std::exp(-r * r) / M_PI;
}

RadialDensity make_density_even(const DeformationParams& params) {
    RadialDensity d;
    d.kind = DensityKind::EvenK;
    d.params = params;
    d.scale = 1.0;
    d.eval = [params](double r) { return density_even(params, r); };
    d.deriv = [params](double r) {
        return density_derivative(params, params.mu - 0.5, r);
    };
    return d;
}

RadialDensity make_density_odd(const DeformationParams& params) {
    RadialDensity d;
    d.kind = DensityKind::OddK;
    d.params = params;
    d.scale = 1.0;
    d.eval = [params](double r) { return density_odd(params, r); };
    d.deriv = [params](double r) {
        return density_derivative(params, params.mu + 0.5, r);
    };
    return d;
}

RadialDensity make_gaussian_density() {
    RadialDensity d;
    d.kind = DensityKind::Gaussian;
    d.params = DeformationParams(0.0, 1.0);
    d.scale = 1.0;
    d.eval = [](double r) { return gaussian_density(r); };
    d.deriv = [](double r) { return -2.0 * r * gaussian_density(r); };
    return d;
}

double total_mass(const RadialDensity& d, const QuadratureSpec& q) {
    if (!d.eval) throw std::invalid_argument("total_mass: density not evaluable");
    return 2.0 * M_PI * radial_integral(d.eval, q);
}

DensityPair normalize_pair(const DensityPair& pair, const QuadratureSpec& q) {
    const double mass = total_mass(pair.even, q);
    if (!std::isfinite(mass) || mass == 0.0) {
        throw std::invalid_argument("normalize_pair: degenerate (zero-mass) pair");
    }
    const double factor = 1.0 / mass;

    auto scaled = [factor](const RadialDensity& src) {
        RadialDensity out = src;
        out.scale = src.scale * factor;
        auto e = src.eval;
        auto dv = src.deriv;
        out.eval = [e, factor](double r) { return factor * e(r); };
        out.deriv = [dv, factor](double r) { return factor * dv(r); };
        return out;
    };

    DensityPair out;
    out.even = scaled(pair.even);
    out.odd = scaled(pair.odd);
    out.k_coeff = pair.k_coeff * factor;
    out.i_coeff = pair.i_coeff * factor;
    return out;
}

}  // namespace musb
