#include "musb/pairing.hpp"

#include <cmath>
#include <stdexcept>

namespace musb {

namespace {

// 2 pi int_0^inf r^{2k} d(r) r dr : the radial factor of <z^k, z^k> against
// the density of matching parity. The truncation radius grows with the
// monomial degree, since r^{2k} pushes mass outward.
double monomial_moment(unsigned k, const RadialDensity& d,
                       const QuadratureSpec& q) {
    QuadratureSpec qk = q;
    qk.truncation_radius =
        std::max(q.truncation_radius, 4.0 + std::sqrt(static_cast<double>(k)));
    const double p = 2.0 * static_cast<double>(k);
    return 2.0 * M_PI *
           radial_integral([&d, p](double r) { return std::pow(r, p) * d.eval(r); },
                           qk);
}

}  // namespace

std::complex<double> inner_product(const HoloPoly& f, const HoloPoly& g,
                                   const DensityPair& densities,
                                   const QuadratureSpec& q) {
    q.validate();
    std::complex<double> sum(0.0);
    const std::size_t n = std::min(f.coeffs().size(), g.coeffs().size());
    for (std::size_t k = 0; k < n; ++k) {
        const std::complex<double> c = std::conj(f.coeff(k)) * g.coeff(k);
        if (c == std::complex<double>(0.0)) continue;
        const RadialDensity& d = (k % 2 == 0) ? densities.even : densities.odd;
        sum += c * monomial_moment(static_cast<unsigned>(k), d, q);
    }
    return sum;
}

std::complex<double> inner_product(const HoloPoly& f, const HoloPoly& g,
                                   const DeformationParams& params,
                                   const QuadratureSpec& q) {
    DensityPair densities;
    densities.even = make_density_even(params);
    densities.odd = make_density_odd(params);
    densities.k_coeff = 1.0;
    return inner_product(f, g, densities, q);
}

std::complex<double> adjointness_gap(const HoloPoly& f, const HoloPoly& g,
                                     const DensityPair& densities, double mu,
                                     const QuadratureSpec& q) {
    return inner_product(creation(f), g, densities, q) -
           inner_product(f, annihilation(g, mu), densities, q);
}

std::complex<double> adjointness_gap(const HoloPoly& f, const HoloPoly& g,
                                     const DeformationParams& params,
                                     const QuadratureSpec& q) {
    return inner_product(creation(f), g, params, q) -
           inner_product(f, annihilation(g, params.mu), params, q);
}

double monomial_norm_sq(unsigned n, const DeformationParams& params,
                        const QuadratureSpec& q) {
    if (n > 12) {
        throw std::domain_error(
            "monomial_norm_sq supports degrees up to 12 only");
    }
    const HoloPoly zn = HoloPoly::monomial(n);
    return inner_product(zn, zn, params, q).real();
}

}  // namespace musb
