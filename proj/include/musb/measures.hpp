#pragma once

#include <functional>

#include "musb/quadrature.hpp"

namespace musb {

// The pair (mu, lambda) governing every density and operator.
struct DeformationParams {
    double mu;
    double lambda = 1.0;

    DeformationParams(double mu_, double lambda_ = 1.0);  // validates
};

enum class DensityKind { EvenK, OddK, EvenI, OddI, Gaussian, Custom };

// An evaluable radial function with derivative, tagged by construction.
// Immutable after construction; densities depend only on r = |z|.
struct RadialDensity {
    DensityKind kind = DensityKind::Custom;
    DeformationParams params{0.0, 1.0};
    double scale = 1.0;
    std::function<double(double)> eval;
    std::function<double(double)> deriv;

    double operator()(double r) const { return eval(r); }
};

// A candidate (nu_e, nu_o) solution of the coupled density system, with real
// coordinates over the analytic basis {K-pair, I-pair} when applicable.
struct DensityPair {
    RadialDensity even;
    RadialDensity odd;
    double k_coeff = 0.0;
    double i_coeff = 0.0;
};

// The even/odd measure densities
//   nu_{e|o}(r) = lambda * 2^{1/2-mu} / (pi Gamma(mu+1/2))
//                 * K_{mu -+ 1/2}(rho^2) * rho^{2 mu + 1},   rho = sqrt(lambda) r,
// defined for r > 0 only (domain error otherwise).
double density_even(const DeformationParams& params, double r);
double density_odd(const DeformationParams& params, double r);

// The reference density (1/pi) e^{-r^2}, defined for r >= 0.
double gaussian_density(double r);

// Densities packaged with analytic derivatives.
RadialDensity make_density_even(const DeformationParams& params);
RadialDensity make_density_odd(const DeformationParams& params);
RadialDensity make_gaussian_density();

// Plane integral of the density in polar form: 2 pi * int_0^inf d(r) r dr.
// Divergent tails (EvenI / OddI kinds) raise DivergenceError.
double total_mass(const RadialDensity& d, const QuadratureSpec& q);

// Scales both components by one common factor so the even component has
// total mass 1. The pointwise ratio odd/even is unchanged.
DensityPair normalize_pair(const DensityPair& pair, const QuadratureSpec& q);

}  // namespace musb
