#pragma once

#include <complex>

#include "musb/holo.hpp"
#include "musb/measures.hpp"
#include "musb/quadrature.hpp"

namespace musb {

// Two-measure inner product
//   <f, g> = <f_e, g_e>_{L2(nu_e)} + <f_o, g_o>_{L2(nu_o)},
// conjugate-linear in the first argument. The angular integrals are done
// analytically (2 pi between matching monomial degrees, 0 otherwise), so the
// only numerical integration is radial.
std::complex<double> inner_product(const HoloPoly& f, const HoloPoly& g,
                                   const DeformationParams& params,
                                   const QuadratureSpec& q);

// Same pairing against an arbitrary density pair (e.g. an analytic solution
// pair); divergent densities surface as DivergenceError.
std::complex<double> inner_product(const HoloPoly& f, const HoloPoly& g,
                                   const DensityPair& densities,
                                   const QuadratureSpec& q);

// <a*_mu f, g> - <f, a_mu g>.
std::complex<double> adjointness_gap(const HoloPoly& f, const HoloPoly& g,
                                     const DeformationParams& params,
                                     const QuadratureSpec& q);

std::complex<double> adjointness_gap(const HoloPoly& f, const HoloPoly& g,
                                     const DensityPair& densities, double mu,
                                     const QuadratureSpec& q);

// <z^n, z^n> by quadrature; matches mu_factorial(n, mu) when lambda = 1.
// Degree is capped at 12 to stay inside the quadrature accuracy contract.
double monomial_norm_sq(unsigned n, const DeformationParams& params,
                        const QuadratureSpec& q);

}  // namespace musb
