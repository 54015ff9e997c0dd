#pragma once

#include <functional>

namespace musb {

// Accuracy/truncation contract for integrals over (0, inf) in the radial
// measure r dr. The integrand is never evaluated at r = 0, so integrable
// power singularities at the origin are fine.
struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_subdivisions = 200;       // adaptive bisection budget per panel
    double truncation_radius = 8.0;   // windows double outward from here

    void validate() const;  // throws std::invalid_argument
};

// integral_0^inf g(r) r dr.
// [0,1] is handled by tanh-sinh quadrature (open endpoints, singularity
// tolerant); [2^k, 2^{k+1}] windows by adaptive Gauss-Kronrod until the
// geometric tail estimate fits the budget. Throws DivergenceError when a
// window more than doubles its predecessor, AccuracyError when the budget
// runs out first.
double radial_integral(const std::function<double(double)>& g,
                       const QuadratureSpec& q);

// Same adaptive Gauss-Kronrod panel used by radial_integral, on one finite
// interval; used by tail classification.
double finite_integral(const std::function<double(double)>& f, double a,
                       double b, const QuadratureSpec& q,
                       double* error_estimate = nullptr);

}  // namespace musb
