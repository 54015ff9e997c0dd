#include "musb/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <stdexcept>

#include "musb/errors.hpp"

namespace musb {

namespace {

unsigned bisection_depth(int max_subdivisions) {
    unsigned depth = 1;
    while ((1 << depth) < max_subdivisions && depth < 20) ++depth;
    return depth;
}

}  // namespace

void QuadratureSpec::validate() const {
    if (!(rel_tol >= 1e-13 && rel_tol <= 1e-4)) {
        throw std::invalid_argument("QuadratureSpec.rel_tol must be in [1e-13, 1e-4]");
    }
    if (!(abs_tol >= 0.0) || !std::isfinite(abs_tol)) {
        throw std::invalid_argument("QuadratureSpec.abs_tol must be >= 0");
    }
    if (max_subdivisions < 16) {
        throw std::invalid_argument("QuadratureSpec.max_subdivisions must be >= 16");
    }
    if (!(truncation_radius > 0.0) || !std::isfinite(truncation_radius)) {
        throw std::invalid_argument("QuadratureSpec.truncation_radius must be > 0");
    }
}

double finite_integral(const std::function<double(double)>& f, double a,
                       double b, const QuadratureSpec& q,
                       double* error_estimate) {
    using boost::math::quadrature::gauss_kronrod;
    double err = 0.0;
    const double value = gauss_kronrod<double, 15>::integrate(
        f, a, b, bisection_depth(q.max_subdivisions), 0.1 * q.rel_tol, &err);
    if (error_estimate) *error_estimate = err;
    return value;
}

double radial_integral(const std::function<double(double)>& g,
                       const QuadratureSpec& q) {
    q.validate();
    // Below the floor the weighted integrand contributes < 1e-12 for any
    // integrable power law; skipping it avoids overflow/underflow inside g.
    auto f = [&g](double r) { return r < 1e-30 ? 0.0 : g(r) * r; };

    double total = 0.0;
    double err_total = 0.0;

    // [0, 1]: tanh-sinh handles the open endpoint and any integrable
    // power singularity at the origin.
    {
        thread_local boost::math::quadrature::tanh_sinh<double> ts;
        double err = 0.0, l1 = 0.0;
        const double v = ts.integrate(f, 0.0, 1.0, 0.1 * q.rel_tol, &err, &l1);
        if (!std::isfinite(v)) {
            throw DivergenceError("radial_integral: non-finite value on [0, 1]");
        }
        total += v;
        err_total += err * std::abs(l1 != 0.0 ? l1 : v);  // tanh_sinh reports relative error
    }

    // Doubling windows [1,2], [2,4], ... with a ratio test for divergence
    // and a geometric bound for the discarded tail.
    double lo = 1.0;
    double prev_window = -1.0;
    bool converged = false;
    for (int k = 0; k < 48; ++k) {
        const double hi = 2.0 * lo;
        double err = 0.0;
        const double w = finite_integral(f, lo, hi, q, &err);
        if (!std::isfinite(w)) {
            throw DivergenceError("radial_integral: non-finite window [" +
                                  std::to_string(lo) + ", " + std::to_string(hi) + "]");
        }
        total += w;
        err_total += err;
        const double aw = std::abs(w);
        // growth before the truncation radius can just be a bump in the
        // integrand; growth past it means the tail is not integrable
        if (lo >= q.truncation_radius && prev_window >= 0.0 &&
            aw > 2.0 * prev_window && aw > std::max(q.abs_tol, 1e-12)) {
            throw DivergenceError(
                "radial_integral: tail windows grow (not integrable)");
        }
        if (hi >= q.truncation_radius &&
            aw <= std::max(q.abs_tol, 0.01 * q.rel_tol * std::abs(total))) {
            const double ratio = (prev_window > 0.0) ? aw / prev_window : 0.0;
            if (ratio < 0.5) {
                err_total += (ratio > 0.0) ? aw * ratio / (1.0 - ratio) : 0.0;
                converged = true;
                break;
            }
        }
        prev_window = aw;
        lo = hi;
    }

    if (!converged) {
        throw AccuracyError("radial_integral: window budget exhausted", total,
                            err_total);
    }
    if (err_total > std::max(q.abs_tol, q.rel_tol * std::abs(total))) {
        throw AccuracyError("radial_integral: requested tolerance not reached",
                            total, err_total);
    }
    return total;
}

}  // namespace musb
