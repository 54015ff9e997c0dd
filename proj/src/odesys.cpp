#include "musb/odesys.hpp"

#include <boost/numeric/odeint.hpp>

#include <array>
#include <cmath>
#include <stdexcept>

#include "musb/errors.hpp"
#include "musb/specfun.hpp"

namespace musb {

namespace {

void check_radius(double r) {
    if (!std::isfinite(r) || r <= 0.0) {
        throw std::domain_error("radius must be > 0");
    }
}

}  // namespace

OdeResidual coupled_residual(const DensityPair& pair, double mu, double r) {
    check_radius(r);
    const double ve = pair.even.eval(r);
    const double vo = pair.odd.eval(r);
    const double dve = pair.even.deriv(r);
    const double dvo = pair.odd.deriv(r);
    OdeResidual res;
    res.r = r;
    res.res1 = vo + dve / (2.0 * r) - (2.0 * mu / (r * r)) * ve;
    res.res2 = ve + dvo / (2.0 * r);
    if (!std::isfinite(res.res1) || !std::isfinite(res.res2)) {
        throw std::runtime_error("coupled_residual: non-finite evaluation");
    }
    return res;
}

double decoupled_residual(Parity parity, const RadialDensity& f, double mu,
                          double r) {
    check_radius(r);
    const double h = 1e-5 * std::max(1.0, r);
    // one analytic differentiation, one centered difference
    const double fpp = (f.deriv(r + h) - f.deriv(r - h)) / (2.0 * h);
    const double fp = f.deriv(r);
    const double fv = f.eval(r);
    const double drift = -(1.0 + 4.0 * mu) / r * fp;
    if (parity == Parity::Even) {
        return fpp + drift + (8.0 * mu / (r * r) - 4.0 * r * r) * fv;
    }
    return fpp + drift - 4.0 * r * r * fv;
}

double modified_bessel_residual(double nu, BesselKind kind, double x) {
    check_radius(x);
    double u, up, upp;
    if (kind == BesselKind::I) {
        u = specfun::bessel_i(nu, x);
        up = specfun::bessel_i_prime(nu, x);
        upp = specfun::bessel_i_second(nu, x);
    } else {
        u = specfun::bessel_k(nu, x);
        up = specfun::bessel_k_prime(nu, x);
        upp = specfun::bessel_k_second(nu, x);
    }
    return upp + up / x - (1.0 + nu * nu / (x * x)) * u;
}

ChangeOfVariable change_of_variable_check(double mu) {
    if (!std::isfinite(mu) || mu <= -0.5) {
        throw std::domain_error("mu must be > -1/2");
    }
    ChangeOfVariable c;
    c.alpha = 2.0 * mu + 1.0;
    c.even_order = mu - 0.5;
    c.odd_order = mu + 0.5;
    const double a = c.alpha;
    c.even_const = a * a - 2.0 * a - 4.0 * a * mu + 8.0 * mu;
    c.odd_const = a * a - 2.0 * a - 4.0 * a * mu;
    const double even_expected = -4.0 * (mu - 0.5) * (mu - 0.5);
    const double odd_expected = -4.0 * (mu + 0.5) * (mu + 0.5);
    const double tol = 64.0 * std::numeric_limits<double>::epsilon() *
                       (1.0 + std::abs(odd_expected));
    if (std::abs(c.even_const - even_expected) > tol ||
        std::abs(c.odd_const - odd_expected) > tol) {
        throw std::logic_error("change_of_variable_check: constants disagree");
    }
    return c;
}

DensityPair analytic_pair(PairKind kind, double mu) {
    const DeformationParams params(mu, 1.0);
    const double alpha = 2.0 * mu + 1.0;

    // sign * r^alpha B_nu(r^2) and its r-derivative
    struct Component {
        double sign;
        double nu;
        bool bessel_i;
        double alpha;
        double value(double r) const {
            const double x = r * r;
            const double b = bessel_i ? specfun::bessel_i(nu, x)
                                      : specfun::bessel_k(nu, x);
            return sign * std::pow(r, alpha) * b;
        }
        double derivative(double r) const {
            const double x = r * r;
            const double b = bessel_i ? specfun::bessel_i(nu, x)
                                      : specfun::bessel_k(nu, x);
            const double bp = bessel_i ? specfun::bessel_i_prime(nu, x)
                                       : specfun::bessel_k_prime(nu, x);
            return sign * (alpha * std::pow(r, alpha - 1.0) * b +
                           2.0 * std::pow(r, alpha + 1.0) * bp);
        }
    };

    auto make = [&](double sign, double nu, bool is_i, DensityKind tag) {
        Component c{sign, nu, is_i, alpha};
        RadialDensity d;
        d.kind = tag;
        d.params = params;
        d.scale = sign;
        d.eval = [c](double r) { return c.value(r); };
        d.deriv = [c](double r) { return c.derivative(r); };
        return d;
    };

    DensityPair pair;
    if (kind == PairKind::K) {
        pair.even = make(1.0, mu - 0.5, false, DensityKind::EvenK);
        pair.odd = make(1.0, mu + 0.5, false, DensityKind::OddK);
        pair.k_coeff = 1.0;
        pair.i_coeff = 0.0;
    } else {
        pair.even = make(-1.0, mu - 0.5, true, DensityKind::EvenI);
        pair.odd = make(1.0, mu + 0.5, true, DensityKind::OddI);
        pair.k_coeff = 0.0;
        pair.i_coeff = 1.0;
    }
    return pair;
}

std::vector<TrajectoryPoint> integrate_coupled(double mu, double r0, double ve0,
                                               double vo0, double r_end,
                                               double tol) {
    if (!(r0 > 0.0) || !(r0 < r_end) || !(r_end <= 4.0)) {
        throw std::domain_error("integrate_coupled requires 0 < r0 < rEnd <= 4");
    }
    if (!(tol >= 1e-12 && tol <= 1e-4)) {
        throw std::domain_error("integrate_coupled tolerance must be in [1e-12, 1e-4]");
    }

    using State = std::array<double, 2>;
    auto system = [mu](const State& y, State& dy, double r) {
        dy[0] = (4.0 * mu / r) * y[0] - 2.0 * r * y[1];
        dy[1] = -2.0 * r * y[0];
    };

    std::vector<TrajectoryPoint> trajectory;
    auto observer = [&trajectory](const State& y, double r) {
        trajectory.push_back({r, y[0], y[1]});
    };

    namespace ode = boost::numeric::odeint;
    State y{ve0, vo0};
    try {
        // purely relative control: step sizes depend only on the shape of the
        // solution, so trajectories scale exactly with the initial data
        auto stepper = ode::make_controlled<ode::runge_kutta_dopri5<State>>(0.0, tol);
        ode::integrate_adaptive(stepper, system, y, r0, r_end,
                                (r_end - r0) / 64.0, observer);
    } catch (const std::exception& e) {
        throw IntegrationError(std::string("integrate_coupled: ") + e.what());
    }
    if (trajectory.empty() || !std::isfinite(y[0]) || !std::isfinite(y[1])) {
        throw IntegrationError("integrate_coupled: non-finite state");
    }
    return trajectory;
}

TailClass classify_tail(const DensityPair& pair, const QuadratureSpec& q) {
    q.validate();
    const double floor = std::max(q.abs_tol, 1e-13);
    double lo = 1.0;
    double prev_even = -1.0, prev_odd = -1.0;
    double cum_even = 0.0, cum_odd = 0.0;
    for (int k = 0; k < 24; ++k) {
        const double hi = 2.0 * lo;
        double we, wo;
        try {
            we = finite_integral(
                [&](double r) { return std::abs(pair.even.eval(r)) * r; }, lo, hi, q);
            wo = finite_integral(
                [&](double r) { return std::abs(pair.odd.eval(r)) * r; }, lo, hi, q);
        } catch (const std::exception&) {
            return TailClass::Divergent;
        }
        if (!std::isfinite(we) || !std::isfinite(wo)) return TailClass::Divergent;
        if ((prev_even > floor && we > 2.0 * prev_even) ||
            (prev_odd > floor && wo > 2.0 * prev_odd)) {
            return TailClass::Divergent;
        }
        cum_even += we;
        cum_odd += wo;
        if (we <= std::max(floor, q.rel_tol * cum_even) &&
            wo <= std::max(floor, q.rel_tol * cum_odd)) {
            return TailClass::Integrable;
        }
        prev_even = we;
        prev_odd = wo;
        lo = hi;
    }
    throw InconclusiveError("classify_tail: undecided within window budget");
}

double equal_density_gap(const RadialDensity& f, double mu, double r) {
    DensityPair same;
    same.even = f;
    same.odd = f;
    const OdeResidual res = coupled_residual(same, mu, r);
    return res.res1 - res.res2;  // = -2 mu f(r) / r^2
}

}  // namespace musb
