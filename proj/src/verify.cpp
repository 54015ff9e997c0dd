#include "musb/verify.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <ctime>
#include <random>

#include "musb/errors.hpp"
#include "musb/holo.hpp"
#include "musb/odesys.hpp"
#include "musb/pairing.hpp"
#include "musb/specfun.hpp"

namespace musb {

namespace {

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    const double a = std::log(lo), b = std::log(hi);
    for (int i = 0; i < n; ++i) {
        g[i] = std::exp(a + (b - a) * i / (n - 1));
    }
    return g;
}

std::vector<double> linear_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
    return g;
}

// Each check evaluates a worst-case metric and compares it to its tolerance.
class Battery {
public:
    Battery(const DeformationParams& params, double tol_override)
        : params_(params), mu_(params.mu), tol_override_(tol_override) {
        quad_.rel_tol = 1e-11;
    }

    std::vector<CheckResult> run() {
        check("half-integer-closed-forms", 1e-12, [this] { return half_integer_closed_forms(); });
        check("wronskian", 1e-9, [this] { return wronskian(); });
        check("k-order-symmetry", 1e-12, [this] { return k_order_symmetry(); });
        if (mu_ == 0.0) {
            check("gaussian-reduction", 1e-10, [this] { return gaussian_reduction(); });
        }
        check("even-mass-normalization", 1e-8, [this] { return even_mass(); });
        check("odd-mass-closed-form", 1e-8, [this] { return odd_mass(); });
        check("coupled-residuals", 1e-9, [this] { return coupled_residuals(); });
        check("decoupled-residuals", 1e-7, [this] { return decoupled_residuals(); });
        check("ode-integrator-crosscheck", 1e-6, [this] { return ode_crosscheck(); });
        check("adjointness", 1e-8, [this] { return adjointness(); });
        check("commutation-relation", 1e-14, [this] { return commutation(); });
        check("monomial-norms", 1e-7, [this] { return monomial_norms(); });
        check("tail-classification", 0.5, [this] { return tail_classification(); });
        check("single-measure-obstruction", 1e-9, [this] { return single_measure_obstruction(); });
        check("change-of-variable-algebra", 1e-13, [this] { return change_of_variable(); });
        return results_;
    }

private:
    template <typename F>
    void check(const char* name, double default_tol, F&& metric_fn) {
        CheckResult res;
        res.name = name;
        res.tolerance = tol_override_ > 0.0 ? tol_override_ : default_tol;
        try {
            res.metric = metric_fn();
            res.status = res.metric <= res.tolerance ? "pass" : "fail";
        } catch (const std::exception&) {
            res.metric = std::numeric_limits<double>::quiet_NaN();
            res.status = "error";
        }
        results_.push_back(std::move(res));
    }

    std::vector<double> test_orders() const {
        return {0.0, 0.25, 0.5, 1.3, 2.5, std::abs(mu_ - 0.5), mu_ + 0.5};
    }

    double half_integer_closed_forms() const {
        double worst = 0.0;
        for (double x : log_grid(0.05, 30.0, 25)) {
            const double pref_i = std::sqrt(2.0 / (M_PI * x));
            const double pref_k = std::sqrt(M_PI / (2.0 * x)) * std::exp(-x);
            const double i_half = pref_i * std::sinh(x);
            const double i_three =
                pref_i * (std::cosh(x) - std::sinh(x) / x);
            const double k_three = pref_k * (1.0 + 1.0 / x);
            worst = std::max(worst,
                             std::abs(specfun::bessel_i(0.5, x) / i_half - 1.0));
            worst = std::max(worst,
                             std::abs(specfun::bessel_i(1.5, x) / i_three - 1.0));
            worst = std::max(worst,
                             std::abs(specfun::bessel_k(0.5, x) / pref_k - 1.0));
            worst = std::max(worst,
                             std::abs(specfun::bessel_k(-0.5, x) / pref_k - 1.0));
            worst = std::max(worst,
                             std::abs(specfun::bessel_k(1.5, x) / k_three - 1.0));
        }
        return worst;
    }

    double wronskian() const {
        double worst = 0.0;
        for (double nu : test_orders()) {
            for (double x : log_grid(0.05, 30.0, 50)) {
                const double w = specfun::bessel_i(nu, x) * specfun::bessel_k_prime(nu, x) -
                                 specfun::bessel_i_prime(nu, x) * specfun::bessel_k(nu, x);
                worst = std::max(worst, std::abs(w * x + 1.0));
            }
        }
        return worst;
    }

    double k_order_symmetry() const {
        double worst = 0.0;
        for (double nu : {0.25, 0.5, 0.9, 1.3, std::abs(mu_ - 0.5)}) {
            if (nu >= 1.5) continue;  // -nu must stay in the supported range
            for (double x : {0.05, 0.5, 1.0, 5.0, 20.0}) {
                const double a = specfun::bessel_k(nu, x);
                const double b = specfun::bessel_k(-nu, x);
                worst = std::max(worst, std::abs(a / b - 1.0));
            }
        }
        return worst;
    }

    double gaussian_reduction() const {
        // at mu = 0 both densities must collapse to (lambda/pi) e^{-lambda r^2}
        double worst = 0.0;
        const double lam = params_.lambda;
        for (double r : linear_grid(0.1, 4.0, 50)) {
            const double ref = lam / M_PI * std::exp(-lam * r * r);
            worst = std::max(worst, std::abs(density_even(params_, r) - ref));
            worst = std::max(worst, std::abs(density_odd(params_, r) - ref));
        }
        return worst;
    }

    double even_mass() const {
        return std::abs(total_mass(make_density_even(params_), quad_) - 1.0);
    }

    double odd_mass() const {
        // closed form sqrt(pi) Gamma(mu+1) / Gamma(mu+1/2), independent of lambda
        const double expected = std::sqrt(M_PI) * specfun::gamma_fn(mu_ + 1.0) /
                                specfun::gamma_fn(mu_ + 0.5);
        return std::abs(total_mass(make_density_odd(params_), quad_) / expected - 1.0);
    }

    double coupled_residuals() const {
        double worst = 0.0;
        for (PairKind kind : {PairKind::K, PairKind::I}) {
            const DensityPair pair = analytic_pair(kind, mu_);
            for (double r : linear_grid(0.2, 2.5, 30)) {
                const OdeResidual res = coupled_residual(pair, mu_, r);
                const double scale =
                    std::abs(pair.even.eval(r)) + std::abs(pair.odd.eval(r));
                worst = std::max(worst, std::max(std::abs(res.res1),
                                                 std::abs(res.res2)) / scale);
            }
        }
        return worst;
    }

    double decoupled_residuals() const {
        double worst = 0.0;
        for (PairKind kind : {PairKind::K, PairKind::I}) {
            const DensityPair pair = analytic_pair(kind, mu_);
            for (double r : linear_grid(0.2, 2.5, 30)) {
                for (Parity p : {Parity::Even, Parity::Odd}) {
                    const RadialDensity& f =
                        (p == Parity::Even) ? pair.even : pair.odd;
                    const double res = decoupled_residual(p, f, mu_, r);
                    // scale by the magnitude of the equation's largest term
                    const double scale = 4.0 * r * r * std::abs(f.eval(r)) +
                                         (1.0 + 4.0 * std::abs(mu_)) / r *
                                             std::abs(f.deriv(r)) + 1e-300;
                    worst = std::max(worst, std::abs(res) / scale);
                }
            }
        }
        return worst;
    }

    double ode_crosscheck() const {
        const DensityPair ref = analytic_pair(PairKind::K, mu_);
        const double r0 = 0.5;
        const auto traj = integrate_coupled(mu_, r0, ref.even.eval(r0),
                                            ref.odd.eval(r0), 2.0, 1e-12);
        double worst = 0.0;
        for (const TrajectoryPoint& p : traj) {
            worst = std::max(worst,
                             std::abs(p.even / ref.even.eval(p.r) - 1.0));
            worst = std::max(worst, std::abs(p.odd / ref.odd.eval(p.r) - 1.0));
        }
        return worst;
    }

    double adjointness() const {
        // at general lambda the creation operator is adjoint to a_mu / lambda
        double worst = 0.0;
        for (unsigned m = 0; m <= 8; ++m) {
            const HoloPoly f = HoloPoly::monomial(m);
            const HoloPoly g = HoloPoly::monomial(m + 1);
            const std::complex<double> lhs = inner_product(creation(f), g, params_, quad_);
            const std::complex<double> rhs =
                inner_product(f, annihilation(g, mu_), params_, quad_) / params_.lambda;
            worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
        }
        return worst;
    }

    double commutation() const {
        std::mt19937 rng(20260823u);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<HoloPoly::Coeff> c(13);
            for (auto& x : c) x = HoloPoly::Coeff(u(rng), u(rng));
            const HoloPoly f(c);
            const HoloPoly got = commutator_action(f, mu_);
            const HoloPoly expected = f + parity_op(f) * (2.0 * mu_);
            for (std::size_t k = 0; k < 13; ++k) {
                worst = std::max(worst, std::abs(got.coeff(k) - expected.coeff(k)));
            }
        }
        return worst;
    }

    double monomial_norms() const {
        double worst = 0.0;
        for (unsigned n = 0; n <= 10; ++n) {
            const double expected =
                mu_factorial(n, mu_) / std::pow(params_.lambda, n);
            worst = std::max(
                worst, std::abs(monomial_norm_sq(n, params_, quad_) / expected - 1.0));
        }
        return worst;
    }

    double tail_classification() const {
        const bool ok =
            classify_tail(analytic_pair(PairKind::K, mu_), quad_) == TailClass::Integrable &&
            classify_tail(analytic_pair(PairKind::I, mu_), quad_) == TailClass::Divergent;
        return ok ? 0.0 : 1.0;
    }

    double single_measure_obstruction() const {
        const RadialDensity g = make_gaussian_density();
        const double r = 1.0;
        const double expected = -2.0 * mu_ * g.eval(r) / (r * r);
        return std::abs(equal_density_gap(g, mu_, r) - expected);
    }

    double change_of_variable() const {
        const ChangeOfVariable c = change_of_variable_check(mu_);
        const double even_expected = -4.0 * (mu_ - 0.5) * (mu_ - 0.5);
        const double odd_expected = -4.0 * (mu_ + 0.5) * (mu_ + 0.5);
        return std::max(std::abs(c.even_const - even_expected),
                        std::abs(c.odd_const - odd_expected));
    }

    DeformationParams params_;
    double mu_;
    double tol_override_;
    QuadratureSpec quad_;
    std::vector<CheckResult> results_;
};

std::string current_timestamp() {
    if (const char* fixed = std::getenv("MUSB_TIMESTAMP")) return fixed;
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

}  // namespace

bool VerificationReport::all_pass() const {
    for (const CheckResult& c : checks) {
        if (c.status != "pass") return false;
    }
    return !checks.empty();
}

VerificationReport run_checks(const DeformationParams& params,
                              double tol_override) {
    VerificationReport report;
    report.params = params;
    report.checks = Battery(params, tol_override).run();
    report.timestamp = current_timestamp();
    report.tool_version = kToolVersion;
    return report;
}

std::string report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["params"] = {{"mu", report.params.mu}, {"lambda", report.params.lambda}};
    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& c : report.checks) {
        j["checks"].push_back({{"name", c.name},
                               {"status", c.status},
                               {"metric", c.metric},
                               {"tolerance", c.tolerance}});
    }
    j["timestamp"] = report.timestamp;
    j["toolVersion"] = report.tool_version;
    return j.dump(2) + "\n";
}

}  // namespace musb
