#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "musb/specfun.hpp"

using namespace musb::specfun;

namespace {

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) {
        g[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1));
    }
    return g;
}

// elementary closed forms for half-integer orders
double i_half(double x) { return std::sqrt(2.0 / (M_PI * x)) * std::sinh(x); }
double i_mhalf(double x) { return std::sqrt(2.0 / (M_PI * x)) * std::cosh(x); }
double i_3half(double x) {
    return std::sqrt(2.0 / (M_PI * x)) * (std::cosh(x) - std::sinh(x) / x);
}
double k_half(double x) { return std::sqrt(M_PI / (2.0 * x)) * std::exp(-x); }
double k_3half(double x) { return k_half(x) * (1.0 + 1.0 / x); }

// centered finite difference, the independent derivative oracle
template <typename F>
double fd(F f, double x) {
    const double h = 1e-5 * std::max(1.0, x);
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace

TEST_CASE("gamma function") {
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(gamma_fn(4.0) == doctest::Approx(6.0).epsilon(1e-13));
    CHECK(gamma_fn(0.5) == doctest::Approx(1.772453850905516).epsilon(1e-13));
    CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(-1.3), std::domain_error);
}

TEST_CASE("bessel_i values and domain") {
    // sqrt(2/(pi x)) sinh(x) at x = 1
    CHECK(bessel_i(0.5, 1.0) == doctest::Approx(0.9376748882454959).epsilon(1e-12));
    // series constant term: I_0 -> 1 as x -> 0+
    CHECK(bessel_i(0.0, 1e-8) == doctest::Approx(1.0).epsilon(1e-12));
    for (double x : {0.1, 1.0, 10.0}) CHECK(bessel_i(1.5, x) > 0.0);
    CHECK_THROWS_AS(bessel_i(0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_i(0.5, -1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_i(-1.6, 1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_i(0.5, 800.0), std::range_error);
}

TEST_CASE("bessel_k values, symmetry, domain") {
    CHECK(bessel_k(0.5, 1.0) == doctest::Approx(0.4610685044478945).epsilon(1e-10));
    CHECK(bessel_k(-0.5, 2.0) == bessel_k(0.5, 2.0));
    for (double x : {0.1, 1.0, 10.0}) CHECK(bessel_k(0.3, x) > 0.0);
    CHECK_THROWS_AS(bessel_k(0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k(0.5, -2.0), std::domain_error);
}

TEST_CASE("half-integer closed forms to 1e-12") {
    for (double x : log_grid(0.05, 30.0, 40)) {
        CHECK(bessel_i(0.5, x) == doctest::Approx(i_half(x)).epsilon(1e-12));
        CHECK(bessel_i(-0.5, x) == doctest::Approx(i_mhalf(x)).epsilon(1e-12));
        CHECK(bessel_i(1.5, x) == doctest::Approx(i_3half(x)).epsilon(1e-12));
        CHECK(bessel_k(0.5, x) == doctest::Approx(k_half(x)).epsilon(1e-12));
        CHECK(bessel_k(-0.5, x) == doctest::Approx(k_half(x)).epsilon(1e-12));
        CHECK(bessel_k(1.5, x) == doctest::Approx(k_3half(x)).epsilon(1e-12));
    }
}

TEST_CASE("order symmetry of K") {
    for (double nu : {0.05, 0.25, 0.7, 1.0, 1.3, 1.49}) {
        for (double x : {0.05, 0.5, 1.0, 5.0, 20.0}) {
            CHECK(bessel_k(nu, x) ==
                  doctest::Approx(bessel_k(-nu, x)).epsilon(1e-12));
        }
    }
}

TEST_CASE("derivatives agree with finite differences") {
    for (double nu : {0.0, 0.25, 0.5, 1.3, 2.5, -0.9}) {
        for (double x : {0.3, 1.0, 3.7, 11.0}) {
            const double di = fd([nu](double t) { return bessel_i(nu, t); }, x);
            const double dk = fd([nu](double t) { return bessel_k(nu, t); }, x);
            CHECK(std::abs(bessel_i_prime(nu, x) - di) <= 1e-7 * std::max(1.0, std::abs(di)));
            CHECK(std::abs(bessel_k_prime(nu, x) - dk) <= 1e-7 * std::max(1.0, std::abs(dk)));
        }
    }
    // I'_0 = I_1
    for (double x : {0.2, 1.0, 5.0, 20.0}) {
        CHECK(bessel_i_prime(0.0, x) == doctest::Approx(bessel_i(1.0, x)).epsilon(1e-12));
    }
    // K is strictly decreasing
    for (double nu : {0.0, 0.5, 1.3}) {
        for (double x : {0.2, 1.0, 5.0}) CHECK(bessel_k_prime(nu, x) < 0.0);
    }
}

TEST_CASE("lowering identities") {
    // |LHS - RHS| <= 1e-8 (1 + |RHS|)
    {
        const double nu = 1.2, s = 1.3;
        const double rhs = std::abs(std::pow(s, nu) * bessel_k(nu - 1.0, s));
        CHECK(derivative_identity_residual(DerivIdentity::KDown, nu, s) <=
              1e-8 * (1.0 + rhs));
    }
    {
        const double nu = 1.5, s = 2.0;
        // closed-form half-integer oracle for the right side
        const double rhs = std::pow(s, nu) * i_half(s);
        CHECK(std::abs(rhs - std::pow(s, nu) * bessel_i(0.5, s)) <= 1e-12 * rhs);
        CHECK(derivative_identity_residual(DerivIdentity::IDown, nu, s) <=
              1e-8 * (1.0 + rhs));
    }
    {
        // closed-form K_{1/2} = K_{-1/2} makes this one tight
        const double nu = 0.5, s = 1.0;
        const double rhs = std::abs(-std::pow(s, nu) * k_half(s));
        CHECK(derivative_identity_residual(DerivIdentity::KDown, nu, s) <=
              1e-10 * (1.0 + rhs));
    }
}

TEST_CASE("Wronskian identity: I K' - I' K = -1/x") {
    for (double nu : {0.0, 0.25, 0.5, 1.3, 2.5}) {
        for (double x : log_grid(0.05, 30.0, 50)) {
            const double w = bessel_i(nu, x) * bessel_k_prime(nu, x) -
                             bessel_i_prime(nu, x) * bessel_k(nu, x);
            CHECK(w == doctest::Approx(-1.0 / x).epsilon(1e-9));
        }
    }
}

TEST_CASE("I branch agreement in the overlap band") {
    // the asymptotic branch reaches 1e-12 only from x ~ 14 upward; the series
    // is valid everywhere, so the branches are compared on [14, 18]
    for (double nu : {0.0, 0.25, 0.5, 1.3, 2.5, 3.0}) {
        for (double x : {14.0, 15.0, 16.0, 17.0, 18.0}) {
            CHECK(detail::i_series(nu, x) ==
                  doctest::Approx(detail::i_asymptotic(nu, x)).epsilon(1e-12));
        }
    }
}

TEST_CASE("K branch agreement near the reflection/integral crossover") {
    for (double nu : {0.1, 0.45, 0.9, 1.3, 2.2}) {
        for (double x : {0.5, 1.0, 1.9, 2.0}) {
            CHECK(detail::k_reflection(nu, x) ==
                  doctest::Approx(detail::k_cosh_integral(nu, x)).epsilon(1e-12));
        }
    }
    for (int n : {0, 1, 2, 3}) {
        for (double x : {0.1, 1.0, 2.0}) {
            CHECK(detail::k_integer_series(n, x) ==
                  doctest::Approx(detail::k_cosh_integral(static_cast<double>(n), x))
                      .epsilon(1e-12));
        }
    }
}

TEST_CASE("positivity on the supported range") {
    for (double nu : {-0.9, -0.5, 0.0, 0.5, 1.3, 2.5, 3.0}) {
        for (double x : log_grid(1e-3, 50.0, 30)) {
            CHECK(bessel_i(nu, x) > 0.0);
            CHECK(bessel_k(nu, x) > 0.0);
        }
    }
}
