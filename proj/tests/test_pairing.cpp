#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "musb/errors.hpp"
#include "musb/holo.hpp"
#include "musb/odesys.hpp"
#include "musb/pairing.hpp"

using namespace musb;
using Coeff = HoloPoly::Coeff;

namespace {

const QuadratureSpec kQuad{};

}  // namespace

TEST_CASE("constant and cross terms") {
    const DeformationParams p(0.7, 1.0);
    // <1, 1> equals the total even mass, which is 1 after normalization
    const auto one = inner_product(HoloPoly({Coeff(1.0)}), HoloPoly({Coeff(1.0)}),
                                   p, kQuad);
    CHECK(one.real() == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(one.imag() == 0.0);

    // distinct degrees are orthogonal by the angular integral, exactly
    CHECK(inner_product(HoloPoly::monomial(1), HoloPoly::monomial(2), p, kQuad) ==
          Coeff(0.0));
    CHECK(inner_product(HoloPoly::monomial(2), HoloPoly::monomial(4), p, kQuad) ==
          Coeff(0.0));
}

TEST_CASE("conjugate linearity in the first slot") {
    const DeformationParams p(0.3, 1.0);
    const HoloPoly f = HoloPoly::monomial(2, Coeff(1.0, 2.0));
    const HoloPoly g = HoloPoly::monomial(2, Coeff(0.5, -1.0));
    const auto lhs = inner_product(f, g, p, kQuad);
    const auto base = inner_product(HoloPoly::monomial(2), HoloPoly::monomial(2),
                                    p, kQuad);
    const auto expected = std::conj(Coeff(1.0, 2.0)) * Coeff(0.5, -1.0) * base;
    CHECK(std::abs(lhs - expected) <= 1e-12 * std::abs(expected));
}

TEST_CASE("adjointness of the ladder pair") {
    const DeformationParams p(0.7, 1.0);
    for (auto [m, n] : {std::pair<unsigned, unsigned>{2, 3}, {3, 4}, {0, 1}, {4, 5}}) {
        const HoloPoly f = HoloPoly::monomial(m);
        const HoloPoly g = HoloPoly::monomial(n);
        const double scale =
            std::abs(inner_product(creation(f), g, p, kQuad)) + 1.0;
        CHECK(std::abs(adjointness_gap(f, g, p, kQuad)) <= 1e-8 * scale);
    }
    // mixed-parity general polynomials
    std::mt19937 rng(23u);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 5; ++i) {
        std::vector<Coeff> cf(5), cg(5);
        for (auto& c : cf) c = Coeff(u(rng), u(rng));
        for (auto& c : cg) c = Coeff(u(rng), u(rng));
        const HoloPoly f(cf), g(cg);
        CHECK(std::abs(adjointness_gap(f, g, p, kQuad)) <= 1e-7);
    }
}

TEST_CASE("divergent densities surface during pairing") {
    const DensityPair ipair = analytic_pair(PairKind::I, 0.8);
    CHECK_THROWS_AS(inner_product(HoloPoly({Coeff(1.0)}), HoloPoly({Coeff(1.0)}),
                                  ipair, kQuad),
                    DivergenceError);
    CHECK_THROWS_AS(adjointness_gap(HoloPoly::monomial(1), HoloPoly::monomial(2),
                                    ipair, 0.8, kQuad),
                    DivergenceError);
}

TEST_CASE("monomial norms match the deformed factorial") {
    CHECK(monomial_norm_sq(0, DeformationParams(0.7, 1.0), kQuad) ==
          doctest::Approx(1.0).epsilon(1e-8));
    CHECK(monomial_norm_sq(1, DeformationParams(0.5, 1.0), kQuad) ==
          doctest::Approx(2.0).epsilon(1e-8));
    CHECK(monomial_norm_sq(4, DeformationParams(0.0, 1.0), kQuad) ==
          doctest::Approx(24.0).epsilon(1e-7));
    for (double mu : {-0.4, 0.0, 0.7, 2.5}) {
        const DeformationParams p(mu, 1.0);
        for (unsigned n = 0; n <= 9; ++n) {
            CHECK(monomial_norm_sq(n, p, kQuad) ==
                  doctest::Approx(mu_factorial(n, mu)).epsilon(1e-7));
        }
    }
    // lambda scales each degree down by lambda^n
    const DeformationParams p2(0.7, 2.0);
    for (unsigned n = 0; n <= 6; ++n) {
        CHECK(monomial_norm_sq(n, p2, kQuad) ==
              doctest::Approx(mu_factorial(n, 0.7) / std::pow(2.0, n)).epsilon(1e-7));
    }
    CHECK_THROWS_AS(monomial_norm_sq(13, DeformationParams(0.7, 1.0), kQuad),
                    std::domain_error);
}

TEST_CASE("norm recursion ||z^{n+1}||^2 = [n+1]_mu ||z^n||^2 at lambda = 1") {
    const DeformationParams p(0.9, 1.0);
    double prev = monomial_norm_sq(0, p, kQuad);
    for (unsigned n = 0; n < 9; ++n) {
        const double next = monomial_norm_sq(n + 1, p, kQuad);
        CHECK(next == doctest::Approx(mu_number(n + 1, 0.9) * prev).epsilon(1e-7));
        prev = next;
    }
}

TEST_CASE("positive definiteness on random polynomials") {
    std::mt19937 rng(31u);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const DeformationParams p(0.4, 1.0);
    for (int i = 0; i < 20; ++i) {
        std::vector<Coeff> c(9);
        for (auto& x : c) x = Coeff(u(rng), u(rng));
        const HoloPoly f(c);
        const auto ip = inner_product(f, f, p, kQuad);
        CHECK(ip.real() > 0.0);
        CHECK(std::abs(ip.imag()) <= 1e-12 * ip.real());
    }
}

TEST_CASE("mu = 0 collapses to the one-measure Gaussian pairing") {
    const DeformationParams p0(0.0, 1.0);
    DensityPair gauss;
    gauss.even = make_gaussian_density();
    gauss.odd = make_gaussian_density();
    std::mt19937 rng(37u);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 5; ++i) {
        std::vector<Coeff> cf(6), cg(6);
        for (auto& c : cf) c = Coeff(u(rng), u(rng));
        for (auto& c : cg) c = Coeff(u(rng), u(rng));
        const HoloPoly f(cf), g(cg);
        const auto two = inner_product(f, g, p0, kQuad);
        const auto one = inner_product(f, g, gauss, kQuad);
        CHECK(std::abs(two - one) <= 1e-8 * (1.0 + std::abs(one)));
    }
}
