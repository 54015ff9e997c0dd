#include "musb/holo.hpp"

#include <cmath>
#include <stdexcept>

namespace musb {

namespace {

void check_mu(double mu) {
    if (!std::isfinite(mu) || mu <= -0.5) {
        throw std::domain_error("mu must be > -1/2");
    }
}

std::vector<HoloPoly::Coeff> trimmed(std::vector<HoloPoly::Coeff> c) {
    while (!c.empty() && c.back() == HoloPoly::Coeff(0.0)) c.pop_back();
    return c;
}

}  // namespace

HoloPoly::HoloPoly(std::vector<Coeff> coeffs) : coeffs_(trimmed(std::move(coeffs))) {}

HoloPoly HoloPoly::monomial(std::size_t degree, Coeff c) {
    std::vector<Coeff> v(degree + 1, Coeff(0.0));
    v[degree] = c;
    return HoloPoly(std::move(v));
}

HoloPoly::Coeff HoloPoly::eval(Coeff z) const {
    Coeff acc(0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

HoloPoly HoloPoly::operator+(const HoloPoly& other) const {
    std::vector<Coeff> v(std::max(coeffs_.size(), other.coeffs_.size()), Coeff(0.0));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = coeff(k) + other.coeff(k);
    return HoloPoly(std::move(v));
}

HoloPoly HoloPoly::operator-(const HoloPoly& other) const {
    return *this + other * Coeff(-1.0);
}

HoloPoly HoloPoly::operator*(Coeff s) const {
    std::vector<Coeff> v = coeffs_;
    for (auto& c : v) c *= s;
    return HoloPoly(std::move(v));
}

HoloPoly parity_op(const HoloPoly& f) {
    std::vector<HoloPoly::Coeff> v = f.coeffs();
    for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
    return HoloPoly(std::move(v));
}

std::pair<HoloPoly, HoloPoly> parity_split(const HoloPoly& f) {
    std::vector<HoloPoly::Coeff> even(f.coeffs().size(), 0.0);
    std::vector<HoloPoly::Coeff> odd(f.coeffs().size(), 0.0);
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
        (k % 2 == 0 ? even : odd)[k] = f.coeffs()[k];
    }
    return {HoloPoly(std::move(even)), HoloPoly(std::move(odd))};
}

HoloPoly creation(const HoloPoly& f) {
    if (f.is_zero()) return f;
    std::vector<HoloPoly::Coeff> v(f.coeffs().size() + 1, 0.0);
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) v[k + 1] = f.coeffs()[k];
    return HoloPoly(std::move(v));
}

HoloPoly annihilation(const HoloPoly& f, double mu) {
    check_mu(mu);
    if (f.degree() < 1) return HoloPoly();
    std::vector<HoloPoly::Coeff> v(f.coeffs().size() - 1, 0.0);
    for (std::size_t k = 0; k < v.size(); ++k) {
        v[k] = mu_number(static_cast<unsigned>(k + 1), mu) * f.coeffs()[k + 1];
    }
    return HoloPoly(std::move(v));
}

HoloPoly commutator_action(const HoloPoly& f, double mu) {
    return annihilation(creation(f), mu) - creation(annihilation(f, mu));
}

double mu_number(unsigned n, double mu) {
    check_mu(mu);
    return static_cast<double>(n) + (n % 2 == 1 ? 2.0 * mu : 0.0);
}

double mu_factorial(unsigned n, double mu) {
    check_mu(mu);
    double p = 1.0;
    for (unsigned k = 1; k <= n; ++k) p *= mu_number(k, mu);
    return p;
}

}  // namespace musb
