#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

namespace musb {

// A finite complex-coefficient polynomial in z, standing in for a holomorphic
// function. Coefficients are kept in canonical form (trailing zeros trimmed).
class HoloPoly {
public:
    using Coeff = std::complex<double>;

    HoloPoly() = default;
    explicit HoloPoly(std::vector<Coeff> coeffs);

    static HoloPoly monomial(std::size_t degree, Coeff c = 1.0);

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Coeff coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Coeff(0.0);
    }
    const std::vector<Coeff>& coeffs() const { return coeffs_; }

    Coeff eval(Coeff z) const;

    HoloPoly operator+(const HoloPoly& other) const;
    HoloPoly operator-(const HoloPoly& other) const;
    HoloPoly operator*(Coeff s) const;
    bool operator==(const HoloPoly& other) const { return coeffs_ == other.coeffs_; }

private:
    std::vector<Coeff> coeffs_;
};

// (Jf)(z) = f(-z): coefficient k picks up (-1)^k.
HoloPoly parity_op(const HoloPoly& f);

// f = f_e + f_o with f_e = (f + Jf)/2, f_o = (f - Jf)/2.
std::pair<HoloPoly, HoloPoly> parity_split(const HoloPoly& f);

// Creation operator: f(z) |-> z f(z).
HoloPoly creation(const HoloPoly& f);

// Annihilation (Dunkl) operator: df/dz + (mu/z)(f(z) - f(-z)), realized as
// the coefficient rule  out_k = [k+1]_mu * c_{k+1}  (no division by z).
HoloPoly annihilation(const HoloPoly& f, double mu);

// a_mu(a*_mu f) - a*_mu(a_mu f); equals f + 2 mu Jf.
HoloPoly commutator_action(const HoloPoly& f, double mu);

// The mu-deformed integer [n]_mu = n + 2 mu (n odd), n (n even),
// and the mu-deformed factorial prod_{k=1}^n [k]_mu.
double mu_number(unsigned n, double mu);
double mu_factorial(unsigned n, double mu);

}  // namespace musb
