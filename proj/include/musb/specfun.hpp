#pragma once

// Gamma and modified Bessel functions I_nu, K_nu for real order
// nu in (-1.5, inf) and argument x in (0, ~705], with first and second
// derivatives. Everything here is a pure function of its arguments.

namespace musb::specfun {

// Euler gamma function, positive arguments only.
double gamma_fn(double x);

// Modified Bessel function of the first kind. Throws std::domain_error for
// x <= 0 or unsupported order, std::range_error where e^x would overflow.
double bessel_i(double nu, double x);

// Macdonald function (modified Bessel function of the third kind).
// Symmetric in the order: bessel_k(nu, x) == bessel_k(-nu, x).
// Underflows to 0 for very large x; that is accepted, not an error.
double bessel_k(double nu, double x);

// First derivatives via the order recurrences
//   I'_nu = I_{nu+1} + (nu/x) I_nu,   K'_nu = -K_{nu+1} + (nu/x) K_nu.
double bessel_i_prime(double nu, double x);
double bessel_k_prime(double nu, double x);

// Second derivatives, obtained by differentiating the recurrences again.
double bessel_i_second(double nu, double x);
double bessel_k_second(double nu, double x);

// The two lowering identities used to match solution pairs of the coupled
// density system:
//   KDown:  d/ds ( s^nu K_nu(s) ) = -s^nu K_{nu-1}(s)
//   IDown:  d/ds ( s^nu I_nu(s) ) =  s^nu I_{nu-1}(s)
// Returns |LHS - RHS| with the left side evaluated through bessel_*_prime.
enum class DerivIdentity { KDown, IDown };
double derivative_identity_residual(DerivIdentity kind, double nu, double s);

namespace detail {

// Individual evaluation branches, exposed so the crossover bands can be
// tested directly.
double i_series(double nu, double x);       // ascending series, any x
double i_asymptotic(double nu, double x);   // large-x compound expansion
double k_reflection(double nu, double x);   // (pi/2)(I_{-nu}-I_nu)/sin(nu pi)
double k_integer_series(int n, double x);   // small-x series with digamma terms
double k_cosh_integral(double nu, double x);// trapezoid on the cosh integral

}  // namespace detail

}  // namespace musb::specfun
