#pragma once

#include <vector>

#include "musb/measures.hpp"

namespace musb {

// Residuals of the coupled first-order system at one radius:
//   res1 = nu_o + (1/2r) nu_e' - (2 mu / r^2) nu_e
//   res2 = nu_e + (1/2r) nu_o'
struct OdeResidual {
    double r;
    double res1;
    double res2;
};

OdeResidual coupled_residual(const DensityPair& pair, double mu, double r);

enum class Parity { Even, Odd };

// Left-hand side of the decoupled second-order equation of the given parity:
//   even: f'' - ((1+4mu)/r) f' + (8mu/r^2 - 4r^2) f
//   odd:  f'' - ((1+4mu)/r) f' - 4r^2 f
// f'' is taken by centered differences of f.deriv, step 1e-5 * max(1, r).
double decoupled_residual(Parity parity, const RadialDensity& f, double mu,
                          double r);

// Left-hand side of Bessel's modified equation u'' + u'/x - (1 + nu^2/x^2) u,
// with u = I_nu or K_nu and all derivatives from the order recurrences.
enum class BesselKind { I, K };
double modified_bessel_residual(double nu, BesselKind kind, double x);

// The substitution nu(r) = r^alpha phi(r^2) with alpha = 2 mu + 1 turns the
// decoupled equations into Bessel's modified equation; this records the
// resulting exponent, orders and the two constant terms.
struct ChangeOfVariable {
    double alpha;
    double even_order;   // mu - 1/2
    double odd_order;    // mu + 1/2
    double even_const;   // alpha^2 - 2 alpha - 4 alpha mu + 8 mu = -4 (mu-1/2)^2
    double odd_const;    // alpha^2 - 2 alpha - 4 alpha mu        = -4 (mu+1/2)^2
};
ChangeOfVariable change_of_variable_check(double mu);

// The two analytic solution pairs of the coupled system:
//   K: (  r^{2mu+1} K_{mu-1/2}(r^2),  r^{2mu+1} K_{mu+1/2}(r^2) )
//   I: ( -r^{2mu+1} I_{mu-1/2}(r^2),  r^{2mu+1} I_{mu+1/2}(r^2) )
enum class PairKind { K, I };
DensityPair analytic_pair(PairKind kind, double mu);

struct TrajectoryPoint {
    double r;
    double even;
    double odd;
};

// Adaptive Runge-Kutta (Dormand-Prince 5(4)) integration of the coupled
// system in explicit form
//   nu_e' = (4 mu / r) nu_e - 2 r nu_o,   nu_o' = -2 r nu_e
// from (r0, ve0, vo0) to rEnd. The last sample lands exactly on rEnd.
std::vector<TrajectoryPoint> integrate_coupled(double mu, double r0, double ve0,
                                               double vo0, double r_end,
                                               double tol);

enum class TailClass { Integrable, Divergent };

// Ratio test on doubling windows of int |nu| r dr starting at r = 1.
// Throws InconclusiveError when the budget runs out undecided.
TailClass classify_tail(const DensityPair& pair, const QuadratureSpec& q);

// res1 - res2 of coupled_residual with both components equal to f;
// analytically this is -2 mu f(r) / r^2, hence zero only for mu = 0 or f = 0.
double equal_density_gap(const RadialDensity& f, double mu, double r);

}  // namespace musb
