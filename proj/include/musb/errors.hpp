#pragma once

#include <stdexcept>
#include <string>

namespace musb {

// Quadrature ran out of budget; carries the best estimate and its error bound.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, double estimate, double error_bound)
        : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}

    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

// Partial sums of a semi-infinite integral are not Cauchy (e.g. I-type densities).
class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Tail classification could not decide within the given budget.
class InconclusiveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Adaptive ODE stepping failed (step underflow or non-finite state).
class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace musb
