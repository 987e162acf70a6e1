#ifndef TRICOMI_ERRORS_HPP
#define TRICOMI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tricomi {

// Argument outside a function's mathematical domain (negative x for J_nu,
// pole of Gamma, nonpositive |xi|, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Evaluation requested on the characteristic cone 9|x|^2 + 4y^3 = 0, where
// the fundamental solutions are not pointwise defined.
class SingularLocusError : public std::runtime_error {
public:
    explicit SingularLocusError(const std::string& what) : std::runtime_error(what) {}
};

// A quadrature, series-acceleration, or extrapolation engine failed to reach
// the requested tolerance.  Carries the partial estimate and the error bound
// the engine could certify.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double partial, double error_estimate)
        : std::runtime_error(what), partial(partial), error_estimate(error_estimate) {}
    double partial;
    double error_estimate;
};

} // namespace tricomi

#endif
