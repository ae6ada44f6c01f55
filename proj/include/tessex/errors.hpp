#pragma once

#include <stdexcept>
#include <string>

namespace tessex {

/// Invalid mathematical domain (log argument <= 1, rho too small, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Input violates a geometric precondition (too few points, collinear, duplicate).
struct DegenerateInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A numeric root solve failed to converge; indicates a bracketing bug.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The conditioning structure does not fit in the simulation window.
struct WindowTooSmall : std::runtime_error {
    double required_halfwidth;
    explicit WindowTooSmall(double required)
        : std::runtime_error("simulation window too small; required half-width " +
                             std::to_string(required)),
          required_halfwidth(required) {}
};

/// A counted cell could not be certified against the guard window.
struct GuardViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InsufficientData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateTheta : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tessex
