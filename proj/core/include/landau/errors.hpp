#pragma once

#include <stdexcept>
#include <string>

namespace landau {

// Input outside an operation's mathematical domain (b <= 0, gamma <= 0, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The ODE integrator could not continue (Gamma^2 <= 0, step underflow, NaN).
class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A grid is too narrow to hold a Hermite-Gauss mode's tail.
class TailBoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The propagated wave function reached the grid edge.
class BoundaryLeakError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Scenario document failed schema validation.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace landau
