#pragma once

#include <stdexcept>
#include <string>

namespace aos {

/// Invalid or inconsistent configuration input (bad probabilities, size
/// mismatches, malformed config files). Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure inside a solver (non-convergence, infeasibility,
/// singular systems). Maps to CLI exit code 3.
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// The adaptive AoS truncation bound hit its ceiling while the probability
/// mass at the bound was still non-negligible.
class TruncationError : public SolverError {
public:
    TruncationError(const std::string& what, double cap_mass)
        : SolverError(what), cap_mass(cap_mass) {}
    double cap_mass;
};

}  // namespace aos
