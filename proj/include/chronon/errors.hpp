#pragma once

#include <stdexcept>
#include <string>

namespace chronon {

/// Invalid physical input (negative mass, beta >= 1, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A derivative jet is too short for the requested operation.
struct JetLengthError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed or inconsistent run configuration.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A finite-difference step failed to produce a usable state.
struct StepError : std::runtime_error {
    StepError(const std::string& what, double residual_, int iterations_)
        : std::runtime_error(what), residual(residual_), iterations(iterations_) {}
    double residual = 0.0;
    int iterations = 0;
};

/// Non-finite values encountered while evaluating a phase-space function.
struct EvaluationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace chronon
