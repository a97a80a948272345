#pragma once

#include <stdexcept>
#include <string>

namespace quotdeg {

// Input outside an operation's parameter domain (bad n/d/r/g, composite p, ...).
struct ParameterError : std::invalid_argument {
    explicit ParameterError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Two residue elements with different moduli were combined.
struct ModulusMismatch : std::invalid_argument {
    explicit ModulusMismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

// Attempt to invert a zero divisor of a quotient ring. Callers treat this
// as a logic error: it signals coincident roots or a wrong modulus.
struct NonInvertible : std::domain_error {
    explicit NonInvertible(const std::string& msg) : std::domain_error(msg) {}
};

// The degree formula was asked for a positive-dimensional parameter pack.
struct DimensionPositive : std::domain_error {
    explicit DimensionPositive(const std::string& msg) : std::domain_error(msg) {}
};

// The sign exponent of the degree formula failed to be an integer. Cannot
// happen for a zero-dimensional pack; indicates corrupted parameters.
struct NonIntegerSign : std::logic_error {
    explicit NonIntegerSign(const std::string& msg) : std::logic_error(msg) {}
};

// An exact computation produced something that should have been a rational
// integer but was not (internal consistency failure, never user error).
struct NonRationalResult : std::logic_error {
    explicit NonRationalResult(const std::string& msg) : std::logic_error(msg) {}
};

// A consistency assertion between two independent evaluation paths failed.
struct CrossCheckFailure : std::logic_error {
    explicit CrossCheckFailure(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace quotdeg
