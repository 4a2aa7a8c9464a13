#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace darboux {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax or lexical problem in an expression source string.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : Error(message + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}

    /// Byte offset into the source string where the problem starts.
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Evaluation outside the natural domain of a function (log of a
/// non-positive value, division by zero, overflow, ...).
class EvalDomainError : public Error {
public:
    using Error::Error;
};

/// |r_u x r_v| fell below the regularity threshold at an evaluation point.
class DegenerateChartError : public Error {
public:
    using Error::Error;
};

/// The stacked rotation-field system left a residual too large to accept:
/// the candidate field is not a bending (or is numerically inconsistent).
class ResidualError : public Error {
public:
    ResidualError(const std::string& message, double residual)
        : Error(message), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// Adaptive quadrature failed to reach the requested tolerance.
class QuadratureError : public Error {
public:
    using Error::Error;
};

/// Potential samples recomputed along an alternate path disagreed beyond
/// tolerance; the field is not conservative at the resolved accuracy.
class PathIndependenceError : public Error {
public:
    using Error::Error;
};

/// Malformed or inconsistent scenario input.
class ScenarioError : public Error {
public:
    using Error::Error;
};

} // namespace darboux
