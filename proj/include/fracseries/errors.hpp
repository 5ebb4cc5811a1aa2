#pragma once

#include <stdexcept>
#include <string>

namespace fracseries {

/// Argument outside the mathematical domain of an operation (exit code 2).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Violated contract that the caller could have checked (exit code 2).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Internal numerical failure: lost bracket, exhausted budget (exit code 1).
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// (n+1)*alpha hit an integer: the formal solution does not exist.
struct ResonanceError : PreconditionError {
    int index;
    ResonanceError(const std::string& msg, int n) : PreconditionError(msg), index(n) {}
};

/// A denominator rho(gamma_j + alpha*k) - lambda_i vanished (bad spectrum).
struct SpectralCollisionError : PreconditionError {
    int i, j, k;
    SpectralCollisionError(const std::string& msg, int i_, int j_, int k_)
        : PreconditionError(msg), i(i_), j(j_), k(k_) {}
};

/// Input carries fewer significant digits than the analysis needs.
struct PrecisionError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct UnsupportedOperationError : PreconditionError {
    using PreconditionError::PreconditionError;
};

}  // namespace fracseries
