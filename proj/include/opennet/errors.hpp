#pragma once

#include <stdexcept>
#include <string>

namespace opennet {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad input: malformed files, out-of-range flags, violated preconditions.
/// Maps to CLI exit code 1.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Numeric failure: instability, ill-conditioning, solver breakdown.
/// Maps to CLI exit code 2.
class NumericError : public Error {
public:
    using Error::Error;
};

/// The state matrix is not Hurwitz (spectral abscissa >= 0).
class StabilityError : public NumericError {
public:
    using NumericError::NumericError;
};

/// A linear operator involved in a solve is numerically singular.
class ConditioningError : public NumericError {
public:
    using NumericError::NumericError;
};

/// The controllability Gramian is singular or too ill-conditioned to invert.
class ControllabilityError : public NumericError {
public:
    using NumericError::NumericError;
};

/// The resolvent (sI - A) is numerically singular at the requested point.
class ResolventError : public NumericError {
public:
    using NumericError::NumericError;
};

/// A sample distribution has zero spread but the scored value differs from it.
class DegenerateDistributionError : public NumericError {
public:
    using NumericError::NumericError;
};

/// A graph expected to be acyclic contains a directed cycle.
class CyclicityError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Simple-path enumeration exceeded its guard limit.
class PathExplosionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A diagonal leak term required by the path-gain formula is zero or positive.
class LeakError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

}  // namespace opennet
