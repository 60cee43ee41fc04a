#pragma once

#include <stdexcept>
#include <string>

namespace confrac {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two series with different alpha or expansion point were combined.
class IncompatibleSeries : public Error {
public:
    using Error::Error;
};

/// A point lies outside the domain of (x - x0)^alpha or of an operator.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An input series is truncated below the order a computation needs.
class TruncationError : public Error {
public:
    using Error::Error;
};

/// Too few usable coefficients for a statistical estimate.
class InsufficientData : public Error {
public:
    using Error::Error;
};

/// Operation requires alpha with an odd denominator.
class UnsupportedAlpha : public Error {
public:
    using Error::Error;
};

/// The Rodrigues construction produced a nonzero tail inside its exact range.
class RodriguesMismatch : public Error {
public:
    using Error::Error;
};

/// Structurally invalid input (zero denominator polynomial, bad JSON, ...).
class MalformedInput : public Error {
public:
    using Error::Error;
};

} // namespace confrac
