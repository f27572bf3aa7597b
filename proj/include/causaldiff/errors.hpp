#pragma once

#include <stdexcept>
#include <string>

namespace causaldiff {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid numeric argument (negative time, nonpositive radius, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Spatial dimension outside {1, 2, 3}.
class UnsupportedDimensionError : public Error {
public:
    using Error::Error;
};

/// Two operands live in different spatial dimensions.
class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

/// A sphere or sample point leaves the grid bounding box.
/// The message names the box that would have been required.
class OutOfDomainError : public Error {
public:
    using Error::Error;
};

/// Grid not padded enough for the requested evolution time.
class PaddingError : public OutOfDomainError {
public:
    using OutOfDomainError::OutOfDomainError;
};

/// A check command found a violated tolerance.
class ToleranceError : public Error {
public:
    using Error::Error;
};

/// Invalid run configuration (CLI).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Requested operation is ill-posed and deliberately not provided.
class IllPosedError : public Error {
public:
    using Error::Error;
};

} // namespace causaldiff
