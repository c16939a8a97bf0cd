#pragma once

#include <stdexcept>
#include <string>

namespace ssrelay {

/// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A numerical procedure (quadrature, inversion, series) failed to produce a
/// finite or converged value.
class NumericalFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed configuration or command-line input.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Base for node-placement failures.
class GeometryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The linear-chain layout only exists for an even hop count.
class UnsupportedLayout : public GeometryError {
public:
    using GeometryError::GeometryError;
};

/// No node placement satisfies the requested path-loss ratio.
class DegenerateGeometry : public GeometryError {
public:
    using GeometryError::GeometryError;
};

/// Broken internal invariant (e.g. a root bracket that should always hold).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace ssrelay
