#pragma once

#include <stdexcept>

namespace tropnet {

/// Base class of all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The degree of the zero polynomial was consumed as an integer.
struct ZeroDegreeError : Error {
    using Error::Error;
};

/// meet() was called on two scalar-multiple lines.
struct CoincidentLinesError : Error {
    using Error::Error;
};

/// join() was called on two scalar-multiple points.
struct CoincidentPointsError : Error {
    using Error::Error;
};

/// A projective configuration violates a general-position requirement.
struct DegenerateConfigurationError : Error {
    using Error::Error;
};

/// A transformed coordinate is the zero polynomial, so no tropical
/// center/location is defined.
struct VanishingCoordinateError : Error {
    using Error::Error;
};

/// Structurally invalid input (wrong shape, out-of-range entries, bad JSON).
struct MalformedInputError : Error {
    using Error::Error;
};

/// Two Latin squares of different orders were combined.
struct OrderMismatchError : Error {
    using Error::Error;
};

/// Latin-square order outside the supported range.
struct UnsupportedOrderError : Error {
    using Error::Error;
};

/// Squares passed to net construction are not pairwise orthogonal.
struct NonOrthogonalInputError : Error {
    using Error::Error;
};

/// Argument outside the mathematical domain of the operation.
struct DomainError : Error {
    using Error::Error;
};

/// A configured step budget was exhausted (result inconclusive).
struct ResourceLimitError : Error {
    using Error::Error;
};

/// A derivation reached a contradictory intermediate state.
struct InconsistencyError : Error {
    using Error::Error;
};

/// A self-check that should never fail did fail.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace tropnet
