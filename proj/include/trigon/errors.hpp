// Exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace trigon {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateTriangle : Error {
    using Error::Error;
};
struct ConcentricCircles : Error {
    using Error::Error;
};
struct CoincidentPoints : Error {
    using Error::Error;
};
struct NotDense : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct DepthExceeded : Error {
    using Error::Error;
};
struct DivisibilityViolation : Error {
    using Error::Error;
};
struct TypeMismatch : Error {
    using Error::Error;
};
struct RadiusTooLarge : Error {
    using Error::Error;
};
struct OutOfSupportedRange : Error {
    using Error::Error;
};
struct UnknownCommand : Error {
    using Error::Error;
};
struct MalformedInput : Error {
    using Error::Error;
};

// A numeric decision fell inside the borderline band [tol, 1e3*tol]; the
// caller must not trust a silent yes/no.
struct AmbiguousDecision : Error {
    using Error::Error;
};

}  // namespace trigon
