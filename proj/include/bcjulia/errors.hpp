#pragma once

#include <stdexcept>
#include <string>

namespace bcjulia {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Division by a zero divisor (an element of the null-cone).
struct NullConeError : Error {
    using Error::Error;
};

/// A polynomial of too small degree was handed to an escape-time routine.
struct DegreeError : Error {
    using Error::Error;
};

/// Leading coefficient in the null-cone, or degree < 2. The dynamics of such
/// polynomials do not split into two proper Julia sets.
struct DegenerateError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace bcjulia
