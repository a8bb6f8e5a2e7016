// Exception types shared across the library.

#pragma once

#include <stdexcept>

namespace dsim {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A block list that misses points of the ground set or covers one twice.
struct OverlapOrGapError : Error {
  using Error::Error;
};

// A point outside the ground set.
struct OutOfRangeError : Error {
  using Error::Error;
};

// Two objects of different size/degree were combined.
struct SizeMismatchError : Error {
  using Error::Error;
};

// A diagram with a block contained in a single row; such a diagram is not a
// block bijection.
struct NotBiequivalenceError : Error {
  using Error::Error;
};

// A construction that needs a larger degree than the one given.
struct DegreeTooSmallError : Error {
  using Error::Error;
};

// A generator or letter index outside its valid range.
struct IndexOutOfRangeError : Error {
  using Error::Error;
};

// Argument of the local retraction is not fixed by the corner idempotent.
struct NotInLocalSubmonoidError : Error {
  using Error::Error;
};

// Conjugation by an element that is not invertible.
struct NotAUnitError : Error {
  using Error::Error;
};

// An enumeration grew past its configured class/element cap.
struct CapExceededError : Error {
  using Error::Error;
};

// Malformed textual input.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace dsim
