#pragma once

#include <stdexcept>

namespace updown {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An index, cardinality or ground size outside its documented range.
struct OutOfRangeError : Error {
  using Error::Error;
};

/// An operation was asked to run at a scale beyond its hard cap.
struct TooLargeError : Error {
  using Error::Error;
};

/// Two families over different ground sets were mixed in one operation.
struct GroundMismatchError : Error {
  using Error::Error;
};

/// A shift pair whose index sets are empty or overlap.
struct InvalidShiftPairError : Error {
  using Error::Error;
};

/// A parameter whose parity must match the ground size parity does not.
struct ParityMismatchError : Error {
  using Error::Error;
};

/// A family required to be convex is not.
struct NotConvexError : Error {
  using Error::Error;
};

/// Families required to be properly nested are not.
struct NotNestedError : Error {
  using Error::Error;
};

/// A structural precondition, documented per operation, does not hold.
struct PreconditionError : Error {
  using Error::Error;
};

/// Malformed textual input.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace updown
