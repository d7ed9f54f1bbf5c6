#pragma once

#include <stdexcept>
#include <string>

namespace gns {

/// Base class for all domain errors raised by the library.
/// The command line tool maps these to exit code 2 unless noted otherwise.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A precondition on user input was violated (empty list, zero dimension, ...).
struct InvalidInput : Error {
  using Error::Error;
};

/// Two objects of different ambient dimension were combined.
struct DimensionMismatch : Error {
  using Error::Error;
};

/// Checked integer arithmetic (coordinate sums, counters) overflowed.
/// Mapped to exit code 3 by the command line tool.
struct OverflowError : Error {
  using Error::Error;
};

/// A configured resource limit (wall clock deadline) was exceeded.
/// Mapped to exit code 3 by the command line tool.
struct LimitExceeded : Error {
  using Error::Error;
};

/// Malformed textual input (points, point lists). Mapped to exit code 64.
struct ParseError : Error {
  using Error::Error;
};

/// Two redundant internal computations disagreed; indicates a bug.
struct InternalInconsistency : Error {
  using Error::Error;
};

/// The requested operation is not defined for this order kind.
struct UnsupportedOrder : Error {
  using Error::Error;
};

}  // namespace gns
