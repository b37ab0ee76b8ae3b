/*
  Error types shared across the library.

  Every failure mode has its own exception class so that callers (and the
  CLI exit-code mapping) can distinguish validation problems, arithmetic
  overflow and internal consistency failures without parsing messages.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace steinberg {

/// Base class of all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input validation failures: bad arguments, contract violations.
struct ValidationError : Error {
  using Error::Error;
};

/// Unknown series letter or rank outside the allowed range for the series.
struct InvalidTypeError : ValidationError {
  using ValidationError::ValidationError;
};

/// Simple-root index outside 1..rank.
struct IndexOutOfRangeError : ValidationError {
  using ValidationError::ValidationError;
};

/// Two operands belong to different root systems.
struct MixedRootSystemsError : ValidationError {
  using ValidationError::ValidationError;
};

/// An enumeration would exceed the configured element-count guard.
struct SizeGuardExceededError : ValidationError {
  using ValidationError::ValidationError;
};

/// A weight was required to be dominant and is not.
struct NotDominantError : ValidationError {
  using ValidationError::ValidationError;
};

/// An element was required to be a minimal coset representative and is not.
struct NotMinimalRepresentativeError : ValidationError {
  using ValidationError::ValidationError;
};

/// A smooth-part subset J violates J subset of I(w).
struct InvalidJError : ValidationError {
  using ValidationError::ValidationError;
};

/// Integer arithmetic left the representable range.
struct CoefficientOverflowError : Error {
  using Error::Error;
};

/// A mathematical identity the implementation relies on failed to hold.
struct InternalInconsistencyError : Error {
  using Error::Error;
};

/// Filesystem-level failure while reading or writing a cache file.
struct IoError : Error {
  using Error::Error;
};

/// A cache file is syntactically or semantically invalid.
struct FormatError : Error {
  using Error::Error;
};

}  // namespace steinberg
