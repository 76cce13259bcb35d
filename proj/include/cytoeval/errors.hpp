#pragma once

#include <stdexcept>
#include <string>

namespace cytoeval {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mask dimension mismatches, bad polygons, and other geometric misuse.
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// Corrupt run-length data or malformed compressed tokens.
class CodecError : public Error {
 public:
  using Error::Error;
};

/// Semantic problems in input data: dangling references, out-of-range
/// scores, duplicate ids, count mismatches.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Incompatible configurations combined (e.g. matrices built under
/// different matching settings).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Generator could not satisfy a placement request within its retry budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Instance handed to a bounded-size oracle is too large.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Filesystem-level failures (missing or unreadable files).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace cytoeval
