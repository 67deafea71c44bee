#pragma once

#include <stdexcept>
#include <string>

namespace syz {

/// A requested degree, index or cell lies outside the data that was supplied.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A structural invariant of an input object does not hold
/// (non-commuting multiplication maps, wrong signature, ...).
class InvariantError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The caller did not establish a precondition of an operation
/// (wrong surface kind, missing flag, argument out of the covered range).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed input document. `path()` names the offending field,
/// e.g. `mult[1][0][3]`.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, const std::string& message)
      : std::runtime_error(path.empty() ? message : path + ": " + message),
        path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace syz
