#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace linkednets {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad lengths, unknown fields, shape mismatches.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (e.g. a non-primitive vertex).
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// The presentation's window does not carry the arrows a computation needs.
class WindowInsufficient : public Error {
 public:
  WindowInsufficient(const std::string& what, std::vector<std::string> missing)
      : Error(what), missing_(std::move(missing)) {}

  const std::vector<std::string>& missing() const noexcept { return missing_; }

 private:
  std::vector<std::string> missing_;
};

/// An internal consistency assertion failed; the input contradicts a theorem
/// the computation relies on.
class InconsistentPresentation : public Error {
 public:
  using Error::Error;
};

}  // namespace linkednets
