#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gfm {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed instance, witness, graph or row file. Carries the 1-based line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A witness leaves a non-wildcarded pattern letter without an image.
class MissingImage : public Error {
 public:
  using Error::Error;
};

/// A solver exhausted its configured node or substitution budget.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// The requested algorithm does not apply to the instance (unbounded parameter).
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// A match witness is not in the canonical form a clique decoder understands.
class DecodeFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace gfm
