#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fwsubmix {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vector or matrix sizes disagree with the problem dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Point lies outside the domain of a function (singular log-det, log of a
/// non-positive coordinate, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An oracle produced a non-finite value or gradient.
class OracleError : public Error {
 public:
  using Error::Error;
};

/// A solver was asked to run outside the setting it supports.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Operation is not available for this kind of feasible region.
class UnsupportedRegionError : public Error {
 public:
  using Error::Error;
};

/// The linear maximization oracle failed (e.g. simplex iteration cap).
class LmoError : public Error {
 public:
  using Error::Error;
};

/// Malformed instance or config text. Carries the offending line (1-based,
/// 0 when the error is not tied to a line).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace fwsubmix
