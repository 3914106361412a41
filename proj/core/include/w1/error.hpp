#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace w1 {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller broke a documented precondition (bad certificate size, foreign
/// value label, out-of-range index...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Problems reading an instance document.
class ParseError : public Error {
 public:
  enum class Kind { Syntax, Schema, Invariant };

  ParseError(Kind kind, std::string message, std::optional<std::size_t> position = std::nullopt)
      : Error(render(kind, message, position)), kind_(kind), position_(position) {}

  Kind kind() const noexcept { return kind_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  static std::string render(Kind kind, const std::string& message, std::optional<std::size_t> position) {
    std::string prefix;
    switch (kind) {
      case Kind::Syntax: prefix = "syntax error"; break;
      case Kind::Schema: prefix = "schema violation"; break;
      case Kind::Invariant: prefix = "invariant violation"; break;
    }
    if (position) prefix += " at byte " + std::to_string(*position);
    return prefix + ": " + message;
  }

  Kind kind_;
  std::optional<std::size_t> position_;
};

/// Checked 64-bit arithmetic overflowed.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A configured resource guard (candidate cap, step budget) was exceeded.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// Internal consistency check failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace w1
