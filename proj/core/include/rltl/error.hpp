#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rltl {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed concrete syntax; `position` is a 0-based byte offset.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class UnsupportedOperator : public Error {
public:
  using Error::Error;
};

/// Atoms or alphabets of two inputs do not line up.
class AlphabetMismatch : public Error {
public:
  using Error::Error;
};

/// A configurable state or vertex cap was exceeded.
class ResourceLimit : public Error {
public:
  using Error::Error;
};

class MissingDesignatedState : public Error {
public:
  using Error::Error;
};

}  // namespace rltl
