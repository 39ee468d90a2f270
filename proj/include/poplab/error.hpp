#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace poplab {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the pattern notation parser; carries the 0-based offset into the
// source text where the problem was detected.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Enumeration request exceeds the configured size guard.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace poplab
