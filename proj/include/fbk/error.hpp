#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace fbk {

// Base for every error raised by the kernel. Callers that only need to
// distinguish "bad input" from "bug" can catch this and InternalError.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class StrandMismatch : public Error {
 public:
  StrandMismatch(int lhs, int rhs)
      : Error("strand count mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A word-problem routine received a tau letter where only sigma letters are
// allowed.
class FramingLetterPresent : public Error {
 public:
  FramingLetterPresent()
      : Error("framing letter present; normalize the framed braid first") {}
};

// Raised when an internal consistency check fails (scanning bug, broken
// invariant). Never expected on valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t offset)
      : Error(message + " at byte " + std::to_string(offset)),
        offset_(offset),
        reason_(std::move(message)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t offset_;
  std::string reason_;
};

}  // namespace fbk
