#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lrw1 {

enum class ErrorCode {
  Parse,
  InvalidVertex,
  NotAnEdge,
  TooLarge,
  NotAPermutation,
  Disconnected,
  AlreadyDH,
  NotASplit,
  MalformedDecomposition,
  NotDH,
  InvalidSequence,
  NotATreeEdge,
  NotAPath,
  NotApplicable,
  InternalInvariantViolation,
  CapExceeded,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Carries the 1-based line (edge-list) or 0-based byte offset (graph6) of the
// offending input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& reason)
      : Error(ErrorCode::Parse, "at " + std::to_string(position) + ": " + reason),
        position_(position),
        reason_(reason) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t position_;
  std::string reason_;
};

}  // namespace lrw1
