#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fibered_floer {

enum class ErrorKind {
  ParseError,
  ZeroExponent,
  PowerOutOfRange,
  GenusTooSmall,
  InvalidCurve,
  UnsupportedCurve,
  UnsupportedMappingClass,
  LevelOutOfRange,
  UnsupportedLevel,
  SlotOutOfRange,
  NonIntegralEvaluation,
  UnsupportedCase,
  InconclusiveSandwich,
  NoCitedComparison,
  DiagramTooLarge,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so front ends can map it
// to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message);

  // Byte offset into the source string where parsing stopped.
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace fibered_floer
