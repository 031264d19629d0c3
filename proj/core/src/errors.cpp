#include "fibered_floer/errors.hpp"

namespace fibered_floer {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ZeroExponent: return "ZeroExponent";
    case ErrorKind::PowerOutOfRange: return "PowerOutOfRange";
    case ErrorKind::GenusTooSmall: return "GenusTooSmall";
    case ErrorKind::InvalidCurve: return "InvalidCurve";
    case ErrorKind::UnsupportedCurve: return "UnsupportedCurve";
    case ErrorKind::UnsupportedMappingClass: return "UnsupportedMappingClass";
    case ErrorKind::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorKind::UnsupportedLevel: return "UnsupportedLevel";
    case ErrorKind::SlotOutOfRange: return "SlotOutOfRange";
    case ErrorKind::NonIntegralEvaluation: return "NonIntegralEvaluation";
    case ErrorKind::UnsupportedCase: return "UnsupportedCase";
    case ErrorKind::InconclusiveSandwich: return "InconclusiveSandwich";
    case ErrorKind::NoCitedComparison: return "NoCitedComparison";
    case ErrorKind::DiagramTooLarge: return "DiagramTooLarge";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(std::size_t offset, const std::string& message)
    : Error(ErrorKind::ParseError, "at byte " + std::to_string(offset) + ": " + message),
      offset_(offset) {}

}  // namespace fibered_floer
