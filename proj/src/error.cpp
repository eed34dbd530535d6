#include "revkit/error.hpp"

namespace revkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnbalancedTag: return "UnbalancedTag";
    case ErrorCode::kNestedTag: return "NestedTag";
    case ErrorCode::kUnknownTag: return "UnknownTag";
    case ErrorCode::kOverlappingSpans: return "OverlappingSpans";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kOverlappingEdits: return "OverlappingEdits";
    case ErrorCode::kRangeOutOfBounds: return "RangeOutOfBounds";
    case ErrorCode::kEmptyBefore: return "EmptyBefore";
    case ErrorCode::kMalformedRecord: return "MalformedRecord";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kBackendUnavailable: return "BackendUnavailable";
    case ErrorCode::kProtocolError: return "ProtocolError";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kEmptyReference: return "EmptyReference";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      position_(position) {}

}  // namespace revkit
