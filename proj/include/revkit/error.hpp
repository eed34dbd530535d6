#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace revkit {

enum class ErrorCode {
  kUnbalancedTag,
  kNestedTag,
  kUnknownTag,
  kOverlappingSpans,
  kLengthMismatch,
  kOverlappingEdits,
  kRangeOutOfBounds,
  kEmptyBefore,
  kMalformedRecord,
  kIndexOutOfRange,
  kBackendUnavailable,
  kProtocolError,
  kParseError,
  kEmptyCorpus,
  kEmptyReference,
  kShapeMismatch,
  kIoError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library. `position()` carries the byte offset,
// line number, or record index the error refers to when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace revkit
