#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

#include "revkit/backends.hpp"
#include "revkit/text.hpp"

namespace revkit {

// JSON wire schema shared with the model server. Objects are serialized
// compactly with keys in sorted order, so encodings are byte-stable.
//
//   POST /v1/detect  {text, context_before?, context_after?, multi_task}
//                 -> {tokens: [string], labels: [string], needs_edit?}
//   POST /v1/revise  {annotated} -> {revised}
//   GET  /v1/health  -> {status: "ok"}
//   errors: 422 {error, offset?}
namespace protocol {

std::string encode_detect_request(const DetectRequest& request);
DetectRequest decode_detect_request(std::string_view body);

std::string encode_detect_response(const std::vector<Token>& tokens,
                                   const DetectorOutput& output);
// Checks the response against the locally computed tokenization of the
// request text: differing tokens are a kProtocolError, a label count that
// differs from the token count is kLengthMismatch.
DetectorOutput decode_detect_response(std::string_view body,
                                      const std::vector<Token>& expected_tokens);

// Span-tag mode sends render_annotated(); sentence-prefix mode sends
// render_sentence_prefix() with the single span's intent.
std::string encode_revise_request(const AnnotatedText& annotated,
                                  AnnotationMode mode);
std::string decode_revise_request(std::string_view body);
std::string encode_revise_response(std::string_view revised);
std::string decode_revise_response(std::string_view body);

std::string encode_error(std::string_view message,
                         std::optional<std::size_t> offset = std::nullopt);
std::string encode_health();

}  // namespace protocol

struct RemoteOptions {
  std::chrono::milliseconds connect_timeout{2000};
  std::chrono::milliseconds read_timeout{60000};
};

// HTTP client for a detector/reviser server, e.g. "http://localhost:8080".
// Each call opens its own connection, so one instance can be shared across
// threads. Connection failures and 503 raise kBackendUnavailable; 422 and
// schema violations raise kProtocolError.
class RemoteBackend : public Detector, public Reviser {
 public:
  explicit RemoteBackend(std::string endpoint, RemoteOptions options = {});

  bool healthy() const;
  DetectorOutput detect(const DetectRequest& request) const override;
  std::string revise(const AnnotatedText& annotated,
                     AnnotationMode mode) const override;

  const std::string& endpoint() const { return endpoint_; }

 private:
  std::string post(const std::string& path, const std::string& body) const;

  std::string endpoint_;
  RemoteOptions options_;
};

}  // namespace revkit
