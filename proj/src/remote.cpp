#include "revkit/remote.hpp"

#include <httplib.h>

#include <json.hpp>

#include "revkit/error.hpp"

namespace revkit {
namespace protocol {
namespace {

using nlohmann::json;

json parse_body(std::string_view body) {
  try {
    json value = json::parse(body);
    if (!value.is_object()) {
      throw Error(ErrorCode::kProtocolError, "body is not a JSON object");
    }
    return value;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kProtocolError, std::string("invalid JSON: ") + e.what());
  }
}

const json& require(const json& obj, const char* key, json::value_t type) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw Error(ErrorCode::kProtocolError, std::string("missing field ") + key);
  }
  const bool ok = it->type() == type ||
                  (type == json::value_t::number_integer && it->is_number_integer());
  if (!ok) {
    throw Error(ErrorCode::kProtocolError, std::string("wrong type for ") + key);
  }
  return *it;
}

std::optional<std::string> optional_string(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw Error(ErrorCode::kProtocolError, std::string("wrong type for ") + key);
  }
  return it->get<std::string>();
}

}  // namespace

std::string encode_detect_request(const DetectRequest& request) {
  json body;
  body["text"] = request.text;
  if (request.context_before) body["context_before"] = *request.context_before;
  if (request.context_after) body["context_after"] = *request.context_after;
  body["multi_task"] = request.multi_task;
  return body.dump();
}

DetectRequest decode_detect_request(std::string_view body) {
  const json obj = parse_body(body);
  DetectRequest request;
  request.text = require(obj, "text", json::value_t::string).get<std::string>();
  request.context_before = optional_string(obj, "context_before");
  request.context_after = optional_string(obj, "context_after");
  auto it = obj.find("multi_task");
  if (it != obj.end()) {
    if (!it->is_boolean()) {
      throw Error(ErrorCode::kProtocolError, "wrong type for multi_task");
    }
    request.multi_task = it->get<bool>();
  }
  return request;
}

std::string encode_detect_response(const std::vector<Token>& tokens,
                                   const DetectorOutput& output) {
  json body;
  json token_array = json::array();
  for (const Token& t : tokens) token_array.push_back(t.text);
  json label_array = json::array();
  for (Intent l : output.labels) label_array.push_back(std::string(to_string(l)));
  body["tokens"] = std::move(token_array);
  body["labels"] = std::move(label_array);
  if (output.needs_edit) body["needs_edit"] = *output.needs_edit;
  return body.dump();
}

DetectorOutput decode_detect_response(std::string_view body,
                                      const std::vector<Token>& expected_tokens) {
  const json obj = parse_body(body);
  const json& tokens = require(obj, "tokens", json::value_t::array);
  const json& labels = require(obj, "labels", json::value_t::array);
  if (tokens.size() != expected_tokens.size()) {
    throw Error(ErrorCode::kProtocolError,
                "server returned " + std::to_string(tokens.size()) +
                    " tokens, expected " + std::to_string(expected_tokens.size()));
  }
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!tokens[i].is_string() ||
        tokens[i].get<std::string>() != expected_tokens[i].text) {
      throw Error(ErrorCode::kProtocolError,
                  "token " + std::to_string(i) + " differs from local tokenization", i);
    }
  }
  if (labels.size() != tokens.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(labels.size()) + " labels for " +
                    std::to_string(tokens.size()) + " tokens");
  }
  DetectorOutput out;
  out.labels.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto intent =
        labels[i].is_string() ? parse_intent(labels[i].get<std::string>()) : std::nullopt;
    if (!intent) {
      throw Error(ErrorCode::kProtocolError,
                  "label " + std::to_string(i) + " is not an intent", i);
    }
    out.labels.push_back(*intent);
  }
  auto it = obj.find("needs_edit");
  if (it != obj.end() && !it->is_null()) {
    if (!it->is_boolean()) {
      throw Error(ErrorCode::kProtocolError, "wrong type for needs_edit");
    }
    out.needs_edit = it->get<bool>();
  }
  return out;
}

std::string encode_revise_request(const AnnotatedText& annotated,
                                  AnnotationMode mode) {
  json body;
  if (mode == AnnotationMode::kSentencePrefix) {
    if (annotated.spans.size() != 1) {
      throw Error(ErrorCode::kOverlappingSpans,
                  "sentence-prefix mode takes exactly one span");
    }
    body["annotated"] = render_sentence_prefix(annotated.plain, annotated.spans[0].intent);
  } else {
    body["annotated"] = render_annotated(annotated);
  }
  return body.dump();
}

std::string decode_revise_request(std::string_view body) {
  return require(parse_body(body), "annotated", json::value_t::string)
      .get<std::string>();
}

std::string encode_revise_response(std::string_view revised) {
  json body;
  body["revised"] = std::string(revised);
  return body.dump();
}

std::string decode_revise_response(std::string_view body) {
  return require(parse_body(body), "revised", json::value_t::string)
      .get<std::string>();
}

std::string encode_error(std::string_view message, std::optional<std::size_t> offset) {
  json body;
  body["error"] = std::string(message);
  if (offset) body["offset"] = *offset;
  return body.dump();
}

std::string encode_health() { return json{{"status", "ok"}}.dump(); }

}  // namespace protocol

namespace {

void configure(httplib::Client& client, const RemoteOptions& options) {
  client.set_connection_timeout(options.connect_timeout);
  client.set_read_timeout(options.read_timeout);
  client.set_write_timeout(options.read_timeout);
}

}  // namespace

RemoteBackend::RemoteBackend(std::string endpoint, RemoteOptions options)
    : endpoint_(std::move(endpoint)), options_(options) {
  while (!endpoint_.empty() && endpoint_.back() == '/') endpoint_.pop_back();
}

bool RemoteBackend::healthy() const {
  try {
    httplib::Client client(endpoint_);
    configure(client, options_);
    auto res = client.Get("/v1/health");
    if (!res || res->status != 200) return false;
    auto body = nlohmann::json::parse(res->body);
    return body.value("status", "") == "ok";
  } catch (const std::exception&) {
    return false;
  }
}

std::string RemoteBackend::post(const std::string& path, const std::string& body) const {
  httplib::Result res;
  try {
    httplib::Client client(endpoint_);
    configure(client, options_);
    res = client.Post(path, body, "application/json");
  } catch (const std::exception& e) {
    throw Error(ErrorCode::kBackendUnavailable, endpoint_ + ": " + e.what());
  }
  if (!res) {
    throw Error(ErrorCode::kBackendUnavailable,
                endpoint_ + path + ": " + httplib::to_string(res.error()));
  }
  if (res->status == 200) return res->body;
  if (res->status == 503) {
    throw Error(ErrorCode::kBackendUnavailable, endpoint_ + path + ": server loading");
  }
  std::string message = "HTTP " + std::to_string(res->status);
  std::optional<std::size_t> offset;
  try {
    auto err = nlohmann::json::parse(res->body);
    if (err.contains("error") && err["error"].is_string()) {
      message += ": " + err["error"].get<std::string>();
    }
    if (err.contains("offset") && err["offset"].is_number_unsigned()) {
      offset = err["offset"].get<std::size_t>();
    }
  } catch (const nlohmann::json::exception&) {
  }
  throw Error(ErrorCode::kProtocolError, endpoint_ + path + ": " + message, offset);
}

DetectorOutput RemoteBackend::detect(const DetectRequest& request) const {
  const std::string body = post("/v1/detect", protocol::encode_detect_request(request));
  return protocol::decode_detect_response(body, tokenize(request.text));
}

std::string RemoteBackend::revise(const AnnotatedText& annotated,
                                  AnnotationMode mode) const {
  const std::string body =
      post("/v1/revise", protocol::encode_revise_request(annotated, mode));
  return protocol::decode_revise_response(body);
}

}  // namespace revkit
