#include "revkit/annotation.hpp"

#include <unicode/utf8.h>

#include <algorithm>
#include <cstdint>

#include "revkit/error.hpp"

namespace revkit {
namespace {

std::optional<Intent> tag_intent(std::string_view name) {
  for (Intent intent : kEditIntents) {
    if (name == to_string(intent)) return intent;
  }
  return std::nullopt;
}

void append_escaped(std::string& out, std::u32string_view text) {
  for (char32_t c : text) {
    switch (c) {
      case U'&': out += "&amp;"; break;
      case U'<': out += "&lt;"; break;
      case U'>': out += "&gt;"; break;
      default: out += utf8::encode(std::u32string_view(&c, 1));
    }
  }
}

std::string tag(Intent intent, bool closing) {
  std::string out = closing ? "</" : "<";
  out += to_string(intent);
  out += '>';
  return out;
}

}  // namespace

AnnotatedText canonicalize(AnnotatedText annotated) {
  auto& spans = annotated.spans;
  std::stable_sort(spans.begin(), spans.end(),
                   [](const IntentSpan& a, const IntentSpan& b) {
                     return a.start < b.start;
                   });
  std::vector<IntentSpan> merged;
  for (const IntentSpan& span : spans) {
    if (!merged.empty() && merged.back().intent == span.intent &&
        merged.back().end == span.start) {
      merged.back().end = span.end;
    } else {
      merged.push_back(span);
    }
  }
  spans = std::move(merged);
  return annotated;
}

AnnotatedText parse_annotated(std::string_view tagged) {
  struct Open {
    Intent intent;
    std::size_t start;
    std::size_t byte_offset;
  };

  std::u32string plain;
  std::vector<IntentSpan> spans;
  std::optional<Open> open;

  const auto* bytes = reinterpret_cast<const std::uint8_t*>(tagged.data());
  const auto n = static_cast<std::int32_t>(tagged.size());
  std::int32_t i = 0;
  while (i < n) {
    const char c = tagged[static_cast<std::size_t>(i)];
    const auto at = static_cast<std::size_t>(i);
    if (c == '<') {
      const std::size_t gt = tagged.find('>', at);
      if (gt == std::string_view::npos) {
        throw Error(ErrorCode::kUnknownTag, "unterminated tag", at);
      }
      std::string_view body = tagged.substr(at + 1, gt - at - 1);
      const bool closing = !body.empty() && body.front() == '/';
      if (closing) body.remove_prefix(1);
      const auto intent = tag_intent(body);
      if (!intent) {
        throw Error(ErrorCode::kUnknownTag,
                    "unknown tag <" + std::string(body) + ">", at);
      }
      i = static_cast<std::int32_t>(gt + 1);
      if (!closing) {
        if (open) throw Error(ErrorCode::kNestedTag, "nested tag", at);
        open = Open{*intent, plain.size(), at};
        if (i < n && tagged[static_cast<std::size_t>(i)] == ' ') ++i;
      } else {
        if (!open || open->intent != *intent) {
          throw Error(ErrorCode::kUnbalancedTag,
                      "closing tag without matching opener", at);
        }
        if (plain.size() > open->start && plain.back() == U' ') plain.pop_back();
        if (plain.size() > open->start) {
          spans.push_back(IntentSpan{open->start, plain.size(), open->intent});
        }
        open.reset();
      }
      continue;
    }
    if (c == '&') {
      const std::string_view rest = tagged.substr(at);
      if (rest.starts_with("&amp;")) {
        plain.push_back(U'&');
        i += 5;
        continue;
      }
      if (rest.starts_with("&lt;")) {
        plain.push_back(U'<');
        i += 4;
        continue;
      }
      if (rest.starts_with("&gt;")) {
        plain.push_back(U'>');
        i += 4;
        continue;
      }
    }
    UChar32 cp;
    U8_NEXT(bytes, i, n, cp);
    plain.push_back(cp < 0 ? U'�' : static_cast<char32_t>(cp));
  }
  if (open) {
    throw Error(ErrorCode::kUnbalancedTag, "tag never closed", open->byte_offset);
  }
  return canonicalize(AnnotatedText{utf8::encode(plain), std::move(spans)});
}

std::string render_annotated(const AnnotatedText& annotated) {
  const std::u32string plain = utf8::decode(annotated.plain);
  std::size_t cursor = 0;
  for (const IntentSpan& span : annotated.spans) {
    if (span.intent == Intent::kNone || span.start >= span.end ||
        span.start < cursor || span.end > plain.size()) {
      throw Error(ErrorCode::kOverlappingSpans,
                  "spans must be non-empty, sorted, disjoint and inside the text",
                  span.start);
    }
    cursor = span.end;
  }

  const std::u32string_view view(plain);
  std::string out;
  out.reserve(annotated.plain.size() + annotated.spans.size() * 24);
  cursor = 0;
  for (const IntentSpan& span : annotated.spans) {
    append_escaped(out, view.substr(cursor, span.start - cursor));
    out += tag(span.intent, false);
    out += ' ';
    append_escaped(out, view.substr(span.start, span.end - span.start));
    out += ' ';
    out += tag(span.intent, true);
    cursor = span.end;
  }
  append_escaped(out, view.substr(cursor));
  return out;
}

std::vector<IntentSpan> spans_from_labels(const std::vector<Token>& tokens,
                                          const std::vector<Intent>& labels) {
  if (tokens.size() != labels.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(tokens.size()) + " tokens but " +
                    std::to_string(labels.size()) + " labels");
  }
  std::vector<IntentSpan> spans;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Intent label = labels[i];
    if (label == Intent::kNone) continue;
    if (i > 0 && labels[i - 1] == label) {
      spans.back().end = tokens[i].end;
    } else {
      spans.push_back(IntentSpan{tokens[i].start, tokens[i].end, label});
    }
  }
  return spans;
}

std::vector<Intent> labels_from_spans(const std::vector<Token>& tokens,
                                      const std::vector<IntentSpan>& spans) {
  std::vector<Intent> labels(tokens.size(), Intent::kNone);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    for (const IntentSpan& span : spans) {
      if (tokens[i].start < span.end && span.start < tokens[i].end) {
        labels[i] = span.intent;
        break;
      }
    }
  }
  return labels;
}

std::string render_sentence_prefix(std::string_view plain, Intent intent) {
  return tag(intent, false) + " " + std::string(plain);
}

std::optional<std::pair<Intent, std::string>> strip_sentence_prefix(
    std::string_view prefixed) {
  for (Intent intent : kEditIntents) {
    const std::string prefix = tag(intent, false) + " ";
    if (prefixed.starts_with(prefix)) {
      return std::make_pair(intent,
                            std::string(prefixed.substr(prefix.size())));
    }
  }
  return std::nullopt;
}

}  // namespace revkit
