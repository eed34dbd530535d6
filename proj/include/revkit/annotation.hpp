#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "revkit/intent.hpp"
#include "revkit/text.hpp"

namespace revkit {

// [start, end) in code points of the plain text; intent is never kNone.
struct IntentSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  Intent intent = Intent::kNone;

  bool operator==(const IntentSpan&) const = default;
};

struct AnnotatedText {
  std::string plain;
  std::vector<IntentSpan> spans;

  bool operator==(const AnnotatedText&) const = default;
};

// Tagged wire format:
//
//   I <fluency> disagree about that "..." </fluency>.
//
// Tag names are the lowercase intents, no attributes, no nesting. One space
// directly after an opening tag and one directly before a closing tag are
// padding and not part of the span or the plain text. Literal & < > in the
// plain text are written as &amp; &lt; &gt;.
//
// Errors carry the byte offset into `tagged` of the offending tag.
AnnotatedText parse_annotated(std::string_view tagged);

// Throws kOverlappingSpans on unsorted/overlapping/empty spans, kNone spans,
// or spans past the end of the plain text.
std::string render_annotated(const AnnotatedText& annotated);

// Sorts and merges touching spans of equal intent.
AnnotatedText canonicalize(AnnotatedText annotated);

// Maximal runs of consecutive tokens sharing a non-NONE label.
std::vector<IntentSpan> spans_from_labels(const std::vector<Token>& tokens,
                                          const std::vector<Intent>& labels);

// Token labels implied by a span set: a token takes the intent of the span
// it overlaps.
std::vector<Intent> labels_from_spans(const std::vector<Token>& tokens,
                                      const std::vector<IntentSpan>& spans);

// Baseline input: "<fluency> " + plain.
std::string render_sentence_prefix(std::string_view plain, Intent intent);

// Inverse of render_sentence_prefix; nullopt when no known prefix is present.
std::optional<std::pair<Intent, std::string>> strip_sentence_prefix(
    std::string_view prefixed);

}  // namespace revkit
