#pragma once

#include <optional>
#include <string>

namespace revkit {

// A document at revision depth `depth`; depth 0 is the original input.
struct Document {
  std::string doc_id;
  std::string text;
  int depth = 0;
};

enum class ContextMode { kSingleSentence, kMultiSentence };

// kSpanTags embeds intent tags around each detected span; kSentencePrefix is
// the baseline that prepends one sentence-level intent tag.
enum class AnnotationMode { kSpanTags, kSentencePrefix };

enum class QualityMetric { kSari, kBleu, kRougeL };

// Meaning-changed pair filter. Lengths are in code points; similarity is
// 1 - levenshtein / max_len over code points.
struct FilterConfig {
  double min_len_ratio = 0.5;
  double max_len_ratio = 2.0;
  double min_char_similarity = 0.35;

  // Throws Error(kParseError) when the bounds are inconsistent.
  void validate() const;
};

struct EngineConfig {
  int max_depth = 4;
  ContextMode context_mode = ContextMode::kSingleSentence;
  AnnotationMode annotation_mode = AnnotationMode::kSpanTags;
  // Stop with QUALITY_DECREASE when this metric drops between depths. Needs
  // references, so it is off unless set.
  std::optional<QualityMetric> quality_guard;
  // Ask for the multi-task head and skip sentences it marks as clean.
  bool gate_on_needs_edit = false;
  FilterConfig filter;

  void validate() const;
};

std::string to_string(ContextMode mode);
std::string to_string(AnnotationMode mode);
std::string to_string(QualityMetric metric);
std::optional<QualityMetric> parse_quality_metric(const std::string& name);

}  // namespace revkit
