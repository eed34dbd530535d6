#include "revkit/config.hpp"

#include "revkit/error.hpp"

namespace revkit {

void FilterConfig::validate() const {
  if (!(min_len_ratio > 0.0 && min_len_ratio <= 1.0 && max_len_ratio >= 1.0)) {
    throw Error(ErrorCode::kParseError,
                "filter bounds must satisfy 0 < min_len_ratio <= 1 <= max_len_ratio");
  }
  if (!(min_char_similarity >= 0.0 && min_char_similarity <= 1.0)) {
    throw Error(ErrorCode::kParseError, "min_char_similarity must be in [0, 1]");
  }
}

void EngineConfig::validate() const {
  if (max_depth < 1) {
    throw Error(ErrorCode::kParseError, "max_depth must be >= 1");
  }
  filter.validate();
}

std::string to_string(ContextMode mode) {
  return mode == ContextMode::kSingleSentence ? "single" : "multi";
}

std::string to_string(AnnotationMode mode) {
  return mode == AnnotationMode::kSpanTags ? "span-tags" : "sentence-prefix";
}

std::string to_string(QualityMetric metric) {
  switch (metric) {
    case QualityMetric::kSari: return "sari";
    case QualityMetric::kBleu: return "bleu";
    case QualityMetric::kRougeL: return "rouge";
  }
  return "sari";
}

std::optional<QualityMetric> parse_quality_metric(const std::string& name) {
  if (name == "sari") return QualityMetric::kSari;
  if (name == "bleu") return QualityMetric::kBleu;
  if (name == "rouge" || name == "rouge_l" || name == "rouge-l") {
    return QualityMetric::kRougeL;
  }
  return std::nullopt;
}

}  // namespace revkit
