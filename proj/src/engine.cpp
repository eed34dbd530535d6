#include "revkit/engine.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

#include "revkit/metrics.hpp"
#include "revkit/text.hpp"

namespace revkit {
namespace {

Intent majority_intent(std::span<const Intent> labels) {
  std::array<std::size_t, kNumIntents> counts{};
  for (Intent l : labels) {
    if (l != Intent::kNone) ++counts[index_of(l)];
  }
  std::size_t best = 0;
  for (std::size_t k = 1; k < kEditIntents.size(); ++k) {
    if (counts[k] > counts[best]) best = k;
  }
  return static_cast<Intent>(best);
}

double quality(QualityMetric metric, const std::string& source,
               const std::string& hypothesis, std::span<const std::string> refs) {
  const std::vector<std::string> references(refs.begin(), refs.end());
  switch (metric) {
    case QualityMetric::kSari: return sari(source, hypothesis, references).final_score;
    case QualityMetric::kBleu: return sentence_bleu(hypothesis, references);
    case QualityMetric::kRougeL: return rouge_l(hypothesis, references).f;
  }
  return 0.0;
}

BatchOutcome run_one(const BatchInput& input, const Detector& detector,
                     const Reviser& reviser, const EngineConfig& cfg) {
  BatchOutcome outcome;
  try {
    outcome.trace = iterate(input.doc, detector, reviser, cfg, input.references);
  } catch (const IterateError& e) {
    outcome.trace = e.partial_trace();
    outcome.error = static_cast<const Error&>(e);
  } catch (const Error& e) {
    outcome.trace.doc_id = input.doc.doc_id;
    outcome.error = e;
  }
  outcome.trace.group = input.group;
  return outcome;
}

struct Detection {
  std::vector<Intent> labels;
  std::vector<std::size_t> sentence_first_token;  // plus one past the end
};

Detection detect_document(std::u32string_view view,
                          const std::vector<Sentence>& sentences,
                          const std::vector<std::string>& sentence_text,
                          std::size_t token_count, const Detector& detector,
                          const EngineConfig& cfg) {
  Detection d;
  d.labels.reserve(token_count);
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    DetectRequest request;
    request.text = sentence_text[i];
    request.multi_task = cfg.gate_on_needs_edit;
    if (cfg.context_mode == ContextMode::kMultiSentence) {
      if (i > 0) request.context_before = sentence_text[i - 1];
      if (i + 1 < sentences.size()) request.context_after = sentence_text[i + 1];
    }
    DetectorOutput out = detector.detect(request);
    const std::size_t expected =
        tokenize(view.substr(sentences[i].start, sentences[i].end - sentences[i].start))
            .size();
    if (out.labels.size() != expected) {
      throw Error(ErrorCode::kLengthMismatch,
                  "detector returned " + std::to_string(out.labels.size()) +
                      " labels for " + std::to_string(expected) + " tokens");
    }
    if (cfg.gate_on_needs_edit && out.needs_edit == false) {
      std::fill(out.labels.begin(), out.labels.end(), Intent::kNone);
    }
    d.sentence_first_token.push_back(d.labels.size());
    d.labels.insert(d.labels.end(), out.labels.begin(), out.labels.end());
  }
  d.sentence_first_token.push_back(d.labels.size());
  if (d.labels.size() != token_count) {
    throw Error(ErrorCode::kLengthMismatch,
                "sentence tokens do not cover the document tokens");
  }
  return d;
}

std::vector<std::string> sentence_texts(std::u32string_view view,
                                        const std::vector<Sentence>& sentences) {
  std::vector<std::string> out;
  out.reserve(sentences.size());
  for (const Sentence& s : sentences) {
    out.push_back(utf8::encode(view.substr(s.start, s.end - s.start)));
  }
  return out;
}

}  // namespace

std::vector<Intent> detect_labels(std::string_view text, const Detector& detector,
                                  const EngineConfig& cfg) {
  const std::u32string decoded = utf8::decode(text);
  const std::u32string_view view(decoded);
  const auto sentences = split_sentences(view);
  return detect_document(view, sentences, sentence_texts(view, sentences),
                         tokenize(view).size(), detector, cfg)
      .labels;
}

std::optional<RevisionStep> revise_once(const Document& doc,
                                        const Detector& detector,
                                        const Reviser& reviser,
                                        const EngineConfig& cfg) {
  const std::u32string text = utf8::decode(doc.text);
  const std::u32string_view view(text);
  const auto sentences = split_sentences(view);
  const auto tokens = tokenize(view);
  const std::vector<std::string> sentence_text = sentence_texts(view, sentences);
  Detection detection =
      detect_document(view, sentences, sentence_text, tokens.size(), detector, cfg);
  const std::vector<Intent>& labels = detection.labels;
  const std::vector<std::size_t>& sentence_first_token = detection.sentence_first_token;
  if (std::all_of(labels.begin(), labels.end(),
                  [](Intent l) { return l == Intent::kNone; })) {
    return std::nullopt;
  }

  RevisionStep step;
  step.depth = doc.depth + 1;
  step.before = doc.text;
  step.detector_labels = labels;

  std::string revised;
  if (cfg.annotation_mode == AnnotationMode::kSpanTags) {
    step.spans = spans_from_labels(tokens, labels);
    revised = reviser.revise(AnnotatedText{doc.text, step.spans},
                             AnnotationMode::kSpanTags);
  } else {
    std::u32string assembled;
    std::size_t cursor = 0;
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      const std::span<const Intent> sentence_labels(
          labels.data() + sentence_first_token[i],
          sentence_first_token[i + 1] - sentence_first_token[i]);
      const bool flagged = std::any_of(sentence_labels.begin(), sentence_labels.end(),
                                       [](Intent l) { return l != Intent::kNone; });
      if (!flagged) continue;
      const Sentence& s = sentences[i];
      const Intent intent = majority_intent(sentence_labels);
      const std::size_t length = s.end - s.start;
      const std::string out = reviser.revise(
          AnnotatedText{sentence_text[i], {IntentSpan{0, length, intent}}},
          AnnotationMode::kSentencePrefix);
      assembled.append(text, cursor, s.start - cursor);
      assembled += utf8::decode(out);
      cursor = s.end;
      step.spans.push_back(IntentSpan{s.start, s.end, intent});
    }
    assembled.append(text, cursor);
    revised = utf8::encode(assembled);
  }

  step.after = revert_outside_spans(step.before, step.spans, revised);
  step.edits = extract_span_edits(step.before, step.spans, step.after);
  return step;
}

IterateError::IterateError(const Error& cause, RevisionTrace partial)
    : Error(cause),
      partial_(std::move(partial)) {}

RevisionTrace iterate(const Document& doc, const Detector& detector,
                      const Reviser& reviser, const EngineConfig& cfg,
                      std::span<const std::string> references) {
  cfg.validate();
  if (cfg.quality_guard && references.empty()) {
    throw Error(ErrorCode::kEmptyReference,
                "quality guard needs references for document " + doc.doc_id);
  }

  RevisionTrace trace;
  trace.doc_id = doc.doc_id;
  std::string current = doc.text;
  int depth = doc.depth;
  std::unordered_set<std::string> seen{current};
  double current_score = 0.0;
  if (cfg.quality_guard) {
    current_score = quality(*cfg.quality_guard, doc.text, current, references);
  }

  while (true) {
    if (depth + 1 > cfg.max_depth) {
      trace.stop_reason = StopReason::kMaxDepth;
      break;
    }
    std::optional<RevisionStep> step;
    try {
      step = revise_once(Document{doc.doc_id, current, depth}, detector, reviser, cfg);
    } catch (const Error& e) {
      throw IterateError(e, std::move(trace));
    }
    if (!step || step->after == current) {
      trace.stop_reason = StopReason::kNoEdit;
      break;
    }
    if (seen.contains(step->after)) {
      trace.stop_reason = StopReason::kOscillation;
      break;
    }
    if (cfg.quality_guard) {
      const double score =
          quality(*cfg.quality_guard, doc.text, step->after, references);
      if (score < current_score) {
        trace.stop_reason = StopReason::kQualityDecrease;
        break;
      }
      current_score = score;
    }
    seen.insert(step->after);
    current = step->after;
    depth = step->depth;
    trace.steps.push_back(std::move(*step));
  }
  return trace;
}

std::vector<BatchOutcome> iterate_batch(std::span<const BatchInput> inputs,
                                        const Detector& detector,
                                        const Reviser& reviser,
                                        const EngineConfig& cfg) {
  std::vector<BatchOutcome> outcomes(inputs.size());
  const auto n = static_cast<std::ptrdiff_t>(inputs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    outcomes[i] = run_one(inputs[i], detector, reviser, cfg);
  }
  return outcomes;
}

namespace serial {

std::vector<BatchOutcome> iterate_batch(std::span<const BatchInput> inputs,
                                        const Detector& detector,
                                        const Reviser& reviser,
                                        const EngineConfig& cfg) {
  std::vector<BatchOutcome> outcomes;
  outcomes.reserve(inputs.size());
  for (const BatchInput& input : inputs) {
    outcomes.push_back(run_one(input, detector, reviser, cfg));
  }
  return outcomes;
}

}  // namespace serial
}  // namespace revkit
