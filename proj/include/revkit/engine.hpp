#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "revkit/backends.hpp"
#include "revkit/config.hpp"
#include "revkit/editops.hpp"
#include "revkit/error.hpp"

namespace revkit {

// Token labels for the whole document, detected sentence by sentence (with
// neighbour context in multi-sentence mode). Sentences the multi-task head
// marks as clean are all NONE when cfg.gate_on_needs_edit is set.
std::vector<Intent> detect_labels(std::string_view text, const Detector& detector,
                                  const EngineConfig& cfg);

// One delineate-and-edit round. Detection runs per sentence (with neighbour
// context in multi-sentence mode). In span-tag mode the reviser sees the whole
// document with every span tagged; in sentence-prefix mode each flagged
// sentence is revised on its own under its majority intent. Reviser changes
// outside the spans are reverted. Returns nullopt when every token is NONE.
std::optional<RevisionStep> revise_once(const Document& doc,
                                        const Detector& detector,
                                        const Reviser& reviser,
                                        const EngineConfig& cfg);

// Backend failure during iterate(); carries the steps completed so far.
class IterateError : public Error {
 public:
  IterateError(const Error& cause, RevisionTrace partial);
  const RevisionTrace& partial_trace() const noexcept { return partial_; }

 private:
  RevisionTrace partial_;
};

// Runs rounds until one of:
//   NO_EDIT          no spans, or the text did not change
//   MAX_DEPTH        cfg.max_depth rounds completed
//   OSCILLATION      the round produced a text seen earlier in the trace
//   QUALITY_DECREASE cfg.quality_guard score against `references` dropped
// Rounds that trigger OSCILLATION or QUALITY_DECREASE are not recorded, so
// every text in a trace is distinct.
RevisionTrace iterate(const Document& doc, const Detector& detector,
                      const Reviser& reviser, const EngineConfig& cfg,
                      std::span<const std::string> references = {});

struct BatchInput {
  Document doc;
  std::vector<std::string> references;
  std::string group;
};

struct BatchOutcome {
  RevisionTrace trace;  // partial when `error` is set
  std::optional<Error> error;
};

// Documents run concurrently; outcomes keep input order.
std::vector<BatchOutcome> iterate_batch(std::span<const BatchInput> inputs,
                                        const Detector& detector,
                                        const Reviser& reviser,
                                        const EngineConfig& cfg);

namespace serial {
std::vector<BatchOutcome> iterate_batch(std::span<const BatchInput> inputs,
                                        const Detector& detector,
                                        const Reviser& reviser,
                                        const EngineConfig& cfg);
}  // namespace serial

}  // namespace revkit
