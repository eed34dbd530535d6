#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revkit/annotation.hpp"
#include "revkit/intent.hpp"
#include "revkit/text.hpp"

namespace revkit {

enum class AlignOp { kMatch, kDelete, kInsert };

struct AlignStep {
  AlignOp op;
  std::size_t before_index;  // valid for kMatch and kDelete
  std::size_t after_index;   // valid for kMatch and kInsert

  bool operator==(const AlignStep&) const = default;
};

// Replace before[src_start, src_end) with `replacement`. An empty range is a
// pure insertion.
struct Edit {
  std::size_t src_start = 0;
  std::size_t src_end = 0;
  std::string replacement;
  Intent intent = Intent::kNone;

  bool operator==(const Edit&) const = default;
};

// A changed region of `before` that is not covered by any editable span.
struct Violation {
  std::size_t src_start = 0;
  std::size_t src_end = 0;
  std::string replacement;

  bool operator==(const Violation&) const = default;
};

enum class StopReason { kNoEdit, kMaxDepth, kOscillation, kQualityDecrease };

std::string_view to_string(StopReason reason);
std::optional<StopReason> parse_stop_reason(std::string_view name);

struct RevisionStep {
  int depth = 1;
  std::string before;
  std::string after;
  std::vector<Edit> edits;
  std::vector<Intent> detector_labels;  // one per token of `before`
  std::vector<IntentSpan> spans;        // spans the reviser was given

  bool operator==(const RevisionStep&) const = default;
};

struct RevisionTrace {
  std::string doc_id;
  std::string group;  // optional cohort key for grouped flow analysis
  std::vector<RevisionStep> steps;
  StopReason stop_reason = StopReason::kNoEdit;

  bool operator==(const RevisionTrace&) const = default;
};

// Minimal LCS edit script over token texts. Ties prefer MATCH, then DELETE,
// then INSERT, so deletions precede insertions inside a changed region.
std::vector<AlignStep> align(const std::vector<std::string>& before,
                             const std::vector<std::string>& after);
std::vector<AlignStep> align(const std::vector<Token>& before,
                             const std::vector<Token>& after);

// Each stretch of text between two matched tokens that differs becomes one
// edit. Whitespace shared at both ends of a stretch is left out of the edit.
// apply_edits(before, extract_edits(before, after, i)) == after always holds.
std::vector<Edit> extract_edits(std::string_view before, std::string_view after,
                                Intent intent);

// Throws kOverlappingEdits (unsorted or overlapping) or kRangeOutOfBounds.
std::string apply_edits(std::string_view before, const std::vector<Edit>& edits);

// Empty iff `after` differs from `before` only inside the spans. A span also
// owns the whitespace around it, so deleting a token together with one of its
// neighbouring spaces is in bounds.
std::vector<Violation> validate_within_spans(std::string_view before,
                                             const std::vector<IntentSpan>& spans,
                                             std::string_view after);

// Keeps the changes of `after` that fall inside the spans and reverts the
// rest. The result always passes validate_within_spans.
std::string revert_outside_spans(std::string_view before,
                                 const std::vector<IntentSpan>& spans,
                                 std::string_view after);

// Like extract_edits, but each edit takes the intent of the span containing
// it. Edits outside every span are dropped.
std::vector<Edit> extract_span_edits(std::string_view before,
                                     const std::vector<IntentSpan>& spans,
                                     std::string_view after);

// One label per token of `before`: tokens overlapping an edit take its intent;
// a pure insertion (or a whitespace-only edit) labels the token left of it, or
// the first token when there is none.
std::vector<Intent> project_labels(std::string_view before,
                                   const std::vector<Edit>& edits);

}  // namespace revkit
