#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "revkit/config.hpp"
#include "revkit/editops.hpp"
#include "revkit/intent.hpp"

namespace revkit {

enum class SourceDataset {
  kIterater,
  kNucle,
  kLang8,
  kDiscofuse,
  kNewsela,
  kWikilarge,
  kSplitRephrase,
  kGyafc,
};

enum class Split { kTrain, kValid, kTest };

std::string_view to_string(SourceDataset source);
std::optional<SourceDataset> parse_source_dataset(std::string_view name);
std::string_view to_string(Split split);
std::optional<Split> parse_split(std::string_view name);

// Fixed intent of an external task corpus: GEC corpora are fluency,
// simplification and split-and-rephrase are clarity, fusion is coherence,
// formality transfer is style. IteraTeR carries per-record intents (nullopt).
std::optional<Intent> source_intent(SourceDataset source);

struct CorpusRecord {
  std::string record_id;
  SourceDataset source_dataset = SourceDataset::kIterater;
  Split split = Split::kTrain;
  std::string before;
  std::string after;
  Intent intent = Intent::kNone;
  std::vector<Edit> edits;
  std::vector<Intent> labels;

  bool operator==(const CorpusRecord&) const = default;
};

struct FilterDecision {
  bool keep = true;
  std::string reason;  // "len_ratio" or "char_similarity" when discarded
  double value = 0.0;  // the measurement that failed
  double len_ratio = 0.0;
  double similarity = 0.0;
};

std::size_t levenshtein(std::u32string_view a, std::u32string_view b);
// 1 - levenshtein / max(len); 1.0 for two empty strings.
double char_similarity(std::string_view a, std::string_view b);

// Throws kEmptyBefore when `before` is empty.
FilterDecision filter_pair(std::string_view before, std::string_view after,
                           const FilterConfig& cfg);

// One parallel pair as read from an input file.
struct RawPair {
  std::size_t line = 0;
  std::string before;
  std::string after;
  std::string intent_label;  // only for IteraTeR input
};

// Reads `before \t after` lines for external corpora; IteraTeR lines are
// either `before \t after \t intent` or JSON objects with before_sent /
// after_sent / labels (or before / after / intent). Blank lines are skipped.
// Throws kMalformedRecord with the 1-based line number.
RawPair parse_raw_line(std::string_view line, std::size_t line_no,
                       SourceDataset source);
std::vector<RawPair> read_raw_pairs(std::istream& in, SourceDataset source,
                                    std::size_t first_line = 1);

struct DiscardReport {
  std::size_t total = 0;
  std::size_t kept = 0;
  std::map<std::string, std::size_t> reasons;

  double discard_rate() const;
  void merge(const DiscardReport& other);
};

struct IngestResult {
  std::vector<CorpusRecord> records;  // input order
  DiscardReport report;
};

// Filters every pair, assigns the source intent, extracts edits and projects
// token labels. Records keep input order.
IngestResult ingest(SourceDataset source, std::span<const RawPair> pairs,
                    Split split, const FilterConfig& cfg);

std::vector<FilterDecision> filter_batch(std::span<const RawPair> pairs,
                                         const FilterConfig& cfg);

// Single-threaded reference implementations of the batch kernels.
namespace serial {
IngestResult ingest(SourceDataset source, std::span<const RawPair> pairs,
                    Split split, const FilterConfig& cfg);
std::vector<FilterDecision> filter_batch(std::span<const RawPair> pairs,
                                         const FilterConfig& cfg);
}  // namespace serial

struct LabeledSentence {
  std::string text;
  std::vector<Intent> labels;  // gold labels, may be empty
};

// Detector input: the center sentence plus optional neighbours. Gold labels
// belong to the center sentence only.
struct DetectorExample {
  std::string context_before;
  std::string text;
  std::string context_after;
  std::vector<Intent> labels;

  // Neighbours joined with a newline boundary marker.
  std::string joined() const;
  // Number of tokens that precede the center sentence in joined().
  std::size_t center_token_offset() const;
};

inline constexpr std::string_view kSentenceBoundary = "\n";

DetectorExample build_context_window(std::span<const LabeledSentence> sentences,
                                     std::size_t index, ContextMode mode);

enum class SourceGroup { kIterater, kTaskSpecific };

struct StatsCell {
  std::size_t sentences = 0;
  std::size_t edits = 0;

  bool operator==(const StatsCell&) const = default;
};

struct CorpusStats {
  // Keyed by (intent, group); every edit intent/group pair is present.
  std::map<std::pair<Intent, SourceGroup>, StatsCell> cells;

  CorpusStats();
  void add(const CorpusRecord& record);
  void merge(const CorpusStats& other);
  StatsCell total() const;
  // Intent rows in fluency, clarity, coherence, style order.
  std::string to_table() const;

  bool operator==(const CorpusStats&) const = default;
};

CorpusStats corpus_stats(std::span<const CorpusRecord> records);

}  // namespace revkit
