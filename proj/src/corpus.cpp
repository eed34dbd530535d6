#include "revkit/corpus.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "revkit/error.hpp"
#include "revkit/text.hpp"

namespace revkit {
namespace {

constexpr std::array<std::pair<SourceDataset, std::string_view>, 8> kSources = {{
    {SourceDataset::kIterater, "iterater"},
    {SourceDataset::kNucle, "nucle"},
    {SourceDataset::kLang8, "lang8"},
    {SourceDataset::kDiscofuse, "discofuse"},
    {SourceDataset::kNewsela, "newsela"},
    {SourceDataset::kWikilarge, "wikilarge"},
    {SourceDataset::kSplitRephrase, "split-rephrase"},
    {SourceDataset::kGyafc, "gyafc"},
}};

struct PairOutcome {
  std::optional<CorpusRecord> record;
  std::string discard_reason;
};

PairOutcome process_pair(SourceDataset source, const RawPair& pair, Split split,
                         const FilterConfig& cfg) {
  PairOutcome out;
  std::optional<Intent> intent = source_intent(source);
  if (!intent) {
    intent = parse_intent(pair.intent_label);
    if (!intent || *intent == Intent::kNone) {
      out.discard_reason = "out_of_taxonomy";
      return out;
    }
  }
  if (pair.before.empty()) {
    out.discard_reason = "empty_before";
    return out;
  }
  const FilterDecision decision = filter_pair(pair.before, pair.after, cfg);
  if (!decision.keep) {
    out.discard_reason = decision.reason;
    return out;
  }
  CorpusRecord record;
  record.record_id = std::string(to_string(source)) + "-" +
                     std::string(to_string(split)) + "-" + std::to_string(pair.line);
  record.source_dataset = source;
  record.split = split;
  record.before = pair.before;
  record.after = pair.after;
  record.intent = *intent;
  record.edits = extract_edits(pair.before, pair.after, *intent);
  record.labels = project_labels(pair.before, record.edits);
  out.record = std::move(record);
  return out;
}

IngestResult assemble(std::vector<PairOutcome>& outcomes) {
  IngestResult result;
  result.report.total = outcomes.size();
  for (auto& outcome : outcomes) {
    if (outcome.record) {
      result.records.push_back(std::move(*outcome.record));
    } else {
      ++result.report.reasons[outcome.discard_reason];
    }
  }
  result.report.kept = result.records.size();
  return result;
}

std::string json_string(const nlohmann::json& obj, std::initializer_list<const char*> keys,
                        std::size_t line_no) {
  for (const char* key : keys) {
    auto it = obj.find(key);
    if (it == obj.end()) continue;
    if (it->is_string()) return it->get<std::string>();
    // IteraTeR stores labels as a one-element list in some releases.
    if (it->is_array() && it->size() == 1 && (*it)[0].is_string()) {
      return (*it)[0].get<std::string>();
    }
  }
  throw Error(ErrorCode::kMalformedRecord,
              "line " + std::to_string(line_no) + ": missing field " + *keys.begin(),
              line_no);
}

}  // namespace

std::string_view to_string(SourceDataset source) {
  for (const auto& [value, name] : kSources) {
    if (value == source) return name;
  }
  return "iterater";
}

std::optional<SourceDataset> parse_source_dataset(std::string_view name) {
  for (const auto& [value, known] : kSources) {
    if (known == name) return value;
  }
  return std::nullopt;
}

std::string_view to_string(Split split) {
  switch (split) {
    case Split::kTrain: return "train";
    case Split::kValid: return "valid";
    case Split::kTest: return "test";
  }
  return "train";
}

std::optional<Split> parse_split(std::string_view name) {
  if (name == "train") return Split::kTrain;
  if (name == "valid" || name == "dev") return Split::kValid;
  if (name == "test") return Split::kTest;
  return std::nullopt;
}

std::optional<Intent> source_intent(SourceDataset source) {
  switch (source) {
    case SourceDataset::kIterater: return std::nullopt;
    case SourceDataset::kNucle:
    case SourceDataset::kLang8: return Intent::kFluency;
    case SourceDataset::kNewsela:
    case SourceDataset::kWikilarge:
    case SourceDataset::kSplitRephrase: return Intent::kClarity;
    case SourceDataset::kDiscofuse: return Intent::kCoherence;
    case SourceDataset::kGyafc: return Intent::kStyle;
  }
  return std::nullopt;
}

std::size_t levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t above = row[j];
      row[j] = std::min({above + 1, row[j - 1] + 1,
                         diagonal + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diagonal = above;
    }
  }
  return row[b.size()];
}

double char_similarity(std::string_view a, std::string_view b) {
  const std::u32string ua = utf8::decode(a);
  const std::u32string ub = utf8::decode(b);
  const std::size_t longest = std::max(ua.size(), ub.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(levenshtein(ua, ub)) /
                   static_cast<double>(longest);
}

FilterDecision filter_pair(std::string_view before, std::string_view after,
                           const FilterConfig& cfg) {
  const std::u32string ub = utf8::decode(before);
  const std::u32string ua = utf8::decode(after);
  if (ub.empty()) {
    throw Error(ErrorCode::kEmptyBefore, "length ratio undefined for empty text");
  }
  FilterDecision d;
  d.len_ratio = static_cast<double>(ua.size()) / static_cast<double>(ub.size());
  const std::size_t longest = std::max(ua.size(), ub.size());
  d.similarity = 1.0 - static_cast<double>(levenshtein(ub, ua)) /
                           static_cast<double>(longest);
  if (d.len_ratio < cfg.min_len_ratio || d.len_ratio > cfg.max_len_ratio) {
    d.keep = false;
    d.reason = "len_ratio";
    d.value = d.len_ratio;
  } else if (d.similarity < cfg.min_char_similarity) {
    d.keep = false;
    d.reason = "char_similarity";
    d.value = d.similarity;
  }
  return d;
}

RawPair parse_raw_line(std::string_view line, std::size_t line_no,
                       SourceDataset source) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  RawPair pair;
  pair.line = line_no;
  const bool iterater = source == SourceDataset::kIterater;
  if (iterater && !line.empty() && line.front() == '{') {
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kMalformedRecord,
                  "line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
    pair.before = json_string(obj, {"before_sent", "before"}, line_no);
    pair.after = json_string(obj, {"after_sent", "after"}, line_no);
    pair.intent_label = json_string(obj, {"labels", "intent"}, line_no);
    return pair;
  }
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab == std::string_view::npos
                                            ? std::string_view::npos
                                            : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  const std::size_t expected = iterater ? 3 : 2;
  if (fields.size() != expected) {
    throw Error(ErrorCode::kMalformedRecord,
                "line " + std::to_string(line_no) + ": expected " +
                    std::to_string(expected) + " tab-separated fields, got " +
                    std::to_string(fields.size()),
                line_no);
  }
  pair.before = std::string(fields[0]);
  pair.after = std::string(fields[1]);
  if (iterater) pair.intent_label = std::string(fields[2]);
  return pair;
}

std::vector<RawPair> read_raw_pairs(std::istream& in, SourceDataset source,
                                    std::size_t first_line) {
  std::vector<RawPair> pairs;
  std::string line;
  for (std::size_t line_no = first_line; std::getline(in, line); ++line_no) {
    if (line.empty() || line == "\r") continue;
    pairs.push_back(parse_raw_line(line, line_no, source));
  }
  return pairs;
}

double DiscardReport::discard_rate() const {
  return total == 0 ? 0.0
                    : static_cast<double>(total - kept) / static_cast<double>(total);
}

void DiscardReport::merge(const DiscardReport& other) {
  total += other.total;
  kept += other.kept;
  for (const auto& [reason, count] : other.reasons) reasons[reason] += count;
}

IngestResult ingest(SourceDataset source, std::span<const RawPair> pairs,
                    Split split, const FilterConfig& cfg) {
  std::vector<PairOutcome> outcomes(pairs.size());
  const auto n = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    outcomes[i] = process_pair(source, pairs[i], split, cfg);
  }
  return assemble(outcomes);
}

std::vector<FilterDecision> filter_batch(std::span<const RawPair> pairs,
                                         const FilterConfig& cfg) {
  std::vector<FilterDecision> decisions(pairs.size());
  const auto n = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (pairs[i].before.empty()) {
      decisions[i] = FilterDecision{false, "empty_before", 0.0, 0.0, 0.0};
    } else {
      decisions[i] = filter_pair(pairs[i].before, pairs[i].after, cfg);
    }
  }
  return decisions;
}

namespace serial {

IngestResult ingest(SourceDataset source, std::span<const RawPair> pairs,
                    Split split, const FilterConfig& cfg) {
  std::vector<PairOutcome> outcomes;
  outcomes.reserve(pairs.size());
  for (const RawPair& pair : pairs) {
    outcomes.push_back(process_pair(source, pair, split, cfg));
  }
  return assemble(outcomes);
}

std::vector<FilterDecision> filter_batch(std::span<const RawPair> pairs,
                                         const FilterConfig& cfg) {
  std::vector<FilterDecision> decisions;
  decisions.reserve(pairs.size());
  for (const RawPair& pair : pairs) {
    if (pair.before.empty()) {
      decisions.push_back(FilterDecision{false, "empty_before", 0.0, 0.0, 0.0});
    } else {
      decisions.push_back(filter_pair(pair.before, pair.after, cfg));
    }
  }
  return decisions;
}

}  // namespace serial

std::string DetectorExample::joined() const {
  std::string out;
  if (!context_before.empty()) {
    out += context_before;
    out += kSentenceBoundary;
  }
  out += text;
  if (!context_after.empty()) {
    out += kSentenceBoundary;
    out += context_after;
  }
  return out;
}

std::size_t DetectorExample::center_token_offset() const {
  return tokenize(context_before).size();
}

DetectorExample build_context_window(std::span<const LabeledSentence> sentences,
                                     std::size_t index, ContextMode mode) {
  if (index >= sentences.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "sentence " + std::to_string(index) + " of " +
                    std::to_string(sentences.size()),
                index);
  }
  DetectorExample example;
  example.text = sentences[index].text;
  example.labels = sentences[index].labels;
  if (mode == ContextMode::kMultiSentence) {
    if (index > 0) example.context_before = sentences[index - 1].text;
    if (index + 1 < sentences.size()) {
      example.context_after = sentences[index + 1].text;
    }
  }
  return example;
}

CorpusStats::CorpusStats() {
  for (Intent intent : kEditIntents) {
    cells[{intent, SourceGroup::kIterater}] = {};
    cells[{intent, SourceGroup::kTaskSpecific}] = {};
  }
}

void CorpusStats::add(const CorpusRecord& record) {
  if (record.intent == Intent::kNone) return;
  const SourceGroup group = record.source_dataset == SourceDataset::kIterater
                                ? SourceGroup::kIterater
                                : SourceGroup::kTaskSpecific;
  StatsCell& cell = cells[{record.intent, group}];
  ++cell.sentences;
  cell.edits += record.edits.size();
}

void CorpusStats::merge(const CorpusStats& other) {
  for (const auto& [key, cell] : other.cells) {
    cells[key].sentences += cell.sentences;
    cells[key].edits += cell.edits;
  }
}

StatsCell CorpusStats::total() const {
  StatsCell sum;
  for (const auto& [key, cell] : cells) {
    sum.sentences += cell.sentences;
    sum.edits += cell.edits;
  }
  return sum;
}

std::string CorpusStats::to_table() const {
  std::ostringstream out;
  out << "intent\tdataset\tsentences\tedits\n";
  for (Intent intent : {Intent::kFluency, Intent::kClarity, Intent::kCoherence,
                        Intent::kStyle}) {
    for (SourceGroup group : {SourceGroup::kIterater, SourceGroup::kTaskSpecific}) {
      const StatsCell& cell = cells.at({intent, group});
      out << to_string(intent) << '\t'
          << (group == SourceGroup::kIterater ? "iterater" : "task-specific")
          << '\t' << cell.sentences << '\t' << cell.edits << '\n';
    }
  }
  const StatsCell sum = total();
  out << "total\tall\t" << sum.sentences << '\t' << sum.edits << '\n';
  return out.str();
}

CorpusStats corpus_stats(std::span<const CorpusRecord> records) {
  CorpusStats stats;
  for (const CorpusRecord& record : records) stats.add(record);
  return stats;
}

}  // namespace revkit
