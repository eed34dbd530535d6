#include "revkit/cli.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "revkit/analysis.hpp"
#include "revkit/annotation.hpp"
#include "revkit/backends.hpp"
#include "revkit/config.hpp"
#include "revkit/corpus.hpp"
#include "revkit/engine.hpp"
#include "revkit/error.hpp"
#include "revkit/io.hpp"
#include "revkit/metrics.hpp"
#include "revkit/remote.hpp"

namespace revkit::cli {
namespace {

using nlohmann::json;

// Lines handed to the workers per round; output is written after each round.
constexpr std::size_t kChunkLines = 1024;

struct CommonFlags {
  std::string in = "-";
  std::string out = "-";
  int jobs = 0;
  std::uint64_t seed = 0;  // reserved for sampling revisers
};

struct BackendFlags {
  std::string backend = "rules";
  std::string rules;
  std::string endpoint;
};

struct EngineFlags {
  int max_depth = 4;
  std::string context = "single";
  std::string annotation = "span";
  std::string quality_guard;
  bool gate = false;
};

struct FilterFlags {
  std::string source;
  std::string split = "train";
  std::string report;
  double min_len_ratio = 0.5;
  double max_len_ratio = 2.0;
  double min_similarity = 0.35;
};

struct EvalFlags {
  std::string metric = "all";
  std::string src;
  std::string hyp;
  std::vector<std::string> refs;
  std::string gold;
  std::string pred;
  int precision = 2;
};

struct FlowFlags {
  std::string format = "sankey";
  bool by_group = false;
};

// Usage errors found after CLI11 parsing, e.g. missing backend settings.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Streams {
 public:
  Streams(const CommonFlags& flags, std::istream& in, std::ostream& out) {
    if (flags.in == "-") {
      in_ = &in;
    } else {
      in_file_.open(flags.in);
      if (!in_file_) throw Error(ErrorCode::kIoError, "cannot open " + flags.in);
      in_ = &in_file_;
    }
    if (flags.out == "-") {
      out_ = &out;
    } else {
      out_file_.open(flags.out, std::ios::binary);
      if (!out_file_) throw Error(ErrorCode::kIoError, "cannot write " + flags.out);
      out_ = &out_file_;
    }
  }

  std::istream& in() { return *in_; }
  std::ostream& out() { return *out_; }

 private:
  std::ifstream in_file_;
  std::ofstream out_file_;
  std::istream* in_ = nullptr;
  std::ostream* out_ = nullptr;
};

std::vector<std::string> read_text_lines(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(file, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

double round_to(double value, int digits) {
  const double scale = std::pow(10.0, digits);
  return std::round(value * scale) / scale;
}

FilterConfig filter_config(const FilterFlags& f) {
  FilterConfig cfg;
  cfg.min_len_ratio = f.min_len_ratio;
  cfg.max_len_ratio = f.max_len_ratio;
  cfg.min_char_similarity = f.min_similarity;
  cfg.validate();
  return cfg;
}

EngineConfig engine_config(const EngineFlags& f) {
  EngineConfig cfg;
  cfg.max_depth = f.max_depth;
  cfg.context_mode =
      f.context == "multi" ? ContextMode::kMultiSentence : ContextMode::kSingleSentence;
  cfg.annotation_mode =
      f.annotation == "prefix" ? AnnotationMode::kSentencePrefix : AnnotationMode::kSpanTags;
  if (!f.quality_guard.empty()) cfg.quality_guard = parse_quality_metric(f.quality_guard);
  cfg.gate_on_needs_edit = f.gate;
  cfg.validate();
  return cfg;
}

struct Backend {
  std::unique_ptr<Detector> detector_owner;
  std::unique_ptr<Reviser> reviser_owner;
  std::unique_ptr<RemoteBackend> remote;
  const Detector* detector = nullptr;
  const Reviser* reviser = nullptr;
};

Backend make_backend(const BackendFlags& f) {
  Backend b;
  if (f.backend == "rules") {
    if (f.rules.empty()) throw UsageError("--backend rules needs --rules FILE");
    RuleTable table = load_rule_table(f.rules);
    b.detector_owner = std::make_unique<RuleDetector>(std::move(table.detection));
    b.reviser_owner = std::make_unique<RuleReviser>(std::move(table.revision));
    b.detector = b.detector_owner.get();
    b.reviser = b.reviser_owner.get();
    return b;
  }
  if (!f.rules.empty()) throw UsageError("--rules cannot be combined with --backend remote");
  if (f.endpoint.empty()) {
    throw UsageError("--backend remote needs --endpoint URL or REVKIT_ENDPOINT");
  }
  b.remote = std::make_unique<RemoteBackend>(f.endpoint);
  b.detector = b.remote.get();
  b.reviser = b.remote.get();
  return b;
}

// Runs `work` over each chunk of input lines in parallel and writes the
// results in input order. The first error of a chunk is rethrown after the
// lines before it have been written.
template <typename Work>
void stream_lines(std::istream& in, std::ostream& out, Work work) {
  std::size_t line_no = 0;
  while (true) {
    auto lines = read_lines(in, kChunkLines, line_no);
    if (lines.empty()) break;
    std::vector<std::string> results(lines.size());
    std::vector<std::optional<Error>> errors(lines.size());
    const auto n = static_cast<std::ptrdiff_t>(lines.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      try {
        results[i] = work(lines[i].second, lines[i].first);
      } catch (const Error& e) {
        errors[i] = e;
      }
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (errors[i]) throw *errors[i];
      out << results[i] << '\n';
    }
  }
}

SourceDataset source_flag(const std::string& name) {
  auto source = parse_source_dataset(name);
  if (!source) throw UsageError("unknown --source '" + name + "'");
  return *source;
}

Split split_flag(const std::string& name) {
  auto split = parse_split(name);
  if (!split) throw UsageError("unknown --split '" + name + "'");
  return *split;
}

json report_json(const DiscardReport& report) {
  return {{"total", report.total},
          {"kept", report.kept},
          {"discarded", report.total - report.kept},
          {"discard_rate", report.discard_rate()},
          {"reasons", report.reasons}};
}

DiscardReport run_ingest(const FilterFlags& f, std::istream& in, std::ostream* records) {
  const SourceDataset source = source_flag(f.source);
  const Split split = split_flag(f.split);
  const FilterConfig cfg = filter_config(f);
  DiscardReport total;
  std::size_t line_no = 0;
  while (true) {
    auto lines = read_lines(in, kChunkLines, line_no);
    if (lines.empty()) break;
    std::vector<RawPair> pairs;
    pairs.reserve(lines.size());
    for (const auto& [no, text] : lines) pairs.push_back(parse_raw_line(text, no, source));
    IngestResult result = ingest(source, pairs, split, cfg);
    total.merge(result.report);
    if (records) {
      for (const CorpusRecord& r : result.records) *records << to_line(json(r)) << '\n';
    }
  }
  return total;
}

int cmd_filter(const CommonFlags& c, const FilterFlags& f, std::istream& in,
               std::ostream& out) {
  Streams io(c, in, out);
  const DiscardReport report = run_ingest(f, io.in(), nullptr);
  io.out() << to_line(report_json(report)) << '\n';
  return kExitOk;
}

int cmd_ingest(const CommonFlags& c, const FilterFlags& f, std::istream& in,
               std::ostream& out, std::ostream& err) {
  Streams io(c, in, out);
  const DiscardReport report = run_ingest(f, io.in(), &io.out());
  const std::string line = to_line(report_json(report));
  if (f.report.empty()) {
    err << line << '\n';
  } else {
    std::ofstream file(f.report);
    if (!file) throw Error(ErrorCode::kIoError, "cannot write " + f.report);
    file << line << '\n';
  }
  return kExitOk;
}

int cmd_stats(const CommonFlags& c, std::istream& in, std::ostream& out) {
  Streams io(c, in, out);
  CorpusStats stats;
  std::size_t line_no = 0;
  while (true) {
    auto lines = read_lines(io.in(), kChunkLines, line_no);
    if (lines.empty()) break;
    for (const auto& [no, text] : lines) stats.add(parse_line<CorpusRecord>(text, no));
  }
  io.out() << stats.to_table();
  return kExitOk;
}

int cmd_detect(const CommonFlags& c, const BackendFlags& b, const EngineFlags& e,
               std::istream& in, std::ostream& out) {
  const EngineConfig cfg = engine_config(e);
  const Backend backend = make_backend(b);
  Streams io(c, in, out);
  stream_lines(io.in(), io.out(), [&](const std::string& line, std::size_t no) {
    const BatchInput input = parse_line<BatchInput>(line, no);
    const auto labels = detect_labels(input.doc.text, *backend.detector, cfg);
    const auto tokens = tokenize(input.doc.text);
    const AnnotatedText annotated{input.doc.text, spans_from_labels(tokens, labels)};
    json labels_json = json::array();
    for (Intent l : labels) labels_json.push_back(intent_to_json(l));
    return to_line({{"doc_id", input.doc.doc_id},
                    {"annotated", render_annotated(annotated)},
                    {"spans", annotated.spans},
                    {"labels", labels_json}});
  });
  return kExitOk;
}

int cmd_revise(const CommonFlags& c, const BackendFlags& b, const EngineFlags& e,
               std::istream& in, std::ostream& out) {
  const EngineConfig cfg = engine_config(e);
  const Backend backend = make_backend(b);
  Streams io(c, in, out);
  stream_lines(io.in(), io.out(), [&](const std::string& line, std::size_t no) {
    const BatchInput input = parse_line<BatchInput>(line, no);
    const auto step = revise_once(input.doc, *backend.detector, *backend.reviser, cfg);
    return to_line({{"doc_id", input.doc.doc_id},
                    {"revised", step ? step->after : input.doc.text},
                    {"step", step ? json(*step) : json(nullptr)}});
  });
  return kExitOk;
}

int cmd_iterate(const CommonFlags& c, const BackendFlags& b, const EngineFlags& e,
                std::istream& in, std::ostream& out, std::ostream& err) {
  const EngineConfig cfg = engine_config(e);
  const Backend backend = make_backend(b);
  Streams io(c, in, out);
  std::size_t line_no = 0;
  std::size_t failures = 0;
  while (true) {
    auto lines = read_lines(io.in(), kChunkLines, line_no);
    if (lines.empty()) break;
    std::vector<BatchInput> inputs;
    inputs.reserve(lines.size());
    for (const auto& [no, text] : lines) inputs.push_back(parse_line<BatchInput>(text, no));
    const auto outcomes = iterate_batch(inputs, *backend.detector, *backend.reviser, cfg);
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      json j = outcomes[i].trace;
      if (outcomes[i].error) {
        const Error& error = *outcomes[i].error;
        j["error"] = {{"code", std::string(to_string(error.code()))},
                      {"message", error.what()}};
        err << "line " << lines[i].first << ": " << error.what() << '\n';
        ++failures;
      }
      io.out() << to_line(j) << '\n';
    }
  }
  return failures == 0 ? kExitOk : kExitDataError;
}

std::vector<std::vector<Intent>> read_label_file(const std::string& path) {
  std::vector<std::vector<Intent>> out;
  std::size_t line_no = 0;
  for (const std::string& line : read_text_lines(path)) {
    ++line_no;
    std::vector<Intent> labels;
    std::istringstream words(line);
    std::string word;
    while (words >> word) {
      auto intent = parse_intent(word);
      if (!intent) {
        throw Error(ErrorCode::kParseError,
                    path + ":" + std::to_string(line_no) + ": unknown intent '" + word + "'",
                    line_no);
      }
      labels.push_back(*intent);
    }
    out.push_back(std::move(labels));
  }
  return out;
}

json order_array(const std::array<double, kMaxOrder>& values) {
  return json(std::vector<double>(values.begin(), values.end()));
}

json f1_cell_json(const F1Cell& cell) {
  return {{"tp", cell.tp},           {"fp", cell.fp},         {"fn", cell.fn},
          {"precision", cell.precision}, {"recall", cell.recall}, {"f1", cell.f1}};
}

int cmd_eval(const CommonFlags& c, const EvalFlags& f, std::istream& in, std::ostream& out) {
  const bool want_bleu = f.metric == "bleu" || f.metric == "all";
  const bool want_rouge = f.metric == "rouge" || f.metric == "all";
  const bool want_sari = f.metric == "sari" || f.metric == "all";
  const bool want_f1 = f.metric == "f1" || (f.metric == "all" && !f.gold.empty());
  const bool want_text = want_bleu || want_rouge || want_sari;
  if (want_text && (f.hyp.empty() || f.refs.empty())) {
    throw UsageError("--metric " + f.metric + " needs --hyp and at least one --ref");
  }
  if (want_sari && f.src.empty()) throw UsageError("sari needs --src");
  if (want_f1 && (f.gold.empty() || f.pred.empty())) {
    throw UsageError("f1 needs --gold and --pred");
  }
  Streams io(c, in, out);
  std::vector<json> report;
  if (want_text) {
    const auto hyps = read_text_lines(f.hyp);
    const auto srcs = f.src.empty() ? hyps : read_text_lines(f.src);
    std::vector<std::vector<std::string>> refs(hyps.size());
    for (const std::string& path : f.refs) {
      const auto lines = read_text_lines(path);
      if (lines.size() != hyps.size()) {
        throw Error(ErrorCode::kShapeMismatch, path + " has " + std::to_string(lines.size()) +
                                                   " lines, hypotheses have " +
                                                   std::to_string(hyps.size()));
      }
      for (std::size_t i = 0; i < lines.size(); ++i) refs[i].push_back(lines[i]);
    }
    const CorpusScores scores = evaluate_corpus(srcs, hyps, refs);
    if (want_bleu) {
      report.push_back({{"metric", "bleu"}, {"value", round_to(scores.bleu, f.precision + 2)}});
    }
    if (want_rouge) {
      report.push_back({{"metric", "rouge_l"},
                        {"value", round_to(scores.rouge.f, f.precision)},
                        {"breakdown",
                         {{"precision", scores.rouge.precision}, {"recall", scores.rouge.recall}}}});
    }
    if (want_sari) {
      std::array<double, kMaxOrder> add{}, keep{}, del{};
      for (std::size_t i = 0; i < hyps.size(); ++i) {
        const SariBreakdown s = sari(srcs[i], hyps[i], refs[i]);
        for (std::size_t n = 0; n < kMaxOrder; ++n) {
          add[n] += s.add_f[n] / static_cast<double>(hyps.size());
          keep[n] += s.keep_f[n] / static_cast<double>(hyps.size());
          del[n] += s.del_p[n] / static_cast<double>(hyps.size());
        }
      }
      report.push_back({{"metric", "sari"},
                        {"value", round_to(scores.sari, f.precision)},
                        {"breakdown",
                         {{"add_f", order_array(add)},
                          {"keep_f", order_array(keep)},
                          {"del_p", order_array(del)}}}});
    }
  }
  if (want_f1) {
    const F1Report r = token_f1(read_label_file(f.gold), read_label_file(f.pred));
    json per_intent = json::object();
    for (std::size_t i = 0; i < kEditIntents.size(); ++i) {
      per_intent[std::string(to_string(kEditIntents[i]))] = f1_cell_json(r.per_intent[i]);
    }
    report.push_back({{"metric", "f1"},
                      {"value", round_to(r.overall.f1, f.precision)},
                      {"breakdown", {{"overall", f1_cell_json(r.overall)}, {"per_intent", per_intent}}}});
  }
  for (const json& line : report) io.out() << to_line(line) << '\n';
  return kExitOk;
}

int cmd_flows(const CommonFlags& c, const FlowFlags& f, std::istream& in, std::ostream& out) {
  Streams io(c, in, out);
  std::vector<RevisionTrace> traces;
  std::size_t line_no = 0;
  while (true) {
    auto lines = read_lines(io.in(), kChunkLines, line_no);
    if (lines.empty()) break;
    for (const auto& [no, text] : lines) traces.push_back(parse_line<RevisionTrace>(text, no));
  }
  const bool csv = f.format == "csv";
  if (!f.by_group) {
    const FlowMatrix m = transitions(traces);
    if (csv) {
      io.out() << export_csv(m);
    } else {
      io.out() << export_sankey(m).dump(2) << '\n';
    }
    return kExitOk;
  }
  const auto groups = transitions_by_group(traces);
  if (csv) {
    io.out() << "group,depth,from,to,count\n";
    for (const auto& [group, m] : groups) {
      std::istringstream rows(export_csv(m));
      std::string row;
      std::getline(rows, row);  // header
      while (std::getline(rows, row)) io.out() << group << ',' << row << '\n';
    }
    return kExitOk;
  }
  json doc = json::object();
  for (const auto& [group, m] : groups) doc[group] = export_sankey(m);
  io.out() << doc.dump(2) << '\n';
  return kExitOk;
}

void add_common(CLI::App& cmd, CommonFlags& c) {
  cmd.add_option("--in", c.in, "Input file, - for stdin")->capture_default_str()
      ->check(CLI::ExistingFile | CLI::IsMember({"-"}));
  cmd.add_option("--out", c.out, "Output file, - for stdout")->capture_default_str();
  cmd.add_option("--jobs", c.jobs, "Worker threads (0: OpenMP default)")
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("--seed", c.seed, "Reserved; the pipeline is deterministic");
}

void add_backend(CLI::App& cmd, BackendFlags& b) {
  cmd.add_option("--backend", b.backend, "Detector/reviser backend")
      ->check(CLI::IsMember({"rules", "remote"}))
      ->capture_default_str();
  cmd.add_option("--rules", b.rules, "Rule table for --backend rules")
      ->check(CLI::ExistingFile);
  cmd.add_option("--endpoint", b.endpoint, "Server URL for --backend remote")
      ->envname("REVKIT_ENDPOINT");
}

void add_engine(CLI::App& cmd, EngineFlags& e, bool iterate) {
  if (iterate) {
    cmd.add_option("--max-depth", e.max_depth, "Maximum revision depth")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd.add_option("--quality-guard", e.quality_guard,
                   "Stop when this metric drops (needs references)")
        ->check(CLI::IsMember({"sari", "bleu", "rouge_l"}));
  }
  cmd.add_option("--context", e.context, "Detector context")
      ->check(CLI::IsMember({"single", "multi"}))
      ->capture_default_str();
  cmd.add_option("--annotation", e.annotation, "Reviser input format")
      ->check(CLI::IsMember({"span", "prefix"}))
      ->capture_default_str();
  cmd.add_flag("--multi-task", e.gate, "Skip sentences the detector marks as clean");
}

void add_filter(CLI::App& cmd, FilterFlags& f, bool ingest) {
  cmd.add_option("--source", f.source, "Source corpus")
      ->required()
      ->check(CLI::IsMember({"iterater", "nucle", "lang8", "discofuse", "newsela",
                             "wikilarge", "split-rephrase", "gyafc"}));
  cmd.add_option("--split", f.split, "Split name")
      ->check(CLI::IsMember({"train", "valid", "dev", "test"}))
      ->capture_default_str();
  cmd.add_option("--min-len-ratio", f.min_len_ratio)->capture_default_str();
  cmd.add_option("--max-len-ratio", f.max_len_ratio)->capture_default_str();
  cmd.add_option("--min-similarity", f.min_similarity)->capture_default_str();
  if (ingest) cmd.add_option("--report", f.report, "Write the discard report here");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Intent-aware iterative text revision toolkit", "revkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "revkit 0.1.0");

  CommonFlags common;
  BackendFlags backend;
  EngineFlags engine;
  FilterFlags filter;
  EvalFlags eval;
  FlowFlags flows;

  auto* filter_cmd = app.add_subcommand("filter", "Report which pairs the corpus filter keeps");
  add_common(*filter_cmd, common);
  add_filter(*filter_cmd, filter, false);

  auto* ingest_cmd = app.add_subcommand("ingest", "Filter pairs and write corpus records");
  add_common(*ingest_cmd, common);
  add_filter(*ingest_cmd, filter, true);

  auto* stats_cmd = app.add_subcommand("stats", "Sentence and edit counts per intent");
  add_common(*stats_cmd, common);

  auto* detect_cmd = app.add_subcommand("detect", "Annotate documents with intent spans");
  add_common(*detect_cmd, common);
  add_backend(*detect_cmd, backend);
  add_engine(*detect_cmd, engine, false);

  auto* revise_cmd = app.add_subcommand("revise", "Run one detect-and-revise round");
  add_common(*revise_cmd, common);
  add_backend(*revise_cmd, backend);
  add_engine(*revise_cmd, engine, false);

  auto* iterate_cmd = app.add_subcommand("iterate", "Revise documents until a stop condition");
  add_common(*iterate_cmd, common);
  add_backend(*iterate_cmd, backend);
  add_engine(*iterate_cmd, engine, true);

  auto* eval_cmd = app.add_subcommand("eval", "BLEU, ROUGE-L, SARI and token F1");
  add_common(*eval_cmd, common);
  eval_cmd->add_option("--metric", eval.metric)
      ->check(CLI::IsMember({"bleu", "rouge", "sari", "f1", "all"}))
      ->capture_default_str();
  eval_cmd->add_option("--src", eval.src, "Source sentences, one per line")
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--hyp", eval.hyp, "System outputs, one per line")
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--ref", eval.refs, "Reference file; repeat for more references")
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--gold", eval.gold, "Gold token intents, space separated")
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--pred", eval.pred, "Predicted token intents")
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--precision", eval.precision, "Decimals in reported values")
      ->check(CLI::Range(0, 12))
      ->capture_default_str();

  auto* flows_cmd = app.add_subcommand("flows", "Intent transition flows from traces");
  add_common(*flows_cmd, common);
  flows_cmd->add_option("--format", flows.format)
      ->check(CLI::IsMember({"sankey", "csv"}))
      ->capture_default_str();
  flows_cmd->add_flag("--by-group", flows.by_group, "One flow per trace group");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  if (common.jobs > 0) omp_set_num_threads(common.jobs);
  try {
    if (filter_cmd->parsed()) return cmd_filter(common, filter, in, out);
    if (ingest_cmd->parsed()) return cmd_ingest(common, filter, in, out, err);
    if (stats_cmd->parsed()) return cmd_stats(common, in, out);
    if (detect_cmd->parsed()) return cmd_detect(common, backend, engine, in, out);
    if (revise_cmd->parsed()) return cmd_revise(common, backend, engine, in, out);
    if (iterate_cmd->parsed()) return cmd_iterate(common, backend, engine, in, out, err);
    if (eval_cmd->parsed()) return cmd_eval(common, eval, in, out);
    if (flows_cmd->parsed()) return cmd_flows(common, flows, in, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.get_subcommands().front()->help();
    return kExitUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitDataError;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kExitDataError;
  }
  return kExitUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace revkit::cli
