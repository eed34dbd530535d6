#include "revkit/io.hpp"

#include <istream>

#include "revkit/error.hpp"

namespace revkit {

using nlohmann::json;

namespace {

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return fallback;
  return it->get<T>();
}

std::vector<Intent> intents_from_json(const json& j) {
  std::vector<Intent> out;
  for (const json& label : j) out.push_back(intent_from_json(label));
  return out;
}

json intents_to_json(const std::vector<Intent>& labels) {
  json out = json::array();
  for (Intent i : labels) out.push_back(intent_to_json(i));
  return out;
}

}  // namespace

json intent_to_json(Intent intent) { return std::string(to_string(intent)); }

Intent intent_from_json(const json& j) {
  const auto name = j.get<std::string>();
  auto intent = parse_intent(name);
  if (!intent) throw Error(ErrorCode::kParseError, "unknown intent '" + name + "'");
  return *intent;
}

void to_json(json& j, const IntentSpan& span) {
  j = {{"start", span.start}, {"end", span.end}, {"intent", intent_to_json(span.intent)}};
}

void from_json(const json& j, IntentSpan& span) {
  span.start = j.at("start").get<std::size_t>();
  span.end = j.at("end").get<std::size_t>();
  span.intent = intent_from_json(j.at("intent"));
}

void to_json(json& j, const Edit& edit) {
  j = {{"src_start", edit.src_start},
       {"src_end", edit.src_end},
       {"replacement", edit.replacement},
       {"intent", intent_to_json(edit.intent)}};
}

void from_json(const json& j, Edit& edit) {
  edit.src_start = j.at("src_start").get<std::size_t>();
  edit.src_end = j.at("src_end").get<std::size_t>();
  edit.replacement = j.at("replacement").get<std::string>();
  edit.intent = intent_from_json(j.at("intent"));
}

void to_json(json& j, const RevisionStep& step) {
  j = {{"depth", step.depth},
       {"before", step.before},
       {"after", step.after},
       {"edits", step.edits},
       {"detector_labels", intents_to_json(step.detector_labels)},
       {"spans", step.spans}};
}

void from_json(const json& j, RevisionStep& step) {
  step.depth = j.at("depth").get<int>();
  step.before = j.at("before").get<std::string>();
  step.after = j.at("after").get<std::string>();
  step.edits = get_or(j, "edits", std::vector<Edit>{});
  step.detector_labels =
      j.contains("detector_labels") ? intents_from_json(j["detector_labels"]) : std::vector<Intent>{};
  step.spans = get_or(j, "spans", std::vector<IntentSpan>{});
}

void to_json(json& j, const RevisionTrace& trace) {
  j = {{"doc_id", trace.doc_id},
       {"group", trace.group},
       {"steps", trace.steps},
       {"stop_reason", std::string(to_string(trace.stop_reason))}};
}

void from_json(const json& j, RevisionTrace& trace) {
  trace.doc_id = j.at("doc_id").get<std::string>();
  trace.group = get_or(j, "group", std::string{});
  trace.steps = get_or(j, "steps", std::vector<RevisionStep>{});
  const auto reason = j.at("stop_reason").get<std::string>();
  auto parsed = parse_stop_reason(reason);
  if (!parsed) throw Error(ErrorCode::kParseError, "unknown stop reason '" + reason + "'");
  trace.stop_reason = *parsed;
}

void to_json(json& j, const CorpusRecord& record) {
  j = {{"record_id", record.record_id},
       {"source_dataset", std::string(to_string(record.source_dataset))},
       {"split", std::string(to_string(record.split))},
       {"before", record.before},
       {"after", record.after},
       {"intent", intent_to_json(record.intent)},
       {"edits", record.edits},
       {"labels", intents_to_json(record.labels)}};
}

void from_json(const json& j, CorpusRecord& record) {
  record.record_id = j.at("record_id").get<std::string>();
  const auto source = j.at("source_dataset").get<std::string>();
  auto parsed_source = parse_source_dataset(source);
  if (!parsed_source) {
    throw Error(ErrorCode::kParseError, "unknown source dataset '" + source + "'");
  }
  record.source_dataset = *parsed_source;
  const auto split = j.at("split").get<std::string>();
  auto parsed_split = parse_split(split);
  if (!parsed_split) throw Error(ErrorCode::kParseError, "unknown split '" + split + "'");
  record.split = *parsed_split;
  record.before = j.at("before").get<std::string>();
  record.after = j.at("after").get<std::string>();
  record.intent = intent_from_json(j.at("intent"));
  record.edits = get_or(j, "edits", std::vector<Edit>{});
  record.labels = j.contains("labels") ? intents_from_json(j["labels"]) : std::vector<Intent>{};
}

void to_json(json& j, const BatchInput& input) {
  j = {{"doc_id", input.doc.doc_id}, {"text", input.doc.text}};
  if (!input.references.empty()) j["references"] = input.references;
  if (!input.group.empty()) j["group"] = input.group;
}

void from_json(const json& j, BatchInput& input) {
  input.doc.doc_id = j.at("doc_id").get<std::string>();
  input.doc.text = j.at("text").get<std::string>();
  input.doc.depth = 0;
  input.references = get_or(j, "references", std::vector<std::string>{});
  input.group = get_or(j, "group", std::string{});
}

template <typename T>
T parse_line(std::string_view line, std::size_t line_no) {
  try {
    return json::parse(line).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, "line " + std::to_string(line_no) + ": " + e.what(),
                line_no);
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(line_no) + ": " + std::string(e.what()), line_no);
  }
}

template IntentSpan parse_line<IntentSpan>(std::string_view, std::size_t);
template Edit parse_line<Edit>(std::string_view, std::size_t);
template RevisionStep parse_line<RevisionStep>(std::string_view, std::size_t);
template RevisionTrace parse_line<RevisionTrace>(std::string_view, std::size_t);
template CorpusRecord parse_line<CorpusRecord>(std::string_view, std::size_t);
template BatchInput parse_line<BatchInput>(std::string_view, std::size_t);

std::string to_line(const json& j) { return j.dump(); }

std::vector<std::pair<std::size_t, std::string>> read_lines(std::istream& in,
                                                            std::size_t max_lines,
                                                            std::size_t& line_no) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::string line;
  while (out.size() < max_lines && std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    out.emplace_back(line_no, std::move(line));
  }
  return out;
}

}  // namespace revkit
