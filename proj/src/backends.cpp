#include "revkit/backends.hpp"

#include <algorithm>
#include <fstream>
#include <istream>

#include "revkit/error.hpp"
#include "revkit/text.hpp"

namespace revkit {
namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab == std::string::npos ? std::string::npos
                                                                 : tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

Intent rule_intent(const std::string& name, std::size_t line_no) {
  const auto intent = parse_intent(name);
  if (!intent || *intent == Intent::kNone) {
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(line_no) + ": unknown intent '" + name + "'",
                line_no);
  }
  return *intent;
}

}  // namespace

Intent argmax_intent(const std::array<double, kNumIntents>& scores) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < kNumIntents; ++k) {
    if (scores[k] > scores[best]) best = k;
  }
  return static_cast<Intent>(best);
}

RuleTable parse_rule_table(std::istream& in) {
  RuleTable table;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_tabs(line);
    auto fail = [&](const std::string& why) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + ": " + why, line_no);
    };
    if (fields[0] == "D") {
      if (fields.size() != 3) fail("detection rule needs 3 fields");
      DetectionRule rule;
      for (auto& token : tokenize(fields[1])) rule.pattern.push_back(token.text);
      if (rule.pattern.empty()) fail("empty detection pattern");
      rule.intent = rule_intent(fields[2], line_no);
      table.detection.push_back(std::move(rule));
    } else if (fields[0] == "R") {
      if (fields.size() != 4) fail("revision rule needs 4 fields");
      if (fields[2].empty()) fail("empty revision pattern");
      table.revision.push_back(
          RevisionRule{rule_intent(fields[1], line_no), fields[2], fields[3]});
    } else {
      fail("rule kind must be D or R");
    }
  }
  return table;
}

RuleTable load_rule_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open rule file " + path.string());
  }
  return parse_rule_table(in);
}

RuleDetector::RuleDetector(std::vector<DetectionRule> rules)
    : rules_(std::move(rules)) {}

DetectorOutput RuleDetector::detect(const DetectRequest& request) const {
  const auto tokens = tokenize(request.text);
  DetectorOutput out;
  out.labels.assign(tokens.size(), Intent::kNone);
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t advance = 1;
    for (const DetectionRule& rule : rules_) {
      const std::size_t len = rule.pattern.size();
      if (len == 0 || i + len > tokens.size()) continue;
      bool match = true;
      for (std::size_t k = 0; k < len && match; ++k) {
        match = tokens[i + k].text == rule.pattern[k];
      }
      if (!match) continue;
      for (std::size_t k = 0; k < len; ++k) out.labels[i + k] = rule.intent;
      advance = len;
      break;
    }
    i += advance;
  }
  if (request.multi_task) {
    out.needs_edit = std::any_of(out.labels.begin(), out.labels.end(),
                                 [](Intent l) { return l != Intent::kNone; });
  }
  return out;
}

RuleReviser::RuleReviser(std::vector<RevisionRule> rules)
    : rules_(std::move(rules)) {}

std::string RuleReviser::revise(const AnnotatedText& annotated,
                                AnnotationMode /*mode*/) const {
  const std::u32string plain = utf8::decode(annotated.plain);
  const std::u32string_view view(plain);
  std::string out;
  std::size_t cursor = 0;
  for (const IntentSpan& span : annotated.spans) {
    out += utf8::encode(view.substr(cursor, span.start - cursor));
    std::string text = utf8::encode(view.substr(span.start, span.end - span.start));
    for (const RevisionRule& rule : rules_) {
      if (rule.intent != span.intent) continue;
      if (text.find(rule.pattern) == std::string::npos) continue;
      std::string rewritten;
      std::size_t from = 0;
      for (std::size_t hit = text.find(rule.pattern); hit != std::string::npos;
           hit = text.find(rule.pattern, from)) {
        rewritten.append(text, from, hit - from);
        rewritten += rule.replacement;
        from = hit + rule.pattern.size();
      }
      rewritten.append(text, from);
      text = std::move(rewritten);
      break;
    }
    out += text;
    cursor = span.end;
  }
  out += utf8::encode(view.substr(cursor));
  return out;
}

}  // namespace revkit
