#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "revkit/annotation.hpp"
#include "revkit/config.hpp"
#include "revkit/intent.hpp"

namespace revkit {

struct DetectRequest {
  std::string text;
  std::optional<std::string> context_before;
  std::optional<std::string> context_after;
  bool multi_task = false;
};

struct DetectorOutput {
  std::vector<Intent> labels;     // one per token of the request text
  std::optional<bool> needs_edit;  // multi-task head, when requested

  bool operator==(const DetectorOutput&) const = default;
};

// Backends must be safe to call concurrently from several threads.
class Detector {
 public:
  virtual ~Detector() = default;
  virtual DetectorOutput detect(const DetectRequest& request) const = 0;
};

class Reviser {
 public:
  virtual ~Reviser() = default;
  // Returns the full revised plain text. In kSentencePrefix mode the input
  // carries exactly one span covering the whole text.
  virtual std::string revise(const AnnotatedText& annotated,
                             AnnotationMode mode) const = 0;
};

// Resolves per-class scores (clarity, coherence, fluency, style, none) to a
// label; ties go to the earlier class.
Intent argmax_intent(const std::array<double, kNumIntents>& scores);

struct DetectionRule {
  std::vector<std::string> pattern;  // token texts
  Intent intent = Intent::kNone;

  bool operator==(const DetectionRule&) const = default;
};

struct RevisionRule {
  Intent intent = Intent::kNone;
  std::string pattern;
  std::string replacement;

  bool operator==(const RevisionRule&) const = default;
};

struct RuleTable {
  std::vector<DetectionRule> detection;
  std::vector<RevisionRule> revision;
};

// Line format, tab-separated, '#' starts a comment line:
//   D <TAB> pattern <TAB> intent
//   R <TAB> intent <TAB> pattern <TAB> replacement
// Throws kParseError carrying the 1-based line number.
RuleTable parse_rule_table(std::istream& in);
RuleTable load_rule_table(const std::filesystem::path& path);

// Scans tokens left to right; at each position the first rule (in table
// order) whose token pattern matches labels those tokens, and the scan
// resumes after the match. Unmatched tokens are NONE.
class RuleDetector : public Detector {
 public:
  explicit RuleDetector(std::vector<DetectionRule> rules);
  DetectorOutput detect(const DetectRequest& request) const override;

 private:
  std::vector<DetectionRule> rules_;
};

// Inside each span, the first rule of the span's intent whose pattern occurs
// in the span text has every occurrence replaced. Text outside spans is
// never touched.
class RuleReviser : public Reviser {
 public:
  explicit RuleReviser(std::vector<RevisionRule> rules);
  std::string revise(const AnnotatedText& annotated,
                     AnnotationMode mode) const override;

 private:
  std::vector<RevisionRule> rules_;
};

}  // namespace revkit
