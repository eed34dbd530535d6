#include <doctest.h>

#include <sstream>

#include "generators.hpp"
#include "revkit/backends.hpp"
#include "revkit/editops.hpp"
#include "revkit/error.hpp"

using namespace revkit;

namespace {

const std::string kPlain =
    "I disagree about that \"young people do not give enough time to helping their "
    "communities\".";

RuleTable table(const std::string& text) {
  std::istringstream in(text);
  return parse_rule_table(in);
}

}  // namespace

TEST_SUITE("backends") {
  TEST_CASE("rule table parsing") {
    CHECK(table("").detection.empty());
    const RuleTable t = table(
        "# comment\n"
        "D\tdisagree about\tfluency\n"
        "\n"
        "R\tfluency\tdisagree about that\tdisagree with the statement that\n");
    REQUIRE(t.detection.size() == 1);
    REQUIRE(t.revision.size() == 1);
    CHECK(t.detection[0].pattern == std::vector<std::string>{"disagree", "about"});
    CHECK(t.detection[0].intent == Intent::kFluency);
    CHECK(t.revision[0] ==
          RevisionRule{Intent::kFluency, "disagree about that", "disagree with the statement that"});
    CHECK(table("R\tstyle\tgonna\t\n").revision[0].replacement.empty());
  }

  TEST_CASE("malformed rule lines name their line") {
    for (const std::string bad : {"D\tx\n", "D\tx\tbogus\n", "X\ta\tb\n", "D\t \tstyle\n",
                                  "R\tstyle\t\tx\n", "D\tx\tnone\n"}) {
      try {
        table("D\ta\tstyle\nR\tstyle\ta\tb\n" + bad);
        FAIL("accepted " << bad);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kParseError);
        CHECK(e.position() == 3);
      }
    }
    CHECK_THROWS_AS(load_rule_table("/nonexistent/rules.tsv"), Error);
  }

  TEST_CASE("rule detector") {
    const RuleDetector detector(table("D\tdisagree about\tfluency\n").detection);
    const DetectorOutput out = detector.detect({kPlain, {}, {}, false});
    const auto tokens = tokenize(kPlain);
    REQUIRE(out.labels.size() == tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      const bool flagged = i == 1 || i == 2;
      CHECK((out.labels[i] == Intent::kFluency) == flagged);
    }
    CHECK_FALSE(out.needs_edit);
    CHECK(detector.detect({kPlain, {}, {}, true}).needs_edit == true);
    CHECK(detector.detect({"all clean", {}, {}, true}).needs_edit == false);

    const RuleDetector empty({});
    CHECK(empty.detect({kPlain, {}, {}, false}).labels ==
          std::vector<Intent>(tokens.size(), Intent::kNone));
  }

  TEST_CASE("first matching detection rule wins") {
    const RuleDetector detector(table("D\ta b\tstyle\nD\ta\tclarity\nD\tb c\tfluency\n").detection);
    using I = Intent;
    CHECK(detector.detect({"a b c a", {}, {}, false}).labels ==
          std::vector<I>{I::kStyle, I::kStyle, I::kNone, I::kClarity});
  }

  TEST_CASE("rule reviser") {
    const RuleReviser reviser(
        table("R\tfluency\tdisagree about that\tdisagree with the statement that\n").revision);
    CHECK(reviser.revise({kPlain, {}}, AnnotationMode::kSpanTags) == kPlain);
    const std::size_t end = utf8::length(kPlain) - 1;
    const std::string out = reviser.revise({kPlain, {{2, end, Intent::kFluency}}},
                                           AnnotationMode::kSpanTags);
    CHECK(out ==
          "I disagree with the statement that \"young people do not give enough time to "
          "helping their communities\".");
    // A span of another intent leaves the text alone.
    CHECK(reviser.revise({kPlain, {{2, end, Intent::kStyle}}}, AnnotationMode::kSpanTags) ==
          kPlain);
  }

  TEST_CASE("two spans, two rules") {
    const RuleReviser reviser(table("R\tclarity\tcat\tfeline\nR\tstyle\tdog\thound\n").revision);
    const std::string text = "the cat and the dog and the cat";
    const std::string out =
        reviser.revise({text, {{4, 7, Intent::kClarity}, {16, 19, Intent::kStyle}}},
                       AnnotationMode::kSpanTags);
    CHECK(out == "the feline and the hound and the cat");
  }

  TEST_CASE("rule revisions stay inside their spans") {
    gen::Rng rng(51);
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<RevisionRule> rules;
      for (int k = 0; k < 4; ++k) {
        rules.push_back({gen::intent(rng), gen::word(rng), gen::text(rng, 0, 2)});
      }
      const AnnotatedText a = gen::annotated(rng);
      const std::string out = RuleReviser(rules).revise(a, AnnotationMode::kSpanTags);
      CHECK(validate_within_spans(a.plain, a.spans, out).empty());
    }
  }

  TEST_CASE("argmax ties go to the earlier intent") {
    CHECK(argmax_intent({0.2, 0.2, 0.1, 0.0, 0.1}) == Intent::kClarity);
    CHECK(argmax_intent({0.1, 0.3, 0.3, 0.3, 0.0}) == Intent::kCoherence);
    CHECK(argmax_intent({0.0, 0.0, 0.0, 0.0, 1.0}) == Intent::kNone);
  }
}
