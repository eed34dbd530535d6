#include <doctest.h>

#include "generators.hpp"
#include "revkit/annotation.hpp"
#include "revkit/error.hpp"

using namespace revkit;

namespace {

const std::string kTaggedInput =
    "I <fluency> disagree about that \"young people do not give enough time to helping "
    "their communities\" </fluency>.";
const std::string kTaggedPlain =
    "I disagree about that \"young people do not give enough time to helping their "
    "communities\".";

ErrorCode parse_error(const std::string& s) {
  try {
    parse_annotated(s);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error for " << s);
  return ErrorCode::kParseError;
}

}  // namespace

TEST_SUITE("annotation") {
  TEST_CASE("the tagged example parses to one fluency span") {
    const AnnotatedText a = parse_annotated(kTaggedInput);
    CHECK(a.plain == kTaggedPlain);
    REQUIRE(a.spans.size() == 1);
    CHECK(a.spans[0].intent == Intent::kFluency);
    CHECK(utf8::substr(a.plain, a.spans[0].start, a.spans[0].end) ==
          "disagree about that \"young people do not give enough time to helping their "
          "communities\"");
    CHECK(render_annotated(a) == kTaggedInput);
  }

  TEST_CASE("untagged text") {
    const AnnotatedText a = parse_annotated("no tags here");
    CHECK(a.plain == "no tags here");
    CHECK(a.spans.empty());
    CHECK(render_annotated({"no tags here", {}}) == "no tags here");
  }

  TEST_CASE("tags without padding") {
    const AnnotatedText a = parse_annotated("<clarity>a</clarity> <style>b</style>");
    CHECK(a.plain == "a b");
    REQUIRE(a.spans.size() == 2);
    CHECK(a.spans[0] == IntentSpan{0, 1, Intent::kClarity});
    CHECK(a.spans[1] == IntentSpan{2, 3, Intent::kStyle});
  }

  TEST_CASE("entities") {
    const AnnotatedText a{"x < y & z > w", {{0, 5, Intent::kClarity}}};
    const std::string rendered = render_annotated(a);
    CHECK(rendered == "<clarity> x &lt; y </clarity> &amp; z &gt; w");
    CHECK(parse_annotated(rendered) == a);
    CHECK(parse_annotated("fish & chips").plain == "fish & chips");
  }

  TEST_CASE("grammar violations") {
    CHECK(parse_error("<fluency> a") == ErrorCode::kUnbalancedTag);
    CHECK(parse_error("a </fluency>") == ErrorCode::kUnbalancedTag);
    CHECK(parse_error("<fluency> a </clarity>") == ErrorCode::kUnbalancedTag);
    CHECK(parse_error("<fluency> <clarity> a </clarity> </fluency>") == ErrorCode::kNestedTag);
    CHECK(parse_error("<bold> a </bold>") == ErrorCode::kUnknownTag);
    CHECK(parse_error("<Fluency> a </Fluency>") == ErrorCode::kUnknownTag);
    CHECK(parse_error("a < b") == ErrorCode::kUnknownTag);
  }

  TEST_CASE("errors carry the byte offset") {
    try {
      parse_annotated("ab <nope> c");
      FAIL("expected error");
    } catch (const Error& e) {
      CHECK(e.position() == 3);
    }
  }

  TEST_CASE("render rejects invalid span sets") {
    CHECK_THROWS_AS(render_annotated({"abc", {{0, 2, Intent::kStyle}, {1, 3, Intent::kStyle}}}),
                    Error);
    CHECK_THROWS_AS(render_annotated({"abc", {{0, 4, Intent::kStyle}}}), Error);
    CHECK_THROWS_AS(render_annotated({"abc", {{0, 1, Intent::kNone}}}), Error);
  }

  TEST_CASE("canonical form merges touching spans of one intent") {
    const AnnotatedText a{"abcdef", {{3, 6, Intent::kStyle}, {0, 3, Intent::kStyle}}};
    CHECK(canonicalize(a).spans == std::vector<IntentSpan>{{0, 6, Intent::kStyle}});
    CHECK(parse_annotated(render_annotated(canonicalize(a))) == canonicalize(a));
  }

  TEST_CASE("spans from labels") {
    const auto tokens = tokenize("w0 w1 w2 w3");
    using I = Intent;
    CHECK(spans_from_labels(tokens, {I::kNone, I::kNone, I::kNone, I::kNone}).empty());
    CHECK(spans_from_labels(tokens, {I::kNone, I::kFluency, I::kFluency, I::kNone}) ==
          std::vector<IntentSpan>{{3, 8, I::kFluency}});
    CHECK(spans_from_labels(tokens, {I::kClarity, I::kNone, I::kClarity, I::kNone}) ==
          std::vector<IntentSpan>{{0, 2, I::kClarity}, {6, 8, I::kClarity}});
    CHECK(spans_from_labels(tokens, {I::kClarity, I::kStyle, I::kNone, I::kNone}) ==
          std::vector<IntentSpan>{{0, 2, I::kClarity}, {3, 5, I::kStyle}});
    CHECK_THROWS_AS(spans_from_labels(tokens, {I::kNone}), Error);
  }

  TEST_CASE("labels survive the span round trip") {
    gen::Rng rng(21);
    for (int trial = 0; trial < 500; ++trial) {
      const auto tokens = tokenize(gen::text(rng));
      const auto labels = gen::labels(rng, tokens.size());
      CHECK(labels_from_spans(tokens, spans_from_labels(tokens, labels)) == labels);
    }
  }

  TEST_CASE("random span sets round trip") {
    gen::Rng rng(22);
    for (int trial = 0; trial < 1000; ++trial) {
      const AnnotatedText a = gen::annotated(rng);
      const std::string rendered = render_annotated(a);
      CHECK(parse_annotated(rendered) == canonicalize(a));
      CHECK(render_annotated(parse_annotated(rendered)) == rendered);
    }
  }

  TEST_CASE("sentence prefix") {
    CHECK(render_sentence_prefix("fix me", Intent::kFluency) == "<fluency> fix me");
    CHECK(render_sentence_prefix("x", Intent::kClarity) == "<clarity> x");
    const auto stripped = strip_sentence_prefix("<style> a b");
    REQUIRE(stripped);
    CHECK(stripped->first == Intent::kStyle);
    CHECK(stripped->second == "a b");
    CHECK_FALSE(strip_sentence_prefix("plain"));
  }
}
