#include <doctest.h>

#include "generators.hpp"
#include "revkit/text.hpp"

using namespace revkit;

TEST_SUITE("text") {
  TEST_CASE("empty text has no tokens") { CHECK(tokenize("").empty()); }

  TEST_CASE("punctuation is peeled from words") {
    const auto t = tokenize("I disagree.");
    REQUIRE(t.size() == 3);
    CHECK(t[0] == Token{"I", 0, 1});
    CHECK(t[1] == Token{"disagree", 2, 10});
    CHECK(t[2] == Token{".", 10, 11});
  }

  TEST_CASE("internal apostrophes and hyphens stay attached") {
    CHECK(token_texts("don't stop") == std::vector<std::string>{"don't", "stop"});
    CHECK(token_texts("a well-known (case)") ==
          std::vector<std::string>{"a", "well-known", "(", "case", ")"});
    CHECK(token_texts("\"quoted,\"") == std::vector<std::string>{"\"", "quoted", ",", "\""});
  }

  TEST_CASE("offsets count code points") {
    const auto t = tokenize("über naïve 日本");
    REQUIRE(t.size() == 3);
    CHECK(t[1].start == 5);
    CHECK(t[2] == Token{"日本", 11, 13});
  }

  TEST_CASE("unicode whitespace separates tokens") {
    CHECK(token_texts("a b c") == std::vector<std::string>{"a", "b", "c"});
  }

  TEST_CASE("invalid UTF-8 decodes to replacement characters") {
    const std::string bad = "a\xff" "b";
    CHECK(utf8::length(bad) == 3);
    CHECK(utf8::decode(bad)[1] == U'�');
  }

  TEST_CASE("tokens and gaps reproduce the source") {
    gen::Rng rng(11);
    for (int trial = 0; trial < 500; ++trial) {
      const std::string text = gen::text(rng, 0, 15);
      const std::u32string u = utf8::decode(text);
      std::u32string rebuilt;
      std::size_t cursor = 0;
      for (const Token& t : tokenize(text)) {
        REQUIRE(t.start < t.end);
        REQUIRE(t.start >= cursor);
        rebuilt += u.substr(cursor, t.start - cursor);
        rebuilt += utf8::decode(t.text);
        CHECK(u.substr(t.start, t.end - t.start) == utf8::decode(t.text));
        cursor = t.end;
      }
      rebuilt += u.substr(cursor);
      CHECK(rebuilt == u);
      CHECK(tokenize(text) == tokenize(text));
    }
  }

  TEST_CASE("sentence splitting") {
    CHECK(split_sentences("One. Two.").size() == 2);
    const std::string discofuse =
        "Their flight is weak. They run quickly through the tree canopy.";
    const auto s = split_sentences(discofuse);
    REQUIRE(s.size() == 2);
    CHECK(s[0] == Sentence{0, 21, 0});
    CHECK(s[1] == Sentence{22, 63, 1});
    CHECK(split_sentences("e.g. a test").size() == 1);
    CHECK(split_sentences("Dr. Smith left. He said no. Then he ran.").size() == 3);
    CHECK(split_sentences("J. R. R. Tolkien wrote it.").size() == 1);
    CHECK(split_sentences("no terminator here").size() == 1);
    CHECK(split_sentences("He asked \"why?\" Then left.").size() == 2);
    CHECK(split_sentences("Wait!! \"Really?\"").size() == 2);
    CHECK(split_sentences("").empty());
    CHECK(split_sentences("   ").empty());
  }

  TEST_CASE("sentences partition the non-whitespace content") {
    gen::Rng rng(12);
    for (int trial = 0; trial < 500; ++trial) {
      const std::string text = gen::text(rng, 0, 25);
      const std::u32string u = utf8::decode(text);
      const auto sentences = split_sentences(text);
      std::size_t cursor = 0;
      for (std::size_t i = 0; i < sentences.size(); ++i) {
        const Sentence& s = sentences[i];
        CHECK(s.index == i);
        REQUIRE(s.start < s.end);
        for (std::size_t k = cursor; k < s.start; ++k) CHECK(is_space(u[k]));
        CHECK_FALSE(is_space(u[s.start]));
        CHECK_FALSE(is_space(u[s.end - 1]));
        cursor = s.end;
      }
      for (std::size_t k = cursor; k < u.size(); ++k) CHECK(is_space(u[k]));
    }
  }
}
