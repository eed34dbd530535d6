#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace revkit {

// All offsets in this library are Unicode scalar-value indices into the
// decoded text, never byte offsets (except in parse error positions).

struct Token {
  std::string text;
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t index = 0;

  bool operator==(const Sentence&) const = default;
};

namespace utf8 {

// Invalid sequences decode to U+FFFD.
std::u32string decode(std::string_view text);
std::string encode(std::u32string_view text);
std::size_t length(std::string_view text);
// Code-point slice [start, end) of a UTF-8 string.
std::string substr(std::string_view text, std::size_t start, std::size_t end);

}  // namespace utf8

bool is_space(char32_t c);
bool is_punct(char32_t c);
bool is_upper(char32_t c);

// Whitespace split, then every leading and trailing punctuation character
// becomes its own token. Internal apostrophes and hyphens stay attached.
std::vector<Token> tokenize(std::string_view text);
std::vector<Token> tokenize(std::u32string_view text);

// Sentence boundary: a run of . ! ? (plus trailing closing quotes/brackets)
// followed by whitespace and then an uppercase letter or an opening quote.
// A small abbreviation list suppresses false splits.
std::vector<Sentence> split_sentences(std::string_view text);
std::vector<Sentence> split_sentences(std::u32string_view text);

// Token texts only, for the metrics.
std::vector<std::string> token_texts(std::string_view text);

}  // namespace revkit
