#include "revkit/text.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <array>
#include <cstdint>

namespace revkit {
namespace utf8 {

std::u32string decode(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(text.data());
  const auto length = static_cast<std::int32_t>(text.size());
  std::int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    out.push_back(c < 0 ? U'�' : static_cast<char32_t>(c));
  }
  return out;
}

std::string encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) {
    std::array<std::uint8_t, U8_MAX_LENGTH> buf{};
    std::int32_t n = 0;
    UBool error = false;
    U8_APPEND(buf.data(), n, U8_MAX_LENGTH, static_cast<UChar32>(c), error);
    if (error) {
      n = 0;
      U8_APPEND_UNSAFE(buf.data(), n, 0xFFFD);
    }
    out.append(reinterpret_cast<const char*>(buf.data()),
               static_cast<std::size_t>(n));
  }
  return out;
}

std::size_t length(std::string_view text) { return decode(text).size(); }

std::string substr(std::string_view text, std::size_t start, std::size_t end) {
  const std::u32string decoded = decode(text);
  end = std::min(end, decoded.size());
  if (start >= end) return {};
  return encode(std::u32string_view(decoded).substr(start, end - start));
}

}  // namespace utf8

bool is_space(char32_t c) { return u_isUWhiteSpace(static_cast<UChar32>(c)); }
bool is_punct(char32_t c) { return u_ispunct(static_cast<UChar32>(c)); }
bool is_upper(char32_t c) { return u_isupper(static_cast<UChar32>(c)); }

namespace {

bool is_terminator(char32_t c) { return c == U'.' || c == U'!' || c == U'?'; }

bool is_closer(char32_t c) {
  if (c == U'"' || c == U'\'') return true;
  const auto type = u_charType(static_cast<UChar32>(c));
  return type == U_END_PUNCTUATION || type == U_FINAL_PUNCTUATION;
}

bool is_opener(char32_t c) {
  if (c == U'"' || c == U'\'') return true;
  const auto type = u_charType(static_cast<UChar32>(c));
  return type == U_START_PUNCTUATION || type == U_INITIAL_PUNCTUATION;
}

constexpr std::array<std::u32string_view, 22> kAbbreviations = {
    U"mr",  U"mrs", U"ms",  U"dr",  U"prof", U"sr",  U"jr",  U"st",
    U"vs",  U"e.g", U"i.e", U"cf",  U"fig",  U"figs", U"eq", U"ca",
    U"vol", U"approx", U"dept", U"al", U"inc", U"ltd"};

// True when the '.' at `dot` ends an abbreviation or a single-letter initial.
bool is_abbreviation(std::u32string_view text, std::size_t floor,
                     std::size_t dot) {
  std::size_t begin = dot;
  while (begin > floor && !is_space(text[begin - 1])) --begin;
  while (begin < dot && is_opener(text[begin])) ++begin;
  if (begin == dot) return false;
  std::u32string word(text.substr(begin, dot - begin));
  for (char32_t& c : word) c = static_cast<char32_t>(u_tolower(static_cast<UChar32>(c)));
  if (word.size() == 1 && u_isalpha(static_cast<UChar32>(word[0]))) return true;
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), word) !=
         kAbbreviations.end();
}

}  // namespace

std::vector<Token> tokenize(std::u32string_view text) {
  std::vector<Token> tokens;
  auto emit = [&](std::size_t start, std::size_t end) {
    tokens.push_back(
        Token{utf8::encode(text.substr(start, end - start)), start, end});
  };
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    std::size_t chunk_end = i;
    while (chunk_end < n && !is_space(text[chunk_end])) ++chunk_end;

    std::size_t core_start = i;
    while (core_start < chunk_end && is_punct(text[core_start])) ++core_start;
    if (core_start == chunk_end) {
      for (std::size_t k = i; k < chunk_end; ++k) emit(k, k + 1);
    } else {
      std::size_t core_end = chunk_end;
      while (core_end > core_start && is_punct(text[core_end - 1])) --core_end;
      for (std::size_t k = i; k < core_start; ++k) emit(k, k + 1);
      emit(core_start, core_end);
      for (std::size_t k = core_end; k < chunk_end; ++k) emit(k, k + 1);
    }
    i = chunk_end;
  }
  return tokens;
}

std::vector<Token> tokenize(std::string_view text) {
  return tokenize(utf8::decode(text));
}

std::vector<Sentence> split_sentences(std::u32string_view text) {
  std::vector<Sentence> sentences;
  const std::size_t n = text.size();
  std::size_t start = 0;
  while (start < n && is_space(text[start])) ++start;
  if (start == n) return sentences;

  std::size_t i = start;
  while (i < n) {
    if (!is_terminator(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && is_terminator(text[j])) ++j;
    const bool single_dot = (j == i + 1) && text[i] == U'.';
    while (j < n && is_closer(text[j])) ++j;
    if (j < n && is_space(text[j])) {
      std::size_t next = j;
      while (next < n && is_space(text[next])) ++next;
      const bool starts_sentence =
          next < n && (is_upper(text[next]) || is_opener(text[next]));
      if (starts_sentence && !(single_dot && is_abbreviation(text, start, i))) {
        sentences.push_back(Sentence{start, j, sentences.size()});
        start = next;
        i = next;
        continue;
      }
    }
    i = j;
  }
  std::size_t end = n;
  while (end > start && is_space(text[end - 1])) --end;
  sentences.push_back(Sentence{start, end, sentences.size()});
  return sentences;
}

std::vector<Sentence> split_sentences(std::string_view text) {
  return split_sentences(utf8::decode(text));
}

std::vector<std::string> token_texts(std::string_view text) {
  std::vector<std::string> out;
  for (auto& token : tokenize(text)) out.push_back(std::move(token.text));
  return out;
}

}  // namespace revkit
