#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "revkit/intent.hpp"

namespace revkit {

// Every metric tokenizes with revkit::tokenize. BLEU is reported on [0, 1];
// ROUGE-L, SARI and F1 on [0, 100].

inline constexpr std::size_t kMaxOrder = 4;

// Sufficient statistics for corpus BLEU; merging is plain addition.
struct BleuStats {
  std::array<std::size_t, kMaxOrder> matches{};
  std::array<std::size_t, kMaxOrder> totals{};
  std::size_t hyp_length = 0;
  std::size_t ref_length = 0;  // closest reference length, ties to shorter

  void merge(const BleuStats& other);
  // Uniform weights, brevity penalty exp(1 - r/c) when c < r, no smoothing:
  // 0 when any precision is 0.
  double score() const;
};

BleuStats bleu_stats(const std::vector<std::string>& hyp_tokens,
                     const std::vector<std::vector<std::string>>& ref_tokens);

// Corpus BLEU. Throws kEmptyCorpus, kShapeMismatch, kEmptyReference.
double bleu(const std::vector<std::string>& hypotheses,
            const std::vector<std::vector<std::string>>& references);

// Sentence-level diagnostic: add-one smoothing for n >= 2. Not for headline
// numbers.
double sentence_bleu(std::string_view hypothesis,
                     const std::vector<std::string>& references);

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f = 0.0;
};

// LCS over tokens, beta = 1. With several references the one with the best F
// is reported. Throws kEmptyReference when no references are given or a
// reference has no tokens.
RougeScore rouge_l(std::string_view hypothesis,
                   const std::vector<std::string>& references);
RougeScore rouge_l_tokens(const std::vector<std::string>& hyp,
                          const std::vector<std::vector<std::string>>& refs);

struct SariBreakdown {
  std::array<double, kMaxOrder> add_f{};
  std::array<double, kMaxOrder> keep_f{};
  std::array<double, kMaxOrder> del_p{};
  // An order is defined when source, hypothesis or some reference has an
  // n-gram of that order. Only defined orders enter the final mean.
  std::array<bool, kMaxOrder> defined{};
  double final_score = 0.0;
};

// SARI with fractional keep/delete counts scaled by the number of references
// and 0/0 := 0 for every component. Throws kEmptyReference.
SariBreakdown sari(std::string_view source, std::string_view hypothesis,
                   const std::vector<std::string>& references);
SariBreakdown sari_tokens(const std::vector<std::string>& source,
                          const std::vector<std::string>& hypothesis,
                          const std::vector<std::vector<std::string>>& references);

struct F1Cell {
  std::size_t tp = 0, fp = 0, fn = 0;
  double precision = 0.0, recall = 0.0, f1 = 0.0;
};

struct F1Report {
  std::array<F1Cell, 4> per_intent;  // clarity, coherence, fluency, style
  F1Cell overall;                    // pooled over the four intents
};

// Token-level micro P/R/F1 per intent (NONE excluded). A class with no gold
// and no predicted tokens scores 100. Throws kShapeMismatch.
F1Report token_f1(const std::vector<std::vector<Intent>>& gold,
                  const std::vector<std::vector<Intent>>& pred);

struct CorpusScores {
  double bleu = 0.0;        // corpus BLEU
  RougeScore rouge;         // mean of sentence scores
  double sari = 0.0;        // mean of sentence finals
  std::size_t sentences = 0;
};

// All three corpus metrics. `references[i]` are the references of sentence i.
CorpusScores evaluate_corpus(const std::vector<std::string>& sources,
                             const std::vector<std::string>& hypotheses,
                             const std::vector<std::vector<std::string>>& references);

namespace serial {
CorpusScores evaluate_corpus(const std::vector<std::string>& sources,
                             const std::vector<std::string>& hypotheses,
                             const std::vector<std::vector<std::string>>& references);
}  // namespace serial

}  // namespace revkit
