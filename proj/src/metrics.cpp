#include "revkit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

#include "revkit/error.hpp"
#include "revkit/text.hpp"

namespace revkit {
namespace {

using Counts = std::map<std::string, std::size_t>;

Counts ngram_counts(const std::vector<std::string>& tokens, std::size_t n) {
  Counts counts;
  if (tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (std::size_t k = 1; k < n; ++k) {
      key += '\x1f';
      key += tokens[i + k];
    }
    ++counts[key];
  }
  return counts;
}

std::size_t lookup(const Counts& counts, const std::string& key) {
  auto it = counts.find(key);
  return it == counts.end() ? 0 : it->second;
}

double ratio(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

double harmonic(double p, double r) { return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r); }

std::size_t lcs_length(const std::vector<std::string>& a,
                       const std::vector<std::string>& b) {
  std::vector<std::size_t> row(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = 0;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t above = row[j];
      row[j] = a[i - 1] == b[j - 1] ? diagonal + 1 : std::max(above, row[j - 1]);
      diagonal = above;
    }
  }
  return row[b.size()];
}

void check_shapes(std::size_t hyps, std::size_t refs) {
  if (hyps == 0) throw Error(ErrorCode::kEmptyCorpus, "no hypotheses");
  if (hyps != refs) {
    throw Error(ErrorCode::kShapeMismatch,
                std::to_string(hyps) + " hypotheses but " + std::to_string(refs) +
                    " reference sets");
  }
}

std::vector<std::vector<std::string>> tokenize_all(const std::vector<std::string>& texts) {
  std::vector<std::vector<std::string>> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(token_texts(t));
  return out;
}

struct SentenceScores {
  BleuStats bleu;
  RougeScore rouge;
  double sari = 0.0;
};

SentenceScores score_sentence(const std::string& source, const std::string& hypothesis,
                              const std::vector<std::string>& references) {
  if (references.empty()) {
    throw Error(ErrorCode::kEmptyReference, "sentence without references");
  }
  const auto src = token_texts(source);
  const auto hyp = token_texts(hypothesis);
  const auto refs = tokenize_all(references);
  return SentenceScores{bleu_stats(hyp, refs), rouge_l_tokens(hyp, refs),
                        sari_tokens(src, hyp, refs).final_score};
}

CorpusScores reduce(const std::vector<SentenceScores>& per_sentence) {
  CorpusScores scores;
  scores.sentences = per_sentence.size();
  BleuStats total;
  double sari_sum = 0.0;
  for (const auto& s : per_sentence) {
    total.merge(s.bleu);
    scores.rouge.precision += s.rouge.precision;
    scores.rouge.recall += s.rouge.recall;
    scores.rouge.f += s.rouge.f;
    sari_sum += s.sari;
  }
  const double n = static_cast<double>(per_sentence.size());
  scores.bleu = total.score();
  scores.rouge.precision /= n;
  scores.rouge.recall /= n;
  scores.rouge.f /= n;
  scores.sari = sari_sum / n;
  return scores;
}

}  // namespace

void BleuStats::merge(const BleuStats& other) {
  for (std::size_t n = 0; n < kMaxOrder; ++n) {
    matches[n] += other.matches[n];
    totals[n] += other.totals[n];
  }
  hyp_length += other.hyp_length;
  ref_length += other.ref_length;
}

double BleuStats::score() const {
  if (hyp_length == 0) return 0.0;
  double log_sum = 0.0;
  for (std::size_t n = 0; n < kMaxOrder; ++n) {
    if (matches[n] == 0 || totals[n] == 0) return 0.0;
    log_sum += std::log(static_cast<double>(matches[n]) / static_cast<double>(totals[n]));
  }
  const double c = static_cast<double>(hyp_length);
  const double r = static_cast<double>(ref_length);
  const double brevity = c < r ? std::exp(1.0 - r / c) : 1.0;
  return brevity * std::exp(log_sum / static_cast<double>(kMaxOrder));
}

BleuStats bleu_stats(const std::vector<std::string>& hyp_tokens,
                     const std::vector<std::vector<std::string>>& ref_tokens) {
  if (ref_tokens.empty()) {
    throw Error(ErrorCode::kEmptyReference, "hypothesis without references");
  }
  BleuStats stats;
  stats.hyp_length = hyp_tokens.size();
  std::size_t best_diff = SIZE_MAX;
  for (const auto& ref : ref_tokens) {
    const std::size_t diff = ref.size() > hyp_tokens.size()
                                 ? ref.size() - hyp_tokens.size()
                                 : hyp_tokens.size() - ref.size();
    if (diff < best_diff || (diff == best_diff && ref.size() < stats.ref_length)) {
      best_diff = diff;
      stats.ref_length = ref.size();
    }
  }
  for (std::size_t n = 1; n <= kMaxOrder; ++n) {
    const Counts hyp = ngram_counts(hyp_tokens, n);
    Counts max_ref;
    for (const auto& ref : ref_tokens) {
      for (const auto& [gram, count] : ngram_counts(ref, n)) {
        max_ref[gram] = std::max(max_ref[gram], count);
      }
    }
    for (const auto& [gram, count] : hyp) {
      stats.matches[n - 1] += std::min(count, lookup(max_ref, gram));
    }
    stats.totals[n - 1] = hyp_tokens.size() >= n ? hyp_tokens.size() - n + 1 : 0;
  }
  return stats;
}

double bleu(const std::vector<std::string>& hypotheses,
            const std::vector<std::vector<std::string>>& references) {
  check_shapes(hypotheses.size(), references.size());
  BleuStats total;
  for (std::size_t i = 0; i < hypotheses.size(); ++i) {
    total.merge(bleu_stats(token_texts(hypotheses[i]), tokenize_all(references[i])));
  }
  return total.score();
}

double sentence_bleu(std::string_view hypothesis,
                     const std::vector<std::string>& references) {
  const BleuStats stats = bleu_stats(token_texts(hypothesis), tokenize_all(references));
  if (stats.hyp_length == 0 || stats.totals[0] == 0 || stats.matches[0] == 0) {
    return 0.0;
  }
  double log_sum = std::log(static_cast<double>(stats.matches[0]) /
                            static_cast<double>(stats.totals[0]));
  for (std::size_t n = 1; n < kMaxOrder; ++n) {
    log_sum += std::log((static_cast<double>(stats.matches[n]) + 1.0) /
                        (static_cast<double>(stats.totals[n]) + 1.0));
  }
  const double c = static_cast<double>(stats.hyp_length);
  const double r = static_cast<double>(stats.ref_length);
  const double brevity = c < r ? std::exp(1.0 - r / c) : 1.0;
  return brevity * std::exp(log_sum / static_cast<double>(kMaxOrder));
}

RougeScore rouge_l_tokens(const std::vector<std::string>& hyp,
                          const std::vector<std::vector<std::string>>& refs) {
  if (refs.empty()) throw Error(ErrorCode::kEmptyReference, "no references");
  RougeScore best;
  bool first = true;
  for (const auto& ref : refs) {
    if (ref.empty()) throw Error(ErrorCode::kEmptyReference, "empty reference");
    const double lcs = static_cast<double>(lcs_length(hyp, ref));
    RougeScore s;
    s.precision = 100.0 * ratio(lcs, static_cast<double>(hyp.size()));
    s.recall = 100.0 * ratio(lcs, static_cast<double>(ref.size()));
    s.f = harmonic(s.precision, s.recall);
    if (first || s.f > best.f) best = s;
    first = false;
  }
  return best;
}

RougeScore rouge_l(std::string_view hypothesis,
                   const std::vector<std::string>& references) {
  return rouge_l_tokens(token_texts(hypothesis), tokenize_all(references));
}

SariBreakdown sari_tokens(const std::vector<std::string>& source,
                          const std::vector<std::string>& hypothesis,
                          const std::vector<std::vector<std::string>>& references) {
  if (references.empty()) throw Error(ErrorCode::kEmptyReference, "no references");
  const std::size_t num_refs = references.size();
  SariBreakdown out;
  double sum = 0.0;
  std::size_t defined = 0;
  for (std::size_t n = 1; n <= kMaxOrder; ++n) {
    const Counts src = ngram_counts(source, n);
    const Counts hyp = ngram_counts(hypothesis, n);
    Counts ref;
    for (const auto& r : references) {
      for (const auto& [gram, count] : ngram_counts(r, n)) ref[gram] += count;
    }
    const std::size_t k = n - 1;
    out.defined[k] = !src.empty() || !hyp.empty() || !ref.empty();
    if (!out.defined[k]) continue;

    // Keep: n-grams of the source retained by the hypothesis, with counts
    // scaled by the number of references.
    Counts kept, keep_all;
    for (const auto& [gram, count] : src) {
      const std::size_t s_rep = count * num_refs;
      const std::size_t h_rep = lookup(hyp, gram) * num_refs;
      if (h_rep > 0) kept[gram] = std::min(s_rep, h_rep);
      const std::size_t r = lookup(ref, gram);
      if (r > 0) keep_all[gram] = std::min(s_rep, r);
    }
    double keep_p = 0.0, keep_r = 0.0;
    for (const auto& [gram, count] : kept) {
      keep_p += static_cast<double>(std::min(count, lookup(ref, gram))) /
                static_cast<double>(count);
    }
    for (const auto& [gram, count] : keep_all) {
      keep_r += static_cast<double>(std::min(lookup(kept, gram), lookup(ref, gram))) /
                static_cast<double>(count);
    }
    keep_p = ratio(keep_p, static_cast<double>(kept.size()));
    keep_r = ratio(keep_r, static_cast<double>(keep_all.size()));

    // Delete: source n-grams the hypothesis dropped; precision only.
    double del_p = 0.0;
    std::size_t deleted = 0;
    for (const auto& [gram, count] : src) {
      const std::size_t s_rep = count * num_refs;
      const std::size_t h_rep = lookup(hyp, gram) * num_refs;
      if (s_rep <= h_rep) continue;
      const std::size_t d = s_rep - h_rep;
      const std::size_t r = lookup(ref, gram);
      const std::size_t good = d > r ? d - r : 0;
      del_p += static_cast<double>(good) / static_cast<double>(d);
      ++deleted;
    }
    del_p = ratio(del_p, static_cast<double>(deleted));

    // Add: n-grams new in the hypothesis, as sets.
    std::size_t added = 0, added_good = 0, ref_added = 0;
    for (const auto& [gram, count] : hyp) {
      if (src.contains(gram)) continue;
      ++added;
      if (ref.contains(gram)) ++added_good;
    }
    for (const auto& [gram, count] : ref) {
      if (!src.contains(gram)) ++ref_added;
    }
    const double add_p = ratio(static_cast<double>(added_good), static_cast<double>(added));
    const double add_r =
        ratio(static_cast<double>(added_good), static_cast<double>(ref_added));

    out.keep_f[k] = 100.0 * harmonic(keep_p, keep_r);
    out.del_p[k] = 100.0 * del_p;
    out.add_f[k] = 100.0 * harmonic(add_p, add_r);
    sum += (out.add_f[k] + out.keep_f[k] + out.del_p[k]) / 3.0;
    ++defined;
  }
  out.final_score = defined == 0 ? 0.0 : sum / static_cast<double>(defined);
  return out;
}

SariBreakdown sari(std::string_view source, std::string_view hypothesis,
                   const std::vector<std::string>& references) {
  return sari_tokens(token_texts(source), token_texts(hypothesis),
                     tokenize_all(references));
}

F1Report token_f1(const std::vector<std::vector<Intent>>& gold,
                  const std::vector<std::vector<Intent>>& pred) {
  if (gold.size() != pred.size()) {
    throw Error(ErrorCode::kShapeMismatch,
                std::to_string(gold.size()) + " gold sequences but " +
                    std::to_string(pred.size()) + " predicted");
  }
  F1Report report;
  for (std::size_t s = 0; s < gold.size(); ++s) {
    if (gold[s].size() != pred[s].size()) {
      throw Error(ErrorCode::kShapeMismatch,
                  "sequence " + std::to_string(s) + " lengths differ", s);
    }
    for (std::size_t t = 0; t < gold[s].size(); ++t) {
      const Intent g = gold[s][t];
      const Intent p = pred[s][t];
      if (g == p) {
        if (g != Intent::kNone) ++report.per_intent[index_of(g)].tp;
        continue;
      }
      if (g != Intent::kNone) ++report.per_intent[index_of(g)].fn;
      if (p != Intent::kNone) ++report.per_intent[index_of(p)].fp;
    }
  }
  auto finish = [](F1Cell& cell) {
    if (cell.tp + cell.fp + cell.fn == 0) {
      cell.precision = cell.recall = cell.f1 = 100.0;
      return;
    }
    const auto tp = static_cast<double>(cell.tp);
    cell.precision = 100.0 * ratio(tp, tp + static_cast<double>(cell.fp));
    cell.recall = 100.0 * ratio(tp, tp + static_cast<double>(cell.fn));
    cell.f1 = harmonic(cell.precision, cell.recall);
  };
  for (F1Cell& cell : report.per_intent) {
    report.overall.tp += cell.tp;
    report.overall.fp += cell.fp;
    report.overall.fn += cell.fn;
    finish(cell);
  }
  finish(report.overall);
  return report;
}

CorpusScores evaluate_corpus(const std::vector<std::string>& sources,
                             const std::vector<std::string>& hypotheses,
                             const std::vector<std::vector<std::string>>& references) {
  check_shapes(hypotheses.size(), references.size());
  check_shapes(hypotheses.size(), sources.size());
  std::vector<SentenceScores> per_sentence(hypotheses.size());
  std::vector<std::optional<Error>> errors(hypotheses.size());
  const auto n = static_cast<std::ptrdiff_t>(hypotheses.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      per_sentence[i] = score_sentence(sources[i], hypotheses[i], references[i]);
    } catch (const Error& e) {
      errors[i] = e;
    }
  }
  for (const auto& e : errors) {
    if (e) throw *e;
  }
  return reduce(per_sentence);
}

namespace serial {

CorpusScores evaluate_corpus(const std::vector<std::string>& sources,
                             const std::vector<std::string>& hypotheses,
                             const std::vector<std::vector<std::string>>& references) {
  check_shapes(hypotheses.size(), references.size());
  check_shapes(hypotheses.size(), sources.size());
  std::vector<SentenceScores> per_sentence;
  per_sentence.reserve(hypotheses.size());
  for (std::size_t i = 0; i < hypotheses.size(); ++i) {
    per_sentence.push_back(score_sentence(sources[i], hypotheses[i], references[i]));
  }
  return reduce(per_sentence);
}

}  // namespace serial
}  // namespace revkit
