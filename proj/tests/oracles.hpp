#pragma once

// Straightforward reference implementations used to check the library. They
// favour obviousness over speed: n-grams are vectors compared element by
// element, counts come from linear scans, LCS from a full table.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace oracle {

using Tokens = std::vector<std::string>;
using Gram = std::vector<std::string>;

inline std::vector<Gram> grams(const Tokens& t, std::size_t n) {
  std::vector<Gram> out;
  for (std::size_t i = 0; i + n <= t.size(); ++i) {
    out.emplace_back(t.begin() + static_cast<std::ptrdiff_t>(i),
                     t.begin() + static_cast<std::ptrdiff_t>(i + n));
  }
  return out;
}

inline std::size_t count(const std::vector<Gram>& all, const Gram& g) {
  return static_cast<std::size_t>(std::count(all.begin(), all.end(), g));
}

inline std::vector<Gram> distinct(const std::vector<Gram>& all) {
  std::vector<Gram> out;
  for (const Gram& g : all) {
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  }
  return out;
}

inline double safe_div(double a, double b) { return b == 0.0 ? 0.0 : a / b; }
inline double f1(double p, double r) { return p + r == 0.0 ? 0.0 : 2 * p * r / (p + r); }

// Corpus BLEU with uniform weights, clipped counts, closest reference length
// (shorter on ties) and no smoothing.
inline double bleu(const std::vector<Tokens>& hyps, const std::vector<std::vector<Tokens>>& refs) {
  double c = 0, r = 0;
  double num[4] = {0, 0, 0, 0}, den[4] = {0, 0, 0, 0};
  for (std::size_t s = 0; s < hyps.size(); ++s) {
    const Tokens& h = hyps[s];
    c += static_cast<double>(h.size());
    std::size_t best = refs[s][0].size();
    for (const Tokens& ref : refs[s]) {
      const long d_new = std::labs(static_cast<long>(ref.size()) - static_cast<long>(h.size()));
      const long d_old = std::labs(static_cast<long>(best) - static_cast<long>(h.size()));
      if (d_new < d_old || (d_new == d_old && ref.size() < best)) best = ref.size();
    }
    r += static_cast<double>(best);
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto hg = grams(h, n);
      den[n - 1] += static_cast<double>(hg.size());
      for (const Gram& g : distinct(hg)) {
        std::size_t max_ref = 0;
        for (const Tokens& ref : refs[s]) max_ref = std::max(max_ref, count(grams(ref, n), g));
        num[n - 1] += static_cast<double>(std::min(count(hg, g), max_ref));
      }
    }
  }
  if (c == 0) return 0.0;
  double product = 1.0;
  for (int n = 0; n < 4; ++n) {
    if (num[n] == 0 || den[n] == 0) return 0.0;
    product *= num[n] / den[n];
  }
  const double bp = c < r ? std::exp(1.0 - r / c) : 1.0;
  return bp * std::pow(product, 0.25);
}

inline std::size_t lcs(const Tokens& a, const Tokens& b) {
  std::vector<std::vector<std::size_t>> t(a.size() + 1, std::vector<std::size_t>(b.size() + 1, 0));
  for (std::size_t i = a.size(); i-- > 0;) {
    for (std::size_t j = b.size(); j-- > 0;) {
      t[i][j] = a[i] == b[j] ? t[i + 1][j + 1] + 1 : std::max(t[i + 1][j], t[i][j + 1]);
    }
  }
  return t[0][0];
}

struct Rouge {
  double p = 0, r = 0, f = 0;
};

inline Rouge rouge_l(const Tokens& hyp, const std::vector<Tokens>& refs) {
  Rouge best;
  bool first = true;
  for (const Tokens& ref : refs) {
    const double l = static_cast<double>(lcs(hyp, ref));
    Rouge s;
    s.p = 100.0 * safe_div(l, static_cast<double>(hyp.size()));
    s.r = 100.0 * safe_div(l, static_cast<double>(ref.size()));
    s.f = f1(s.p, s.r);
    if (first || s.f > best.f) best = s;
    first = false;
  }
  return best;
}

struct SariOrder {
  bool defined = false;
  double add = 0, keep = 0, del = 0;
};

// One n-gram order of SARI. Keep and delete use source/hypothesis counts
// multiplied by the number of references; add works on distinct n-grams.
inline SariOrder sari_order(const Tokens& src, const Tokens& hyp, const std::vector<Tokens>& refs,
                            std::size_t n) {
  const double k = static_cast<double>(refs.size());
  const auto sg = grams(src, n);
  const auto hg = grams(hyp, n);
  std::vector<Gram> rg;
  for (const Tokens& ref : refs) {
    const auto g = grams(ref, n);
    rg.insert(rg.end(), g.begin(), g.end());
  }
  SariOrder out;
  out.defined = !sg.empty() || !hg.empty() || !rg.empty();
  if (!out.defined) return out;

  double kp_sum = 0, kp_n = 0, kr_sum = 0, kr_n = 0, dp_sum = 0, dp_n = 0;
  for (const Gram& g : distinct(sg)) {
    const double s = static_cast<double>(count(sg, g)) * k;
    const double h = static_cast<double>(count(hg, g)) * k;
    const double r = static_cast<double>(count(rg, g));
    const double kept = std::min(s, h);
    if (kept > 0) {
      kp_sum += std::min(kept, r) / kept;
      kp_n += 1;
    }
    const double kept_by_refs = std::min(s, r);
    if (kept_by_refs > 0) {
      kr_sum += std::min(kept, r) / kept_by_refs;
      kr_n += 1;
    }
    const double deleted = s - std::min(s, h);
    if (deleted > 0) {
      dp_sum += std::max(deleted - r, 0.0) / deleted;
      dp_n += 1;
    }
  }
  out.keep = 100.0 * f1(safe_div(kp_sum, kp_n), safe_div(kr_sum, kr_n));
  out.del = 100.0 * safe_div(dp_sum, dp_n);

  double added = 0, good = 0, ref_added = 0;
  for (const Gram& g : distinct(hg)) {
    if (count(sg, g) > 0) continue;
    added += 1;
    if (count(rg, g) > 0) good += 1;
  }
  for (const Gram& g : distinct(rg)) {
    if (count(sg, g) == 0) ref_added += 1;
  }
  out.add = 100.0 * f1(safe_div(good, added), safe_div(good, ref_added));
  return out;
}

inline double sari(const Tokens& src, const Tokens& hyp, const std::vector<Tokens>& refs) {
  double sum = 0;
  int defined = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const SariOrder o = sari_order(src, hyp, refs, n);
    if (!o.defined) continue;
    sum += (o.add + o.keep + o.del) / 3.0;
    ++defined;
  }
  return defined == 0 ? 0.0 : sum / defined;
}

inline std::size_t levenshtein(const std::u32string& a, const std::u32string& b) {
  std::vector<std::vector<std::size_t>> t(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) t[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) t[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      t[i][j] = std::min({t[i - 1][j] + 1, t[i][j - 1] + 1,
                          t[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
  }
  return t[a.size()][b.size()];
}

// All strings over `alphabet` with at most `max_len` symbols, shortest first.
inline std::vector<Tokens> all_strings(const std::vector<std::string>& alphabet,
                                       std::size_t max_len) {
  std::vector<Tokens> out{{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (const std::string& s : alphabet) {
        Tokens t = out[i];
        t.push_back(s);
        out.push_back(std::move(t));
      }
    }
    begin = end;
  }
  return out;
}

}  // namespace oracle
