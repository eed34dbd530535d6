#include "revkit/editops.hpp"

#include <algorithm>
#include <cstdint>

#include "revkit/error.hpp"

namespace revkit {
namespace {

// Changed stretch: before[b_start, b_end) became after[a_start, a_end).
struct Region {
  std::size_t b_start, b_end, a_start, a_end;
};

std::vector<Region> diff_regions(std::u32string_view before,
                                 std::u32string_view after) {
  const auto before_tokens = tokenize(before);
  const auto after_tokens = tokenize(after);
  const auto script = align(before_tokens, after_tokens);

  std::vector<Region> regions;
  std::size_t b_prev = 0, a_prev = 0;
  auto close_gap = [&](std::size_t b_next, std::size_t a_next) {
    std::size_t bs = b_prev, be = b_next, as = a_prev, ae = a_next;
    if (before.substr(bs, be - bs) != after.substr(as, ae - as)) {
      while (bs < be && as < ae && before[bs] == after[as] && is_space(before[bs])) {
        ++bs;
        ++as;
      }
      while (be > bs && ae > as && before[be - 1] == after[ae - 1] &&
             is_space(before[be - 1])) {
        --be;
        --ae;
      }
      regions.push_back(Region{bs, be, as, ae});
    }
  };
  for (const AlignStep& step : script) {
    if (step.op != AlignOp::kMatch) continue;
    const Token& b = before_tokens[step.before_index];
    const Token& a = after_tokens[step.after_index];
    close_gap(b.start, a.start);
    b_prev = b.end;
    a_prev = a.end;
  }
  close_gap(before.size(), after.size());
  return regions;
}

struct Range {
  std::size_t start, end;
};

void push_region(std::u32string_view before, std::u32string_view after,
                 std::size_t bs, std::size_t be, std::size_t as, std::size_t ae,
                 std::vector<Region>& out) {
  if (before.substr(bs, be - bs) == after.substr(as, ae - as)) return;
  while (bs < be && as < ae && before[bs] == after[as] && is_space(before[bs])) {
    ++bs;
    ++as;
  }
  while (be > bs && ae > as && before[be - 1] == after[ae - 1] && is_space(before[be - 1])) {
    --be;
    --ae;
  }
  out.push_back(Region{bs, be, as, ae});
}

// Splits each changed stretch that `whole` rejects by pairing its tokens one
// to one (minimum edit distance with substitutions), so that a rewrite of
// several words yields one region per word where the word counts allow it.
template <typename Whole>
std::vector<Region> fine_regions(std::u32string_view before, std::u32string_view after,
                                 Whole whole) {
  std::vector<Region> out;
  for (const Region& r : diff_regions(before, after)) {
    if (whole(r)) {
      out.push_back(r);
      continue;
    }
    auto bt = tokenize(before.substr(r.b_start, r.b_end - r.b_start));
    auto at = tokenize(after.substr(r.a_start, r.a_end - r.a_start));
    const std::size_t n = bt.size(), m = at.size();
    std::vector<std::uint32_t> dist((n + 1) * (m + 1));
    auto d = [&](std::size_t i, std::size_t j) -> std::uint32_t& { return dist[i * (m + 1) + j]; };
    for (std::size_t i = 0; i <= n; ++i) d(i, m) = static_cast<std::uint32_t>(n - i);
    for (std::size_t j = 0; j <= m; ++j) d(n, j) = static_cast<std::uint32_t>(m - j);
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t j = m; j-- > 0;) {
        d(i, j) = std::min({d(i + 1, j + 1) + (bt[i].text == at[j].text ? 0u : 1u),
                            d(i + 1, j) + 1, d(i, j + 1) + 1});
      }
    }
    std::size_t i = 0, j = 0;
    std::size_t b_prev = r.b_start, a_prev = r.a_start;
    while (i < n && j < m) {
      const std::uint32_t diag = d(i + 1, j + 1) + (bt[i].text == at[j].text ? 0u : 1u);
      if (diag == d(i, j)) {
        const std::size_t bs = r.b_start + bt[i].start, be = r.b_start + bt[i].end;
        const std::size_t as = r.a_start + at[j].start, ae = r.a_start + at[j].end;
        push_region(before, after, b_prev, bs, a_prev, as, out);
        push_region(before, after, bs, be, as, ae, out);
        b_prev = be;
        a_prev = ae;
        ++i;
        ++j;
      } else if (d(i + 1, j) + 1 == d(i, j)) {
        ++i;
      } else {
        ++j;
      }
    }
    push_region(before, after, b_prev, r.b_end, a_prev, r.a_end, out);
  }
  return out;
}


// Spans widened over adjacent whitespace, merged where they touch.
std::vector<Range> editable_ranges(std::u32string_view text,
                                   const std::vector<IntentSpan>& spans) {
  std::vector<Range> ranges;
  for (const IntentSpan& span : spans) {
    std::size_t start = std::min(span.start, text.size());
    std::size_t end = std::min(span.end, text.size());
    while (start > 0 && is_space(text[start - 1])) --start;
    while (end < text.size() && is_space(text[end])) ++end;
    ranges.push_back(Range{start, end});
  }
  std::sort(ranges.begin(), ranges.end(),
            [](const Range& a, const Range& b) { return a.start < b.start; });
  std::vector<Range> merged;
  for (const Range& r : ranges) {
    if (!merged.empty() && r.start <= merged.back().end) {
      merged.back().end = std::max(merged.back().end, r.end);
    } else {
      merged.push_back(r);
    }
  }
  return merged;
}

// Span that a changed region belongs to: the first whose widened range
// contains it, else the closest one. Empty only when there are no spans.
std::optional<std::size_t> owning_span(std::u32string_view text,
                                       const std::vector<IntentSpan>& spans,
                                       const Region& region) {
  std::optional<std::size_t> closest;
  std::size_t best = SIZE_MAX;
  for (std::size_t k = 0; k < spans.size(); ++k) {
    const auto widened = editable_ranges(text, {spans[k]});
    if (widened.empty()) continue;
    const Range w = widened[0];
    if (w.start <= region.b_start && region.b_end <= w.end) return k;
    const std::size_t gap = region.b_end < w.start   ? w.start - region.b_end
                            : w.end < region.b_start ? region.b_start - w.end
                                                     : 0;
    if (gap < best) {
      best = gap;
      closest = k;
    }
  }
  return closest;
}

bool inside_any(const std::vector<Range>& ranges, const Region& region) {
  return std::any_of(ranges.begin(), ranges.end(), [&](const Range& r) {
    return r.start <= region.b_start && region.b_end <= r.end;
  });
}

// `after` matches F0 * F1 * ... * Fk, where the F are the stretches of
// `before` outside the editable ranges.
bool frozen_text_preserved(std::u32string_view before,
                           const std::vector<Range>& ranges,
                           std::u32string_view after) {
  if (ranges.empty()) return before == after;
  std::vector<std::u32string_view> frozen;
  std::size_t cursor = 0;
  for (const Range& r : ranges) {
    frozen.push_back(before.substr(cursor, r.start - cursor));
    cursor = r.end;
  }
  frozen.push_back(before.substr(cursor));

  const auto& head = frozen.front();
  const auto& tail = frozen.back();
  if (head.size() + tail.size() > after.size()) return false;
  if (!after.starts_with(head) || !after.ends_with(tail)) return false;
  std::size_t pos = head.size();
  const std::size_t limit = after.size() - tail.size();
  for (std::size_t k = 1; k + 1 < frozen.size(); ++k) {
    const auto found = after.substr(0, limit).find(frozen[k], pos);
    if (found == std::u32string_view::npos) return false;
    pos = found + frozen[k].size();
  }
  return true;
}

void check_edits(std::size_t length, const std::vector<Edit>& edits) {
  std::size_t cursor = 0;
  for (std::size_t k = 0; k < edits.size(); ++k) {
    const Edit& e = edits[k];
    if (e.src_start > e.src_end || e.src_end > length) {
      throw Error(ErrorCode::kRangeOutOfBounds,
                  "edit [" + std::to_string(e.src_start) + ", " +
                      std::to_string(e.src_end) + ") outside text of length " +
                      std::to_string(length),
                  k);
    }
    if (e.src_start < cursor) {
      throw Error(ErrorCode::kOverlappingEdits,
                  "edit " + std::to_string(k) + " overlaps or precedes its predecessor",
                  k);
    }
    cursor = e.src_end;
  }
}

}  // namespace

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::kNoEdit: return "NO_EDIT";
    case StopReason::kMaxDepth: return "MAX_DEPTH";
    case StopReason::kOscillation: return "OSCILLATION";
    case StopReason::kQualityDecrease: return "QUALITY_DECREASE";
  }
  return "NO_EDIT";
}

std::optional<StopReason> parse_stop_reason(std::string_view name) {
  for (StopReason r : {StopReason::kNoEdit, StopReason::kMaxDepth,
                       StopReason::kOscillation, StopReason::kQualityDecrease}) {
    if (name == to_string(r)) return r;
  }
  return std::nullopt;
}

std::vector<AlignStep> align(const std::vector<std::string>& before,
                             const std::vector<std::string>& after) {
  std::size_t prefix = 0;
  while (prefix < before.size() && prefix < after.size() &&
         before[prefix] == after[prefix]) {
    ++prefix;
  }
  const std::size_t n = before.size() - prefix;
  const std::size_t m = after.size() - prefix;
  // lcs[i][j] = LCS length of before[prefix+i:] and after[prefix+j:].
  std::vector<std::uint32_t> lcs((n + 1) * (m + 1), 0);
  auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& {
    return lcs[i * (m + 1) + j];
  };
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      at(i, j) = before[prefix + i] == after[prefix + j]
                     ? at(i + 1, j + 1) + 1
                     : std::max(at(i + 1, j), at(i, j + 1));
    }
  }

  std::vector<AlignStep> script;
  script.reserve(prefix + n + m);
  for (std::size_t k = 0; k < prefix; ++k) {
    script.push_back(AlignStep{AlignOp::kMatch, k, k});
  }
  std::size_t i = 0, j = 0;
  while (i < n || j < m) {
    if (i < n && j < m && before[prefix + i] == after[prefix + j]) {
      script.push_back(AlignStep{AlignOp::kMatch, prefix + i, prefix + j});
      ++i;
      ++j;
    } else if (i < n && (j == m || at(i + 1, j) == at(i, j))) {
      script.push_back(AlignStep{AlignOp::kDelete, prefix + i, prefix + j});
      ++i;
    } else {
      script.push_back(AlignStep{AlignOp::kInsert, prefix + i, prefix + j});
      ++j;
    }
  }
  return script;
}

std::vector<AlignStep> align(const std::vector<Token>& before,
                             const std::vector<Token>& after) {
  std::vector<std::string> b, a;
  b.reserve(before.size());
  a.reserve(after.size());
  for (const auto& t : before) b.push_back(t.text);
  for (const auto& t : after) a.push_back(t.text);
  return align(b, a);
}

std::vector<Edit> extract_edits(std::string_view before, std::string_view after,
                                Intent intent) {
  if (before == after) return {};
  const std::u32string b = utf8::decode(before);
  const std::u32string a = utf8::decode(after);
  std::vector<Edit> edits;
  for (const Region& r : diff_regions(b, a)) {
    edits.push_back(Edit{r.b_start, r.b_end,
                         utf8::encode(std::u32string_view(a).substr(
                             r.a_start, r.a_end - r.a_start)),
                         intent});
  }
  return edits;
}

std::string apply_edits(std::string_view before, const std::vector<Edit>& edits) {
  if (edits.empty()) return std::string(before);
  const std::u32string text = utf8::decode(before);
  check_edits(text.size(), edits);
  const std::u32string_view view(text);
  std::string out;
  out.reserve(before.size());
  std::size_t cursor = 0;
  for (const Edit& e : edits) {
    out += utf8::encode(view.substr(cursor, e.src_start - cursor));
    out += e.replacement;
    cursor = e.src_end;
  }
  out += utf8::encode(view.substr(cursor));
  return out;
}

std::vector<Violation> validate_within_spans(std::string_view before,
                                             const std::vector<IntentSpan>& spans,
                                             std::string_view after) {
  if (before == after) return {};
  const std::u32string b = utf8::decode(before);
  const std::u32string a = utf8::decode(after);
  const auto ranges = editable_ranges(b, spans);
  if (frozen_text_preserved(b, ranges, a)) return {};

  std::vector<Violation> violations;
  for (const Region& r :
       fine_regions(b, a, [&](const Region& r) { return inside_any(ranges, r); })) {
    if (inside_any(ranges, r)) continue;
    violations.push_back(Violation{
        r.b_start, r.b_end,
        utf8::encode(std::u32string_view(a).substr(r.a_start, r.a_end - r.a_start))});
  }
  return violations;
}

std::string revert_outside_spans(std::string_view before,
                                 const std::vector<IntentSpan>& spans,
                                 std::string_view after) {
  if (before == after) return std::string(after);
  const std::u32string b = utf8::decode(before);
  const std::u32string a = utf8::decode(after);
  const auto ranges = editable_ranges(b, spans);
  if (frozen_text_preserved(b, ranges, a)) return std::string(after);

  std::u32string out;
  std::size_t cursor = 0;
  for (const Region& r :
       fine_regions(b, a, [&](const Region& r) { return inside_any(ranges, r); })) {
    if (!inside_any(ranges, r)) continue;
    out.append(b, cursor, r.b_start - cursor);
    out.append(a, r.a_start, r.a_end - r.a_start);
    cursor = r.b_end;
  }
  out.append(b, cursor);
  return utf8::encode(out);
}

std::vector<Edit> extract_span_edits(std::string_view before,
                                     const std::vector<IntentSpan>& spans,
                                     std::string_view after) {
  if (before == after) return {};
  const std::u32string b = utf8::decode(before);
  const std::u32string a = utf8::decode(after);
  const auto ranges = editable_ranges(b, spans);
  std::vector<Edit> edits;
  for (const Region& r :
       fine_regions(b, a, [&](const Region& r) { return inside_any(ranges, r); })) {
    const auto owner = owning_span(b, spans, r);
    if (!owner) continue;
    edits.push_back(Edit{r.b_start, r.b_end,
                         utf8::encode(std::u32string_view(a).substr(
                             r.a_start, r.a_end - r.a_start)),
                         spans[*owner].intent});
  }
  return edits;
}

std::vector<Intent> project_labels(std::string_view before,
                                   const std::vector<Edit>& edits) {
  const std::u32string text = utf8::decode(before);
  check_edits(text.size(), edits);
  const auto tokens = tokenize(std::u32string_view(text));
  std::vector<Intent> labels(tokens.size(), Intent::kNone);
  if (tokens.empty()) return labels;

  for (const Edit& e : edits) {
    bool covered = false;
    if (e.src_start < e.src_end) {
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i].start < e.src_end && e.src_start < tokens[i].end) {
          labels[i] = e.intent;
          covered = true;
        }
      }
    }
    if (covered) continue;
    std::size_t left = 0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i].start < e.src_start) left = i;
    }
    labels[left] = e.intent;
  }
  return labels;
}

}  // namespace revkit
