#include "revkit/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "revkit/text.hpp"

namespace revkit {
namespace {

struct Range {
  std::size_t start = 0;
  std::size_t end = 0;
  FlowNode node = FlowNode::kStart;
};

bool overlaps(const Range& a, const Range& b) {
  const std::size_t lo = std::max(a.start, b.start);
  const std::size_t hi = std::min(a.end, b.end);
  if (a.start == a.end || b.start == b.end) return lo <= hi;
  return lo < hi;
}

// Ranges of a step's edits in the text before the step.
std::vector<Range> source_ranges(const RevisionStep& step) {
  std::vector<Range> out;
  for (const Edit& e : step.edits) {
    if (e.intent == Intent::kNone) continue;
    out.push_back({e.src_start, e.src_end, flow_node(e.intent)});
  }
  return out;
}

// Ranges of a step's edits in the text after the step.
std::vector<Range> target_ranges(const RevisionStep& step) {
  std::vector<Range> out;
  std::ptrdiff_t shift = 0;
  for (const Edit& e : step.edits) {
    const auto length = static_cast<std::ptrdiff_t>(utf8::length(e.replacement));
    const auto start = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(e.src_start) + shift);
    if (e.intent != Intent::kNone) {
      out.push_back({start, start + static_cast<std::size_t>(length), flow_node(e.intent)});
    }
    shift += length - static_cast<std::ptrdiff_t>(e.src_end - e.src_start);
  }
  return out;
}

void add_trace(const RevisionTrace& trace, FlowMatrix& m) {
  std::vector<Range> previous;
  int depth = 0;
  for (const RevisionStep& step : trace.steps) {
    depth = step.depth;
    std::vector<Range> current = source_ranges(step);
    for (const Range& r : current) {
      m.count_edit(depth, static_cast<Intent>(r.node));
    }
    std::vector<bool> used(previous.size(), false);
    for (const Range& r : current) {
      FlowNode from = FlowNode::kStart;
      for (std::size_t p = 0; p < previous.size(); ++p) {
        if (!used[p] && overlaps(previous[p], r)) {
          used[p] = true;
          from = previous[p].node;
          break;
        }
      }
      m.add(depth, from, r.node);
    }
    for (std::size_t p = 0; p < previous.size(); ++p) {
      if (!used[p]) m.add(depth, previous[p].node, FlowNode::kEnd);
    }
    previous = target_ranges(step);
  }
  for (const Range& r : previous) m.add(depth + 1, r.node, FlowNode::kEnd);
}

std::string node_name(FlowNode node, int depth) {
  if (node == FlowNode::kStart) return "START";
  if (node == FlowNode::kEnd) return "END";
  return std::string(to_string(node)) + "@" + std::to_string(depth);
}

}  // namespace

std::string_view to_string(FlowNode node) {
  switch (node) {
    case FlowNode::kStart:
      return "START";
    case FlowNode::kEnd:
      return "END";
    default:
      return to_string(static_cast<Intent>(node));
  }
}

FlowNode flow_node(Intent intent) { return static_cast<FlowNode>(intent); }

void FlowMatrix::add(int depth, FlowNode from, FlowNode to, std::size_t count) {
  if (count == 0) return;
  flow[depth][{from, to}] += count;
}

void FlowMatrix::count_edit(int depth, Intent intent, std::size_t count) {
  if (intent == Intent::kNone || count == 0) return;
  edits[depth][index_of(intent)] += count;
}

void FlowMatrix::merge(const FlowMatrix& other) {
  for (const auto& [depth, cells] : other.flow) {
    for (const auto& [link, count] : cells) add(depth, link.first, link.second, count);
  }
  for (const auto& [depth, counts] : other.edits) {
    for (std::size_t i = 0; i < counts.size(); ++i) {
      count_edit(depth, kEditIntents[i], counts[i]);
    }
  }
}

std::size_t FlowMatrix::at(int depth, FlowNode from, FlowNode to) const {
  auto d = flow.find(depth);
  if (d == flow.end()) return 0;
  auto c = d->second.find({from, to});
  return c == d->second.end() ? 0 : c->second;
}

std::size_t FlowMatrix::total() const {
  std::size_t sum = 0;
  for (const auto& [depth, cells] : flow) {
    for (const auto& [link, count] : cells) sum += count;
  }
  return sum;
}

FlowMatrix transitions(std::span<const RevisionTrace> traces) {
  FlowMatrix result;
  const auto n = static_cast<std::ptrdiff_t>(traces.size());
#pragma omp parallel
  {
    FlowMatrix local;
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < n; ++i) add_trace(traces[i], local);
#pragma omp critical(revkit_flow_merge)
    result.merge(local);
  }
  return result;
}

std::map<std::string, FlowMatrix> transitions_by_group(
    std::span<const RevisionTrace> traces) {
  std::map<std::string, FlowMatrix> groups;
  for (const RevisionTrace& trace : traces) add_trace(trace, groups[trace.group]);
  return groups;
}

namespace serial {

FlowMatrix transitions(std::span<const RevisionTrace> traces) {
  FlowMatrix result;
  for (const RevisionTrace& trace : traces) add_trace(trace, result);
  return result;
}

}  // namespace serial

std::vector<std::string> conservation_violations(const FlowMatrix& m) {
  std::vector<std::string> out;
  auto edit_count = [&](int depth, std::size_t i) -> std::size_t {
    auto it = m.edits.find(depth);
    return it == m.edits.end() ? 0 : it->second[i];
  };
  std::map<std::pair<int, std::size_t>, std::size_t> outgoing, incoming;
  for (const auto& [depth, cells] : m.flow) {
    for (const auto& [link, count] : cells) {
      if (link.first == FlowNode::kEnd || link.second == FlowNode::kStart) {
        out.push_back("depth " + std::to_string(depth) + ": link " +
                      std::string(to_string(link.first)) + "->" +
                      std::string(to_string(link.second)) + " points the wrong way");
        continue;
      }
      if (link.first != FlowNode::kStart) {
        outgoing[{depth - 1, static_cast<std::size_t>(link.first)}] += count;
      }
      if (link.second != FlowNode::kEnd) {
        incoming[{depth, static_cast<std::size_t>(link.second)}] += count;
      }
    }
  }
  std::vector<int> depths;
  for (const auto& [depth, counts] : m.edits) depths.push_back(depth);
  for (const auto& [key, count] : outgoing) depths.push_back(key.first);
  for (const auto& [key, count] : incoming) depths.push_back(key.first);
  std::sort(depths.begin(), depths.end());
  depths.erase(std::unique(depths.begin(), depths.end()), depths.end());
  for (int depth : depths) {
    for (std::size_t i = 0; i < kEditIntents.size(); ++i) {
      const std::size_t expected = edit_count(depth, i);
      const std::string name = node_name(static_cast<FlowNode>(i), depth);
      const std::size_t in = incoming[{depth, i}];
      const std::size_t outs = outgoing[{depth, i}];
      if (in != expected) {
        out.push_back(name + ": incoming " + std::to_string(in) + " != edits " +
                      std::to_string(expected));
      }
      if (outs != expected) {
        out.push_back(name + ": outgoing " + std::to_string(outs) + " != edits " +
                      std::to_string(expected));
      }
    }
  }
  return out;
}

nlohmann::json export_sankey(const FlowMatrix& m) {
  using nlohmann::json;
  // Node order: START, intent nodes by depth then intent, END.
  std::map<std::pair<int, int>, std::string> nodes;
  json links = json::array();
  for (const auto& [depth, cells] : m.flow) {
    for (const auto& [link, count] : cells) {
      if (count == 0) continue;
      const auto [from, to] = link;
      const int from_depth = from == FlowNode::kStart ? -1 : depth - 1;
      const int to_depth = to == FlowNode::kEnd ? INT32_MAX : depth;
      const std::string source = node_name(from, from_depth);
      const std::string target = node_name(to, to_depth);
      nodes[{from_depth, static_cast<int>(from)}] = source;
      nodes[{to_depth, static_cast<int>(to)}] = target;
      links.push_back({{"source", source}, {"target", target}, {"value", count}});
    }
  }
  json node_list = json::array();
  for (const auto& [key, name] : nodes) node_list.push_back({{"name", name}});
  json doc;
  doc["nodes"] = node_list;
  doc["links"] = links;
  doc["metadata"] = {
      {"pairing",
       "an edit at depth t continues the leftmost unpaired overlapping edit of "
       "depth t-1, after mapping depth t-1 edits into the text they produced"},
      {"start", "edits that continue no earlier edit"},
      {"end", "edits that no later edit continues"},
      {"total", m.total()},
  };
  return doc;
}

std::string export_csv(const FlowMatrix& m) {
  std::ostringstream out;
  out << "depth,from,to,count\n";
  for (const auto& [depth, cells] : m.flow) {
    for (const auto& [link, count] : cells) {
      if (count == 0) continue;
      out << depth << ',' << to_string(link.first) << ',' << to_string(link.second) << ','
          << count << '\n';
    }
  }
  return out.str();
}

}  // namespace revkit
