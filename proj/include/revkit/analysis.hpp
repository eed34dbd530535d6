#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "revkit/editops.hpp"
#include "revkit/intent.hpp"

namespace revkit {

// The four edit intents plus the synthetic source and sink of a flow.
enum class FlowNode : std::uint8_t {
  kClarity = 0,
  kCoherence = 1,
  kFluency = 2,
  kStyle = 3,
  kStart = 4,
  kEnd = 5,
};

std::string_view to_string(FlowNode node);
FlowNode flow_node(Intent intent);  // Intent::kNone is not a flow node

// flow[t][(i, j)] counts edits of intent i at depth t-1 followed by an edit of
// intent j at depth t. Depth-1 edits enter from START; edits with no
// successor leave to END at the next depth.
struct FlowMatrix {
  using Link = std::pair<FlowNode, FlowNode>;

  std::map<int, std::map<Link, std::size_t>> flow;
  std::map<int, std::array<std::size_t, 4>> edits;  // per intent, per depth

  void add(int depth, FlowNode from, FlowNode to, std::size_t count = 1);
  void count_edit(int depth, Intent intent, std::size_t count = 1);
  void merge(const FlowMatrix& other);

  std::size_t at(int depth, FlowNode from, FlowNode to) const;
  std::size_t total() const;
  bool empty() const { return flow.empty() && edits.empty(); }

  bool operator==(const FlowMatrix&) const = default;
};

// Edits of consecutive steps are paired when their ranges overlap once the
// earlier step's edits are mapped into the text they produced. Each later
// edit, left to right, takes the leftmost unpaired earlier edit it overlaps.
// Empty ranges overlap anything they touch. NONE-intent edits are ignored.
FlowMatrix transitions(std::span<const RevisionTrace> traces);
std::map<std::string, FlowMatrix> transitions_by_group(
    std::span<const RevisionTrace> traces);

namespace serial {
FlowMatrix transitions(std::span<const RevisionTrace> traces);
}  // namespace serial

// Empty when every intent node's outgoing links sum to its edit count at the
// previous depth and its incoming links sum to its edit count at the depth.
std::vector<std::string> conservation_violations(const FlowMatrix& m);

// {"nodes": [...], "links": [{"source", "target", "value"}], "metadata": {...}}
// Intent nodes are named "intent@depth"; START and END are single nodes.
// An empty matrix gives empty node and link lists.
nlohmann::json export_sankey(const FlowMatrix& m);

// Header "depth,from,to,count" then one row per non-zero cell.
std::string export_csv(const FlowMatrix& m);

}  // namespace revkit
