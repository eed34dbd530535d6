#include <doctest.h>

#include <algorithm>
#include <map>

#include "generators.hpp"
#include "revkit/analysis.hpp"

using namespace revkit;

namespace {

RevisionStep step(int depth, std::string before, std::vector<Edit> edits) {
  RevisionStep s;
  s.depth = depth;
  s.before = std::move(before);
  s.edits = std::move(edits);
  s.after = apply_edits(s.before, s.edits);
  return s;
}

RevisionTrace two_step_trace() {
  RevisionTrace t;
  t.doc_id = "t";
  t.steps.push_back(step(1, "a b c d", {{2, 3, "bb", Intent::kClarity}}));
  t.steps.push_back(step(2, "a bb c d", {{2, 4, "b", Intent::kFluency}}));
  return t;
}

// Edits per (depth, intent), counted straight from the traces.
std::map<std::pair<int, Intent>, std::size_t> edit_counts(const std::vector<RevisionTrace>& ts) {
  std::map<std::pair<int, Intent>, std::size_t> out;
  for (const auto& t : ts) {
    for (const auto& s : t.steps) {
      for (const auto& e : s.edits) ++out[{s.depth, e.intent}];
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("no traces") {
    const FlowMatrix m = transitions(std::vector<RevisionTrace>{});
    CHECK(m.empty());
    const auto doc = export_sankey(m);
    CHECK(doc["nodes"].empty());
    CHECK(doc["links"].empty());
    CHECK(export_csv(m) == "depth,from,to,count\n");
  }

  TEST_CASE("overlapping edits at consecutive depths pair up") {
    const std::vector<RevisionTrace> traces{two_step_trace()};
    const FlowMatrix m = transitions(traces);
    CHECK(m.at(1, FlowNode::kStart, FlowNode::kClarity) == 1);
    CHECK(m.at(2, FlowNode::kClarity, FlowNode::kFluency) == 1);
    CHECK(m.at(3, FlowNode::kFluency, FlowNode::kEnd) == 1);
    CHECK(m.total() == 3);
    CHECK(conservation_violations(m).empty());
    CHECK(export_csv(m) ==
          "depth,from,to,count\n1,START,clarity,1\n2,clarity,fluency,1\n3,fluency,END,1\n");
  }

  TEST_CASE("an edit with no successor ends") {
    RevisionTrace t;
    t.steps.push_back(step(1, "a b", {{0, 1, "x", Intent::kClarity}}));
    const FlowMatrix m = transitions(std::vector<RevisionTrace>{t});
    CHECK(m.at(2, FlowNode::kClarity, FlowNode::kEnd) == 1);
  }

  TEST_CASE("edits elsewhere do not pair") {
    RevisionTrace t;
    t.steps.push_back(step(1, "a b c d e", {{0, 1, "x", Intent::kClarity}}));
    t.steps.push_back(step(2, "x b c d e", {{8, 9, "y", Intent::kStyle}}));
    const FlowMatrix m = transitions(std::vector<RevisionTrace>{t});
    CHECK(m.at(2, FlowNode::kClarity, FlowNode::kEnd) == 1);
    CHECK(m.at(2, FlowNode::kStart, FlowNode::kStyle) == 1);
    CHECK(m.at(3, FlowNode::kStyle, FlowNode::kEnd) == 1);
    CHECK(conservation_violations(m).empty());
  }

  TEST_CASE("earlier edits are mapped into the text they produced") {
    RevisionTrace t;
    // Depth 1 grows the text in front of a later edit, shifting it right.
    t.steps.push_back(step(1, "a b c", {{0, 1, "long words", Intent::kClarity},
                                        {4, 5, "C", Intent::kStyle}}));
    REQUIRE(t.steps[0].after == "long words b C");
    t.steps.push_back(step(2, "long words b C", {{13, 14, "D", Intent::kFluency}}));
    const FlowMatrix m = transitions(std::vector<RevisionTrace>{t});
    CHECK(m.at(2, FlowNode::kStyle, FlowNode::kFluency) == 1);
    CHECK(m.at(2, FlowNode::kClarity, FlowNode::kEnd) == 1);
  }

  TEST_CASE("deletions pair with edits touching the deletion point") {
    RevisionTrace t;
    t.steps.push_back(step(1, "a b c", {{2, 4, "", Intent::kClarity}}));
    REQUIRE(t.steps[0].after == "a c");
    t.steps.push_back(step(2, "a c", {{2, 3, "d", Intent::kCoherence}}));
    const FlowMatrix m = transitions(std::vector<RevisionTrace>{t});
    CHECK(m.at(2, FlowNode::kClarity, FlowNode::kCoherence) == 1);
  }

  TEST_CASE("one transition exports two nodes and one link") {
    FlowMatrix m;
    m.add(2, FlowNode::kClarity, FlowNode::kFluency);
    const auto doc = export_sankey(m);
    REQUIRE(doc["nodes"].size() == 2);
    CHECK(doc["nodes"][0]["name"] == "clarity@1");
    CHECK(doc["nodes"][1]["name"] == "fluency@2");
    REQUIRE(doc["links"].size() == 1);
    CHECK(doc["links"][0]["source"] == "clarity@1");
    CHECK(doc["links"][0]["target"] == "fluency@2");
    CHECK(doc["links"][0]["value"] == 1);
    CHECK(doc.contains("metadata"));
  }

  TEST_CASE("random traces conserve edits") {
    gen::Rng rng(81);
    std::vector<RevisionTrace> traces;
    for (int i = 0; i < 300; ++i) traces.push_back(gen::trace(rng));
    const FlowMatrix m = transitions(traces);
    CHECK(conservation_violations(m).empty());

    const auto counts = edit_counts(traces);
    const auto doc = export_sankey(m);
    std::map<std::string, std::size_t> incoming, outgoing;
    std::size_t link_total = 0;
    for (const auto& link : doc["links"]) {
      const auto v = link["value"].get<std::size_t>();
      incoming[link["target"].get<std::string>()] += v;
      outgoing[link["source"].get<std::string>()] += v;
      link_total += v;
    }
    CHECK(link_total == m.total());
    for (const auto& [key, n] : counts) {
      const std::string node = std::string(to_string(key.second)) + "@" + std::to_string(key.first);
      CHECK(incoming[node] == n);
      CHECK(outgoing[node] == n);
    }
    std::size_t edits = 0;
    for (const auto& [key, n] : counts) edits += n;
    CHECK(outgoing["START"] == incoming["END"]);
    CHECK(incoming["END"] <= edits);
  }

  TEST_CASE("trace order does not matter") {
    gen::Rng rng(82);
    std::vector<RevisionTrace> traces;
    for (int i = 0; i < 100; ++i) traces.push_back(gen::trace(rng));
    const FlowMatrix m = transitions(traces);
    std::shuffle(traces.begin(), traces.end(), rng);
    CHECK(transitions(traces) == m);
    CHECK(serial::transitions(traces) == m);
  }

  TEST_CASE("merge adds counts") {
    gen::Rng rng(83);
    std::vector<RevisionTrace> a, b, all;
    for (int i = 0; i < 50; ++i) {
      a.push_back(gen::trace(rng));
      b.push_back(gen::trace(rng));
    }
    all = a;
    all.insert(all.end(), b.begin(), b.end());
    FlowMatrix merged = transitions(a);
    merged.merge(transitions(b));
    CHECK(merged == transitions(all));
  }

  TEST_CASE("grouped flows") {
    RevisionTrace x = two_step_trace();
    x.group = "beginner";
    RevisionTrace y = two_step_trace();
    y.group = "advanced";
    RevisionTrace z = two_step_trace();
    z.group = "beginner";
    const auto groups = transitions_by_group(std::vector<RevisionTrace>{x, y, z});
    REQUIRE(groups.size() == 2);
    CHECK(groups.at("beginner").at(2, FlowNode::kClarity, FlowNode::kFluency) == 2);
    CHECK(groups.at("advanced").at(2, FlowNode::kClarity, FlowNode::kFluency) == 1);
  }

  TEST_CASE("conservation catches a tampered matrix") {
    FlowMatrix m = transitions(std::vector<RevisionTrace>{two_step_trace()});
    m.add(2, FlowNode::kClarity, FlowNode::kEnd);
    CHECK_FALSE(conservation_violations(m).empty());
  }
}
