#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "revkit/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kFixtures = REVKIT_FIXTURES;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = revkit::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("revkit-cli-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + "-" +
             std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
  static inline int counter_ = 0;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<json> json_lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(json::parse(line));
  return out;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("help exits 0 on every subcommand") {
    CHECK(run({"--help"}).code == 0);
    for (const char* sub : {"filter", "ingest", "stats", "detect", "revise", "iterate", "eval",
                            "flows"}) {
      const Result r = run({sub, "--help"});
      CHECK_MESSAGE(r.code == 0, sub);
      CHECK(r.out.find("--") != std::string::npos);
    }
  }

  TEST_CASE("usage errors exit 2 with a synopsis") {
    Result r = run({});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
    CHECK(run({"nosuch"}).code == 2);
    CHECK(run({"filter"}).code == 2);
    CHECK(run({"iterate", "--backend", "carrier-pigeon"}).code == 2);
    CHECK(run({"iterate", "--max-depth", "0", "--rules", kFixtures + "/rules.tsv"}).code == 2);
    r = run({"detect", "--backend", "rules"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--rules") != std::string::npos);
    CHECK(run({"detect", "--backend", "remote", "--rules", kFixtures + "/rules.tsv",
               "--endpoint", "http://127.0.0.1:9"})
              .code == 2);
    CHECK(run({"eval", "--metric", "sari", "--hyp", kFixtures + "/rules.tsv"}).code == 2);
    CHECK(run({"stats", "--in", "/nonexistent/file"}).code == 2);
  }

  TEST_CASE("identity sari through eval") {
    TempDir dir;
    const std::string s = dir.file("s.txt", "a b c\nthe cat sat on the mat .\n");
    const Result r = run({"eval", "--metric", "sari", "--src", s, "--hyp", s, "--ref", s});
    CHECK(r.code == 0);
    const auto lines = json_lines(r.out);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0]["metric"] == "sari");
    CHECK(lines[0]["value"] == 33.33);
    CHECK(r.out.find("\"value\":33.33") != std::string::npos);
  }

  TEST_CASE("eval reports every metric") {
    TempDir dir;
    const std::string src = dir.file("src.txt", "a b c d e\n");
    const std::string hyp = dir.file("hyp.txt", "a b c d\n");
    const std::string ref = dir.file("ref.txt", "a b c d e\n");
    const std::string gold = dir.file("gold.txt", "fluency fluency none none\n");
    const std::string pred = dir.file("pred.txt", "fluency none fluency none\n");
    const Result r = run({"eval", "--src", src, "--hyp", hyp, "--ref", ref, "--gold", gold,
                          "--pred", pred});
    REQUIRE(r.code == 0);
    const auto lines = json_lines(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0]["metric"] == "bleu");
    CHECK(lines[0]["value"] == 0.7788);
    CHECK(lines[1]["metric"] == "rouge_l");
    CHECK(lines[2]["metric"] == "sari");
    CHECK(lines[3]["metric"] == "f1");
    CHECK(lines[3]["value"] == 50.0);

    const std::string short_ref = dir.file("short.txt", "");
    CHECK(run({"eval", "--metric", "bleu", "--hyp", hyp, "--ref", short_ref}).code == 1);
    const std::string bad = dir.file("bad.txt", "fluency bogus\n");
    CHECK(run({"eval", "--metric", "f1", "--gold", bad, "--pred", bad}).code == 1);
  }

  TEST_CASE("iterate writes traces with stop reasons") {
    TempDir dir;
    const std::string out = dir.path("traces.jsonl");
    const Result r = run({"iterate", "--backend", "rules", "--rules", kFixtures + "/rules.tsv",
                          "--max-depth", "4", "--in", kFixtures + "/docs.jsonl", "--out", out});
    REQUIRE(r.code == 0);
    const auto traces = json_lines(slurp(out));
    REQUIRE(traces.size() == 3);
    CHECK(traces[0]["doc_id"] == "t6");
    CHECK(traces[0]["steps"][0]["after"] ==
          "I disagree with the statement that \"young people do not have enough time to "
          "helping their communities\".");
    CHECK(traces[1]["doc_id"] == "toggle");
    CHECK(traces[1]["stop_reason"] == "OSCILLATION");
    CHECK(traces[2]["stop_reason"] == "NO_EDIT");
    CHECK(traces[2]["steps"].empty());

    // Same inputs, same bytes, whatever the thread count.
    const std::string again = dir.path("again.jsonl");
    CHECK(run({"iterate", "--rules", kFixtures + "/rules.tsv", "--jobs", "3", "--in",
               kFixtures + "/docs.jsonl", "--out", again})
              .code == 0);
    CHECK(slurp(again) == slurp(out));

    const Result flows = run({"flows", "--in", out, "--format", "csv"});
    CHECK(flows.code == 0);
    CHECK(flows.out.rfind("depth,from,to,count\n", 0) == 0);
    CHECK(flows.out.find("1,START,") != std::string::npos);
    const Result sankey = run({"flows", "--in", out});
    CHECK(sankey.code == 0);
    CHECK(json::parse(sankey.out).contains("links"));
    const Result grouped = run({"flows", "--in", out, "--by-group", "--format", "csv"});
    CHECK(grouped.out.rfind("group,depth,from,to,count\n", 0) == 0);
    CHECK(grouped.out.find("\nb,") != std::string::npos);
  }

  TEST_CASE("detect and revise") {
    const std::string docs = slurp(kFixtures + "/docs.jsonl");
    const Result d = run({"detect", "--rules", kFixtures + "/rules.tsv"}, docs);
    REQUIRE(d.code == 0);
    const auto lines = json_lines(d.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0]["annotated"] ==
          "I <fluency> disagree about that </fluency> \"young people do not <clarity> give "
          "</clarity> enough time to helping their communities\".");
    CHECK(lines[2]["spans"].empty());

    const Result r = run({"revise", "--rules", kFixtures + "/rules.tsv"}, docs);
    REQUIRE(r.code == 0);
    const auto revised = json_lines(r.out);
    CHECK(revised[1]["revised"] == "The colour is red. Nothing else here.");
    CHECK(revised[2]["step"].is_null());
  }

  TEST_CASE("unreachable remote backend is a data error") {
    const Result r = run({"detect", "--backend", "remote", "--endpoint", "http://127.0.0.1:9"},
                         R"({"doc_id":"d","text":"Hello there."})");
    CHECK(r.code == 1);
    CHECK(r.err.find("BackendUnavailable") != std::string::npos);
  }

  TEST_CASE("malformed document lines are data errors") {
    const Result r = run({"iterate", "--rules", kFixtures + "/rules.tsv"}, "{\"doc_id\":1}\n");
    CHECK(r.code == 1);
    CHECK(r.err.find("line 1") != std::string::npos);
  }

  TEST_CASE("filter, ingest and stats") {
    const Result f = run({"filter", "--source", "nucle", "--in", kFixtures + "/nucle.tsv"});
    REQUIRE(f.code == 0);
    const json report = json::parse(f.out);
    CHECK(report["total"] == 3);
    CHECK(report["kept"] == 2);
    CHECK(report["reasons"]["len_ratio"] == 1);

    TempDir dir;
    const std::string records = dir.path("records.jsonl");
    const Result i = run({"ingest", "--source", "iterater", "--split", "test", "--in",
                          kFixtures + "/iterater.jsonl", "--out", records});
    REQUIRE(i.code == 0);
    CHECK(json::parse(i.err)["reasons"]["out_of_taxonomy"] == 1);
    const auto recs = json_lines(slurp(records));
    REQUIRE(recs.size() == 2);
    CHECK(recs[0]["record_id"] == "iterater-test-1");
    CHECK(recs[0]["intent"] == "fluency");

    const Result s = run({"stats", "--in", records});
    REQUIRE(s.code == 0);
    CHECK(s.out.find("fluency") != std::string::npos);

    CHECK(run({"ingest", "--source", "nucle"}, "only one field\n").code == 1);
  }
}
