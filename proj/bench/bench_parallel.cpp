// Serial reference against the OpenMP kernel for each batch operation.
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "generators.hpp"
#include "revkit/analysis.hpp"
#include "revkit/corpus.hpp"
#include "revkit/engine.hpp"
#include "revkit/metrics.hpp"

using namespace revkit;

namespace {

std::vector<RawPair> make_pairs(std::size_t n) {
  gen::Rng rng(7);
  std::vector<RawPair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string before = gen::text(rng, 5, 40);
    pairs.push_back({i + 1, before, gen::mutate(rng, before),
                     std::string(to_string(gen::intent(rng)))});
  }
  return pairs;
}

struct EvalData {
  std::vector<std::string> srcs, hyps;
  std::vector<std::vector<std::string>> refs;
};

EvalData make_eval(std::size_t n) {
  gen::Rng rng(8);
  EvalData d;
  for (std::size_t i = 0; i < n; ++i) {
    d.srcs.push_back(gen::text(rng, 5, 40));
    d.hyps.push_back(gen::mutate(rng, d.srcs.back()));
    d.refs.push_back({gen::mutate(rng, d.srcs.back()), gen::mutate(rng, d.srcs.back())});
  }
  return d;
}

struct Rules {
  RuleDetector detector;
  RuleReviser reviser;
};

Rules make_rules() {
  gen::Rng rng(9);
  std::vector<DetectionRule> det;
  std::vector<RevisionRule> rev;
  for (int k = 0; k < 12; ++k) {
    det.push_back({{gen::word(rng)}, gen::intent(rng)});
    rev.push_back({gen::intent(rng), gen::word(rng), gen::text(rng, 0, 2)});
  }
  return {RuleDetector(det), RuleReviser(rev)};
}

std::vector<BatchInput> make_docs(std::size_t n) {
  gen::Rng rng(10);
  std::vector<BatchInput> docs;
  for (std::size_t i = 0; i < n; ++i) {
    docs.push_back({{"d" + std::to_string(i), gen::text(rng, 10, 60), 0}, {}, ""});
  }
  return docs;
}

std::vector<RevisionTrace> make_traces(std::size_t n) {
  gen::Rng rng(11);
  std::vector<RevisionTrace> traces;
  for (std::size_t i = 0; i < n; ++i) traces.push_back(gen::trace(rng));
  return traces;
}

template <bool Parallel>
void BM_Ingest(benchmark::State& state) {
  const auto pairs = make_pairs(state.range(0));
  for (auto _ : state) {
    auto r = Parallel ? ingest(SourceDataset::kIterater, pairs, Split::kTrain, FilterConfig{})
                      : serial::ingest(SourceDataset::kIterater, pairs, Split::kTrain,
                                       FilterConfig{});
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_FilterBatch(benchmark::State& state) {
  const auto pairs = make_pairs(state.range(0));
  for (auto _ : state) {
    auto r = Parallel ? filter_batch(pairs, FilterConfig{})
                      : serial::filter_batch(pairs, FilterConfig{});
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_EvaluateCorpus(benchmark::State& state) {
  const EvalData d = make_eval(state.range(0));
  for (auto _ : state) {
    auto r = Parallel ? evaluate_corpus(d.srcs, d.hyps, d.refs)
                      : serial::evaluate_corpus(d.srcs, d.hyps, d.refs);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_IterateBatch(benchmark::State& state) {
  const Rules rules = make_rules();
  const auto docs = make_docs(state.range(0));
  for (auto _ : state) {
    auto r = Parallel
                 ? iterate_batch(docs, rules.detector, rules.reviser, EngineConfig{})
                 : serial::iterate_batch(docs, rules.detector, rules.reviser, EngineConfig{});
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_Transitions(benchmark::State& state) {
  const auto traces = make_traces(state.range(0));
  for (auto _ : state) {
    auto r = Parallel ? transitions(traces) : serial::transitions(traces);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_Ingest<false>)->Name("ingest/serial")->Arg(4000)->UseRealTime();
BENCHMARK(BM_Ingest<true>)->Name("ingest/parallel")->Arg(4000)->UseRealTime();
BENCHMARK(BM_FilterBatch<false>)->Name("filter_batch/serial")->Arg(4000)->UseRealTime();
BENCHMARK(BM_FilterBatch<true>)->Name("filter_batch/parallel")->Arg(4000)->UseRealTime();
BENCHMARK(BM_EvaluateCorpus<false>)->Name("evaluate_corpus/serial")->Arg(2000)->UseRealTime();
BENCHMARK(BM_EvaluateCorpus<true>)->Name("evaluate_corpus/parallel")->Arg(2000)->UseRealTime();
BENCHMARK(BM_IterateBatch<false>)->Name("iterate_batch/serial")->Arg(500)->UseRealTime();
BENCHMARK(BM_IterateBatch<true>)->Name("iterate_batch/parallel")->Arg(500)->UseRealTime();
BENCHMARK(BM_Transitions<false>)->Name("transitions/serial")->Arg(5000)->UseRealTime();
BENCHMARK(BM_Transitions<true>)->Name("transitions/parallel")->Arg(5000)->UseRealTime();

BENCHMARK_MAIN();
