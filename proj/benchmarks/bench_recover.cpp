#include <benchmark/benchmark.h>

#include "robparse/normal_parser.hpp"
#include "robparse/recovery.hpp"

namespace {

using namespace robparse;

Grammar bench_grammar() {
  Grammar g = read_grammar_text(
      "# start: S\n"
      "1\tS -> NP VP\n1\tS -> NP VP PP\n1\tS -> S cc S\n"
      "1\tNP -> dt nn\n1\tNP -> dt jj nn\n1\tNP -> NP PP\n1\tNP -> prp\n1\tNP -> nn\n"
      "1\tVP -> vb NP\n1\tVP -> vb\n1\tVP -> vb NP PP\n1\tVP -> md VP\n"
      "1\tPP -> in NP\n");
  apply_default_heuristic_sets(g);
  return g;
}

TaggedSentence sentence(std::size_t repeats, bool corrupt) {
  // "dt nn vb dt nn in dt nn" chained with cc; the corrupt form drops every
  // second vb and adds a comma-flanked adverb.
  TaggedSentence s;
  for (std::size_t r = 0; r < repeats; ++r) {
    if (r > 0) s.tags.push_back("cc");
    for (const char* t : {"dt", "nn", "vb", "dt", "nn", "in", "dt", "nn"}) {
      if (corrupt && r % 2 == 1 && std::string(t) == "vb") continue;
      s.tags.push_back(t);
    }
    if (corrupt && r == 0) s.tags.insert(s.tags.end(), {"comma", "rb", "comma"});
  }
  for (std::size_t i = 0; i < s.tags.size(); ++i) s.words.push_back("w");
  return s;
}

void BM_NormalParse(benchmark::State& state) {
  Grammar g = bench_grammar();
  auto s = sentence(static_cast<std::size_t>(state.range(0)), false);
  for (auto _ : state) benchmark::DoNotOptimize(parse_normal(g, s, 1));
  state.counters["tokens"] = static_cast<double>(s.tags.size());
}
BENCHMARK(BM_NormalParse)->Arg(1)->Arg(2)->Arg(4);

void BM_RecoverBestFirst(benchmark::State& state) {
  Grammar g = bench_grammar();
  auto s = sentence(static_cast<std::size_t>(state.range(0)), true);
  std::size_t edges = 0;
  for (auto _ : state) {
    auto r = recover(g, s, {});
    edges = r.edges;
    benchmark::DoNotOptimize(r);
  }
  state.counters["edges"] = static_cast<double>(edges);
  state.counters["tokens"] = static_cast<double>(s.tags.size());
}
BENCHMARK(BM_RecoverBestFirst)->Arg(1)->Arg(2)->Arg(3);

void BM_RecoverFifoNoHeuristics(benchmark::State& state) {
  Grammar g = bench_grammar();
  auto s = sentence(static_cast<std::size_t>(state.range(0)), true);
  RecoverOptions o;
  o.params = CostParams{}.without_heuristics();
  o.order = AgendaOrder::Fifo;
  o.exhaustive = true;
  std::size_t edges = 0;
  for (auto _ : state) {
    auto r = recover(g, s, o);
    edges = r.edges;
    benchmark::DoNotOptimize(r);
  }
  state.counters["edges"] = static_cast<double>(edges);
}
BENCHMARK(BM_RecoverFifoNoHeuristics)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
