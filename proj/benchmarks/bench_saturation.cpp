#include <benchmark/benchmark.h>

#include "elrc/reasoner.hpp"

using namespace elrc;

namespace {

// Subsumption chain with existential detours: A_i <= A_{i+1}, A_i <= some r. A_{i+2}.
NormalTBox chain_tbox(int n) {
  std::vector<StrictGci> axioms;
  auto atom = [](int i) { return Concept::atom("A" + std::to_string(i)); };
  for (int i = 0; i + 1 < n; ++i) {
    axioms.push_back({atom(i), atom(i + 1)});
    if (i + 2 < n) axioms.push_back({atom(i), Concept::exists("r", atom(i + 2))});
    if (i % 7 == 0) axioms.push_back({Concept::exists("r", atom(i + 1)), atom(i + 1)});
  }
  FreshNameSource defs(FreshNameSource::Space::Defn);
  NameMap names;
  return normalize_tbox(axioms, defs, names);
}

void BM_saturate(benchmark::State& state) {
  NormalTBox tbox = chain_tbox(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    SaturationState s = saturate(tbox);
    benchmark::DoNotOptimize(s.fact_count());
  }
}

void BM_entails(benchmark::State& state) {
  NormalTBox tbox = chain_tbox(static_cast<int>(state.range(0)));
  std::vector<StrictGci> gcis = to_gcis(tbox);
  StrictGci query{Concept::atom("A0"),
                  Concept::atom("A" + std::to_string(state.range(0) - 1))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(entails(gcis, query));
  }
}

}  // namespace

BENCHMARK(BM_saturate)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_entails)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
