#include <benchmark/benchmark.h>

#include "elrc/inheritance.hpp"
#include "generators.hpp"

using namespace elrc;

namespace {

KnowledgeBase sized_kb(int dbox_size) {
  testgen::Rng rng(static_cast<std::uint64_t>(dbox_size) * 977 + 5);
  testgen::Profile p;
  p.atoms = 8;
  p.roles = 2;
  p.tbox = 20;
  p.dbox = dbox_size;
  KnowledgeBase kb = testgen::random_kb(rng, p);
  // top up until the DBox really has the requested size
  std::vector<DefeasibleGci> d = kb.dbox();
  int extra = 0;
  while (static_cast<int>(d.size()) < dbox_size)
    d.push_back({Concept::atom("A" + std::to_string(extra % 8)),
                 Concept::atom("B" + std::to_string(extra++))});
  return KnowledgeBase(kb.tbox(), std::move(d));
}

void BM_compute_ranking(benchmark::State& state) {
  KnowledgeBase kb = sized_kb(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Ranking r = compute_ranking(kb);
    benchmark::DoNotOptimize(r.cells.size());
  }
}

void BM_rc_query_cold(benchmark::State& state) {
  KnowledgeBase kb = sized_kb(static_cast<int>(state.range(0)));
  DefeasibleGci q{Concept::atom("A0"), Concept::atom("A1")};
  for (auto _ : state) {
    benchmark::DoNotOptimize(rational_closure_entails(kb, q));
  }
}

void BM_rc_query_warm(benchmark::State& state) {
  KnowledgeBase kb = sized_kb(static_cast<int>(state.range(0)));
  RcEngine engine(kb);
  engine.ranking();
  DefeasibleGci q{Concept::atom("A0"), Concept::atom("A1")};
  for (auto _ : state) {
    benchmark::DoNotOptimize(engine.entails(q));
  }
}

void BM_inheritance_query(benchmark::State& state) {
  KnowledgeBase kb = sized_kb(static_cast<int>(state.range(0)));
  DefeasibleGci q{Concept::atom("A0"), Concept::atom("A1")};
  for (auto _ : state) {
    InheritanceEngine engine(kb);
    benchmark::DoNotOptimize(engine.entails(q));
  }
}

}  // namespace

BENCHMARK(BM_compute_ranking)->Arg(5)->Arg(10)->Arg(20);
BENCHMARK(BM_rc_query_cold)->Arg(5)->Arg(10)->Arg(20);
BENCHMARK(BM_rc_query_warm)->Arg(5)->Arg(10)->Arg(20);
BENCHMARK(BM_inheritance_query)->Arg(5)->Arg(10);
