#ifndef ELRC_REASONER_HPP
#define ELRC_REASONER_HPP

#include <atomic>
#include <cstdint>
#include <span>

#include "elrc/normalize.hpp"

namespace elrc {

// Counts classical subsumption tests. One cell can be shared by every
// decision procedure layered on top, so a whole query pipeline can be
// instrumented with a single counter.
class TestCounter {
public:
  void bump() { value_.fetch_add(1, std::memory_order_relaxed); }
  std::uint64_t read() const { return value_.load(std::memory_order_relaxed); }
  std::uint64_t read_and_reset() { return value_.exchange(0, std::memory_order_relaxed); }

private:
  std::atomic<std::uint64_t> value_{0};
};

// Least fixpoint of the completion rules over a normal-form TBox:
//
//   init    X <= X, X <= top                 for every named X
//   (sub)   X <= A,  A <= B                  =>  X <= B
//   (conj)  X <= A1, X <= A2, A1 & A2 <= B   =>  X <= B
//   (ex+)   X <= A,  A <= some r. B          =>  edge X -r-> B
//   (ex-)   X -r-> Y, Y <= A, some r. A <= B =>  X <= B
//   (bot)   X -r-> Y, Y <= bot               =>  X <= bot
//
// Once built the state is immutable; queries are lookups.
class SaturationState {
public:
  // sub/sup are atoms or the top/bot sentinels.
  bool subsumed(Symbol sub, Symbol sup) const;
  bool unsat(Symbol sub) const;
  bool has_node(Symbol s) const;
  std::size_t fact_count() const { return facts_; }  // subsumptions + edges

  friend SaturationState saturate_impl(const NormalTBox&, RewriteOrder);

private:
  std::vector<Symbol> node_syms_;                 // dense id -> symbol
  std::vector<std::vector<std::uint64_t>> subs_;  // bitset per node, width nodes+1 (bot last)
  std::size_t facts_ = 0;
  int index_of(Symbol s) const;
};

// order is a test hook; the fixpoint is order-independent.
SaturationState saturate(const NormalTBox& tbox, RewriteOrder order = RewriteOrder::Queue);

// Classical decision: does the (arbitrary, nominal-free) TBox entail the
// query GCI? Complex query sides are internalized with fresh atoms, the
// whole set is normalized and saturated, and the answer is a lookup.
// Increments the counter by exactly one per call.
bool entails(std::span<const StrictGci> tbox, const StrictGci& query, TestCounter* counter = nullptr);

}  // namespace elrc

#endif
