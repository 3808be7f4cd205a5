#ifndef ELRC_RATIONAL_HPP
#define ELRC_RATIONAL_HPP

#include <optional>

#include "elrc/reasoner.hpp"

namespace elrc {

// Rank of a concept or axiom: a level index, or infinite (which compares
// greater than every finite value).
class Rank {
public:
  static Rank finite(std::size_t v) { return Rank(v); }
  static Rank infinite() { return Rank(); }

  bool is_infinite() const { return !value_.has_value(); }
  std::size_t value() const { return *value_; }

  bool operator==(const Rank& o) const { return value_ == o.value_; }
  bool operator<(const Rank& o) const {
    if (is_infinite()) return false;
    if (o.is_infinite()) return true;
    return *value_ < *o.value_;
  }

private:
  Rank() = default;
  explicit Rank(std::size_t v) : value_(v) {}
  std::optional<std::size_t> value_;
};

std::string to_string(const Rank& r);

// A strict TBox extended with one marker atom: every defeasible axiom
// E <~ F of the encoded set contributes E & delta <= F. Membership of the
// most typical layer is what the marker stands for, which turns
// exceptionality into the classical test  tbox |= C & delta <= bot.
struct TDeltaEncoding {
  Symbol delta_atom;
  std::vector<StrictGci> tbox;
};

TDeltaEncoding build_t_delta(std::span<const StrictGci> tbox,
                             std::span<const DefeasibleGci> axioms, FreshNameSource& deltas);

// The subset of `axioms` whose left side is unsatisfiable on the typical
// layer, i.e. entails(t_delta, E & delta <= bot). Deterministic order.
std::vector<DefeasibleGci> exceptional(std::span<const StrictGci> tbox,
                                       std::span<const DefeasibleGci> axioms,
                                       FreshNameSource& deltas, TestCounter* counter = nullptr);

// Output of the ranking fixpoint. cells[i] holds the defeasible axioms of
// rank i; axioms that turned out strict are absorbed into tstar as lhs <= bot
// and remembered in `infinite`.
struct Ranking {
  std::vector<StrictGci> tstar;
  std::vector<DefeasibleGci> dstar;
  std::vector<std::vector<DefeasibleGci>> cells;
  std::vector<DefeasibleGci> infinite;
  std::size_t absorption_rounds = 0;  // outer passes that moved axioms into tstar
};

Ranking compute_ranking(const KnowledgeBase& kb, TestCounter* counter = nullptr);

// Smallest level whose marker encoding leaves c satisfiable; infinite when
// even the bare tstar makes c unsatisfiable.
Rank rank_of_concept(const Ranking& r, const Concept& c, FreshNameSource& deltas,
                     TestCounter* counter = nullptr);

bool rational_closure_entails(const KnowledgeBase& kb, const DefeasibleGci& query,
                              TestCounter* counter = nullptr);
bool rational_closure_entails(const KnowledgeBase& kb, const StrictGci& query,
                              TestCounter* counter = nullptr);

bool is_rank_satisfiable(const KnowledgeBase& kb, TestCounter* counter = nullptr);

// Per-knowledge-base façade; the ranking is computed once and reused by all
// queries. One engine is single-owner (the lazy ranking and the counter are
// unsynchronized); to query concurrently, share the immutable Ranking value
// and use the free functions from separate threads.
class RcEngine {
public:
  explicit RcEngine(KnowledgeBase kb, TestCounter* counter = nullptr);

  const KnowledgeBase& kb() const { return kb_; }
  const Ranking& ranking();

  bool entails(const DefeasibleGci& query);
  bool entails(const StrictGci& query);
  Rank rank_of(const Concept& c);

  struct Verdict {
    bool entailed = false;
    std::optional<Rank> lhs_rank;             // defeasible queries only
    std::optional<std::size_t> decided_level; // level whose encoding answered
    bool classical = false;                   // settled by a classical test alone
  };
  Verdict explain(const DefeasibleGci& query);

private:
  KnowledgeBase kb_;
  TestCounter* counter_;
  std::optional<Ranking> ranking_;
};

}  // namespace elrc

#endif
