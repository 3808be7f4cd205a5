#ifndef ELRC_ORACLE_HPP
#define ELRC_ORACLE_HPP

#include <functional>

#include "elrc/reasoner.hpp"

namespace elrc {

// A finite ranked interpretation: classical extensions plus a height per
// element. Heights form contiguous layers starting at 0.
struct RankedInterpretation {
  int domain_size = 0;
  std::map<Symbol, std::uint32_t, SymbolNameLess> atom_ext;  // bitmask over elements
  // role -> per-source successor bitmask
  std::map<Symbol, std::vector<std::uint32_t>, SymbolNameLess> role_ext;
  std::vector<int> height;

  bool in_atom(Symbol atom, int elem) const;
  bool related(Symbol role, int from, int to) const;
};

class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded() : std::runtime_error("oracle budget exceeded") {}
};

struct OracleBudget {
  int max_domain = 3;
  int max_height = 3;
  std::uint64_t max_candidates = 20'000'000;  // raw search-space cap
};

// Pointwise concept evaluation; input must be nominal-free.
bool holds_at(const RankedInterpretation& r, const Concept& c, int elem);

// Strict: extension inclusion. Defeasible: the minimal-height elements of
// the left extension all satisfy the right side (empty extension satisfies).
bool satisfies(const RankedInterpretation& r, const StrictGci& ax);
bool satisfies(const RankedInterpretation& r, const DefeasibleGci& ax);
bool satisfies(const RankedInterpretation& r, const KnowledgeBase& kb);

// Streams every ranked model of kb over domains 1..max_domain, enumerating
// atom extensions, role extensions and contiguous height functions
// exhaustively. The callback returns false to stop early. Throws
// BudgetExceeded once more raw candidates than the cap have been visited.
void enumerate_models(const KnowledgeBase& kb, const OracleBudget& budget,
                      const std::function<bool(const RankedInterpretation&)>& on_model);

// True iff no ranked model within the budget places a c-element on layer 0.
// A found witness refutes exceptionality soundly; exhaustion certifies it
// only relative to the bound. Decided on a type abstraction that agrees with
// the concrete enumeration (asserted by tests), so larger signatures than
// enumerate_models could sweep are still exhaustable.
bool exceptional_bounded(const KnowledgeBase& kb, const Concept& c, const OracleBudget& budget);

// Bounded classical refutation: is there an interpretation of at most
// max_domain elements satisfying tbox with an element in lhs but not rhs?
bool classical_countermodel_exists(std::span<const StrictGci> tbox, const StrictGci& query,
                                   const OracleBudget& budget);

}  // namespace elrc

#endif
