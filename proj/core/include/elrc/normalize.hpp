#ifndef ELRC_NORMALIZE_HPP
#define ELRC_NORMALIZE_HPP

#include <map>
#include <optional>
#include <span>

#include "elrc/axioms.hpp"

namespace elrc {

// One strict axiom in normal form. c1/c2 are atoms or "top"; d is an atom,
// "top" or "bot"; fillers and targets of the existential shapes are atoms or
// "top" ("top"/"bot" are the interned sentinel symbols).
struct NormalAxiom {
  enum class Shape {
    AtomSub,    // c1 <= d
    ConjSub,    // c1 & c2 <= d
    ExistsSub,  // some role. c1 <= d
    SubExists,  // c1 <= some role. c2
  };
  Shape shape;
  Symbol c1 = 0;
  Symbol c2 = 0;
  Symbol role = 0;
  Symbol d = 0;

  bool operator==(const NormalAxiom& o) const {
    return shape == o.shape && c1 == o.c1 && c2 == o.c2 && role == o.role && d == o.d;
  }
};

using NormalTBox = std::vector<NormalAxiom>;

StrictGci to_gci(const NormalAxiom& ax);
std::vector<StrictGci> to_gcis(const NormalTBox& t);

// Records which generated atom stands for which original concept. One atom
// per canonicalized concept, so the definition map stays injective.
class NameMap {
public:
  Symbol atom_for(const Concept& c, FreshNameSource& fresh);  // lookup or create
  std::optional<Symbol> lookup(const Concept& c) const;
  const Concept* concept_of(Symbol atom) const;
  bool has(const Concept& c) const { return by_concept_.count(c) > 0; }
  const std::map<Symbol, Concept, SymbolNameLess>& definitions() const { return definitions_; }

private:
  std::map<Concept, Symbol, ConceptLess> by_concept_;
  std::map<Symbol, Concept, SymbolNameLess> definitions_;
};

// Hook for the confluence test: the order in which pending axioms are taken
// off the worklist. The fixpoint is the same modulo generated-name numbering.
enum class RewriteOrder { Queue, Stack };

// Exhaustive application of the decomposition rules, conjunctive and
// existential left sides split first, then right sides. Input must be
// nominal-free. Entailment over the original signature is preserved.
NormalTBox normalize_tbox(std::span<const StrictGci> tbox, FreshNameSource& fresh, NameMap& names,
                          RewriteOrder order = RewriteOrder::Queue);

struct NormalizedKb {
  std::vector<StrictGci> tbox;        // normal-form axioms, as GCIs
  NormalTBox tbox_normal;             // the same axioms, structured
  std::vector<DefeasibleGci> dbox;    // every axiom Atom <~ Atom
  std::vector<DefeasibleGci> origin;  // origin[i] is the input axiom behind dbox[i]
  NameMap names;

  KnowledgeBase kb() const { return KnowledgeBase(tbox, dbox); }
};

// Defeasible sides become definitional atoms (reused when a side is already
// atomic), the definitions join the TBox, and the TBox is normalized.
NormalizedKb normalize_kb(const KnowledgeBase& kb, FreshNameSource& fresh,
                          RewriteOrder order = RewriteOrder::Queue);

bool is_normal_form(const StrictGci& ax);

}  // namespace elrc

#endif
