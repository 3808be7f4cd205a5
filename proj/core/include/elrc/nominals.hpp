#ifndef ELRC_NOMINALS_HPP
#define ELRC_NOMINALS_HPP

#include "elrc/inheritance.hpp"

namespace elrc {

// Image atoms for individuals. Classical nominals {a} map to N-atoms,
// defeasible nominals <a> to a disjoint namespace of D-atoms, so the two
// pipelines can never alias even inside one test.
struct NominalImageMap {
  std::map<Symbol, Symbol, SymbolNameLess> classical;   // a -> "__rc.nom.a"
  std::map<Symbol, Symbol, SymbolNameLess> defeasible;  // a -> "__rc.dnom.a"

  static NominalImageMap for_individuals(std::span<const Symbol> individuals);
  static NominalImageMap for_kb(const KnowledgeBase& kb);
};

class NotNominalSafe : public std::runtime_error {
public:
  explicit NotNominalSafe(std::string axiom_text);
  std::string axiom;
};

// Replaces every classical nominal {a} by its image atom. Input must be free
// of defeasible nominals (map through the {}-image first).
Concept n_translate(const Concept& c, const NominalImageMap& m);
StrictGci n_translate(const StrictGci& ax, const NominalImageMap& m);
DefeasibleGci n_translate(const DefeasibleGci& ax, const NominalImageMap& m);
KnowledgeBase n_translate(const KnowledgeBase& kb, const NominalImageMap& m);

// {a} -> <a> and back; the two are mutually inverse.
StrictGci defeasibilize(const StrictGci& ax);
DefeasibleGci defeasibilize(const DefeasibleGci& ax);
KnowledgeBase defeasibilize(const KnowledgeBase& kb);
StrictGci classicalize(const StrictGci& ax);
DefeasibleGci classicalize(const DefeasibleGci& ax);
KnowledgeBase classicalize(const KnowledgeBase& kb);

// Replaces every defeasible nominal <a> by its image atom, yielding plain
// EL-bot input for the closure engines. Classical nominals must be gone.
Concept encode_def_nominals(const Concept& c, const NominalImageMap& m);
StrictGci encode_def_nominals(const StrictGci& ax, const NominalImageMap& m);
DefeasibleGci encode_def_nominals(const DefeasibleGci& ax, const NominalImageMap& m);
KnowledgeBase encode_def_nominals(const KnowledgeBase& kb, const NominalImageMap& m);

// Classical subsumption over a nominal-safe knowledge base, decided on the
// image translation after the ranking absorbed the strict content hidden in
// the DBox. Throws NotNominalSafe when the KB or query is not safe.
bool strict_entails_nominal_safe(const KnowledgeBase& kb, const StrictGci& query,
                                 TestCounter* counter = nullptr);

enum class Closure { RationalClosure, Inheritance };

// Defeasible subsumption with defeasible nominals: individuals are read
// prototypically, i.e. <a> behaves as an atom naming the most typical
// instantiations of a. Classical {a} in the query is rejected with guidance.
bool defeasible_entails_nominal_safe(const KnowledgeBase& kb, const DefeasibleGci& query,
                                     Closure closure, TestCounter* counter = nullptr);

// Rank of an n-safe concept under the defeasible-nominal encoding.
Rank rank_of_nominal_safe(const KnowledgeBase& kb, const Concept& c,
                          TestCounter* counter = nullptr);

// Per-individual unsatisfiability of the image atom over the strict part of
// the {}-image: a true entry proves the original ontology unsatisfiable.
std::vector<std::pair<Symbol, bool>> individual_unsat_report(const KnowledgeBase& kb,
                                                             TestCounter* counter = nullptr);

}  // namespace elrc

#endif
