#include "elrc/nominals.hpp"

#include <stdexcept>

#include "elrc/parser.hpp"

namespace elrc {

NotNominalSafe::NotNominalSafe(std::string axiom_text)
    : std::runtime_error("knowledge base is not nominal safe, offending axiom: " + axiom_text),
      axiom(std::move(axiom_text)) {}

NominalImageMap NominalImageMap::for_individuals(std::span<const Symbol> individuals) {
  NominalImageMap m;
  FreshNameSource nom(FreshNameSource::Space::Nom);
  FreshNameSource dnom(FreshNameSource::Space::DefNom);
  for (Symbol a : individuals) {
    if (m.classical.count(a)) continue;
    m.classical.emplace(a, nom.for_individual(a));
    m.defeasible.emplace(a, dnom.for_individual(a));
  }
  return m;
}

NominalImageMap NominalImageMap::for_kb(const KnowledgeBase& kb) {
  return for_individuals(signature(kb).individuals);
}

namespace {

template <typename Fn>
Concept map_nominal_leaves(const Concept& c, const Fn& fn) {
  switch (c.kind()) {
    case ConceptKind::Exists:
      return Concept::exists(c.sym(), map_nominal_leaves(c.filler(), fn));
    case ConceptKind::Conj: {
      std::vector<Concept> ops;
      ops.reserve(c.operands().size());
      for (const auto& op : c.operands()) ops.push_back(map_nominal_leaves(op, fn));
      return Concept::conj(std::move(ops));
    }
    default:
      return fn(c);
  }
}

}  // namespace

Concept n_translate(const Concept& c, const NominalImageMap& m) {
  return map_nominal_leaves(c, [&m](const Concept& leaf) {
    if (leaf.kind() == ConceptKind::DefNominal)
      throw std::invalid_argument("n_translate expects the {}-image (no defeasible nominals)");
    if (leaf.kind() == ConceptKind::Nominal) return Concept::atom(m.classical.at(leaf.sym()));
    return leaf;
  });
}

StrictGci n_translate(const StrictGci& ax, const NominalImageMap& m) {
  return {n_translate(ax.lhs, m), n_translate(ax.rhs, m)};
}

DefeasibleGci n_translate(const DefeasibleGci& ax, const NominalImageMap& m) {
  return {n_translate(ax.lhs, m), n_translate(ax.rhs, m)};
}

KnowledgeBase n_translate(const KnowledgeBase& kb, const NominalImageMap& m) {
  std::vector<StrictGci> t;
  std::vector<DefeasibleGci> d;
  for (const auto& ax : kb.tbox()) t.push_back(n_translate(ax, m));
  for (const auto& ax : kb.dbox()) d.push_back(n_translate(ax, m));
  return KnowledgeBase(std::move(t), std::move(d));
}

StrictGci defeasibilize(const StrictGci& ax) {
  return {defeasibilize_concept(ax.lhs), defeasibilize_concept(ax.rhs)};
}
DefeasibleGci defeasibilize(const DefeasibleGci& ax) {
  return {defeasibilize_concept(ax.lhs), defeasibilize_concept(ax.rhs)};
}
KnowledgeBase defeasibilize(const KnowledgeBase& kb) {
  std::vector<StrictGci> t;
  std::vector<DefeasibleGci> d;
  for (const auto& ax : kb.tbox()) t.push_back(defeasibilize(ax));
  for (const auto& ax : kb.dbox()) d.push_back(defeasibilize(ax));
  return KnowledgeBase(std::move(t), std::move(d));
}

StrictGci classicalize(const StrictGci& ax) {
  return {classicalize_concept(ax.lhs), classicalize_concept(ax.rhs)};
}
DefeasibleGci classicalize(const DefeasibleGci& ax) {
  return {classicalize_concept(ax.lhs), classicalize_concept(ax.rhs)};
}
KnowledgeBase classicalize(const KnowledgeBase& kb) {
  std::vector<StrictGci> t;
  std::vector<DefeasibleGci> d;
  for (const auto& ax : kb.tbox()) t.push_back(classicalize(ax));
  for (const auto& ax : kb.dbox()) d.push_back(classicalize(ax));
  return KnowledgeBase(std::move(t), std::move(d));
}

Concept encode_def_nominals(const Concept& c, const NominalImageMap& m) {
  return map_nominal_leaves(c, [&m](const Concept& leaf) {
    if (leaf.kind() == ConceptKind::Nominal)
      throw std::invalid_argument("encode_def_nominals expects classical nominals to be gone");
    if (leaf.kind() == ConceptKind::DefNominal) return Concept::atom(m.defeasible.at(leaf.sym()));
    return leaf;
  });
}

StrictGci encode_def_nominals(const StrictGci& ax, const NominalImageMap& m) {
  return {encode_def_nominals(ax.lhs, m), encode_def_nominals(ax.rhs, m)};
}

DefeasibleGci encode_def_nominals(const DefeasibleGci& ax, const NominalImageMap& m) {
  return {encode_def_nominals(ax.lhs, m), encode_def_nominals(ax.rhs, m)};
}

KnowledgeBase encode_def_nominals(const KnowledgeBase& kb, const NominalImageMap& m) {
  std::vector<StrictGci> t;
  std::vector<DefeasibleGci> d;
  for (const auto& ax : kb.tbox()) t.push_back(encode_def_nominals(ax, m));
  for (const auto& ax : kb.dbox()) d.push_back(encode_def_nominals(ax, m));
  return KnowledgeBase(std::move(t), std::move(d));
}

namespace {

void require_nominal_safe(const KnowledgeBase& classicalized) {
  for (const auto& ax : classicalized.tbox())
    if (!is_safe_axiom(ax)) throw NotNominalSafe(to_string(ax));
  for (const auto& ax : classicalized.dbox())
    if (!is_safe_axiom(ax)) throw NotNominalSafe(to_string(ax));
}

NominalImageMap image_map_for(const KnowledgeBase& kb, const Concept& query_lhs,
                              const Concept& query_rhs) {
  Signature sig = signature(kb);
  collect_signature(query_lhs, sig);
  collect_signature(query_rhs, sig);
  finish_signature(sig);
  return NominalImageMap::for_individuals(sig.individuals);
}

}  // namespace

bool strict_entails_nominal_safe(const KnowledgeBase& kb, const StrictGci& query,
                                 TestCounter* counter) {
  KnowledgeBase image = classicalize(kb);
  require_nominal_safe(image);
  StrictGci q = classicalize(query);
  if (!is_safe_axiom(q)) throw NotNominalSafe(to_string(q));

  NominalImageMap m = image_map_for(image, q.lhs, q.rhs);
  KnowledgeBase translated = n_translate(image, m);
  Ranking r = compute_ranking(translated, counter);
  return entails(r.tstar, n_translate(q, m), counter);
}

bool defeasible_entails_nominal_safe(const KnowledgeBase& kb, const DefeasibleGci& query,
                                     Closure closure, TestCounter* counter) {
  if (contains_kind(query.lhs, ConceptKind::Nominal) ||
      contains_kind(query.rhs, ConceptKind::Nominal))
    throw std::invalid_argument(
        "a classical nominal {a} in a defeasible query has no presumptive reading here; "
        "write <a> to ask about the prototypical individual");

  KnowledgeBase image = classicalize(kb);
  require_nominal_safe(image);
  DefeasibleGci q_image = classicalize(query);
  if (!is_safe_axiom(q_image)) throw NotNominalSafe(to_string(q_image));

  NominalImageMap m = image_map_for(image, q_image.lhs, q_image.rhs);
  KnowledgeBase encoded = encode_def_nominals(defeasibilize(kb), m);
  DefeasibleGci q = encode_def_nominals(defeasibilize(query), m);
  if (closure == Closure::RationalClosure) return rational_closure_entails(encoded, q, counter);
  return inheritance_closure_entails(encoded, q, counter);
}

Rank rank_of_nominal_safe(const KnowledgeBase& kb, const Concept& c, TestCounter* counter) {
  KnowledgeBase image = classicalize(kb);
  require_nominal_safe(image);
  Concept c_image = classicalize_concept(c);
  if (!is_nsafe_concept(c_image))
    throw NotNominalSafe(to_string(c_image) + " (concept is not n-safe)");

  Signature sig = signature(image);
  collect_signature(c_image, sig);
  finish_signature(sig);
  NominalImageMap m = NominalImageMap::for_individuals(sig.individuals);

  KnowledgeBase encoded = encode_def_nominals(defeasibilize(kb), m);
  Ranking r = compute_ranking(encoded, counter);
  FreshNameSource deltas(FreshNameSource::Space::Delta);
  return rank_of_concept(r, encode_def_nominals(defeasibilize_concept(c), m), deltas, counter);
}

std::vector<std::pair<Symbol, bool>> individual_unsat_report(const KnowledgeBase& kb,
                                                             TestCounter* counter) {
  KnowledgeBase image = classicalize(kb);
  NominalImageMap m = NominalImageMap::for_kb(image);
  std::vector<StrictGci> translated;
  for (const auto& ax : image.tbox()) translated.push_back(n_translate(ax, m));

  std::vector<std::pair<Symbol, bool>> out;
  for (const auto& [individual, image_atom] : m.classical) {
    bool unsat = entails(translated, {Concept::atom(image_atom), Concept::bot()}, counter);
    out.emplace_back(individual, unsat);
  }
  return out;
}

}  // namespace elrc
