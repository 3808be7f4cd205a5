#include "elrc/axioms.hpp"

#include <algorithm>
#include <stdexcept>

namespace elrc {

int compare(const StrictGci& a, const StrictGci& b) {
  if (int c = compare(a.lhs, b.lhs); c != 0) return c;
  return compare(a.rhs, b.rhs);
}

int compare(const DefeasibleGci& a, const DefeasibleGci& b) {
  if (int c = compare(a.lhs, b.lhs); c != 0) return c;
  return compare(a.rhs, b.rhs);
}

void normalize_set(std::vector<StrictGci>& axioms) {
  std::sort(axioms.begin(), axioms.end(), StrictGciLess{});
  axioms.erase(std::unique(axioms.begin(), axioms.end()), axioms.end());
}

void normalize_set(std::vector<DefeasibleGci>& axioms) {
  std::sort(axioms.begin(), axioms.end(), DefeasibleGciLess{});
  axioms.erase(std::unique(axioms.begin(), axioms.end()), axioms.end());
}

KnowledgeBase::KnowledgeBase(std::vector<StrictGci> tbox, std::vector<DefeasibleGci> dbox)
    : tbox_(std::move(tbox)), dbox_(std::move(dbox)) {
  for (auto& ax : tbox_) ax = {canonicalize(ax.lhs), canonicalize(ax.rhs)};
  for (auto& ax : dbox_) ax = {canonicalize(ax.lhs), canonicalize(ax.rhs)};
  normalize_set(tbox_);
  normalize_set(dbox_);
}

void collect_signature(const Concept& c, Signature& out) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bot:
      return;
    case ConceptKind::Atom:
      out.atoms.push_back(c.sym());
      return;
    case ConceptKind::Nominal:
    case ConceptKind::DefNominal:
      out.individuals.push_back(c.sym());
      return;
    case ConceptKind::Exists:
      out.roles.push_back(c.sym());
      collect_signature(c.filler(), out);
      return;
    case ConceptKind::Conj:
      for (const auto& op : c.operands()) collect_signature(op, out);
      return;
  }
}

void finish_signature(Signature& sig) {
  auto tidy = [](std::vector<Symbol>& v) {
    std::sort(v.begin(), v.end(), SymbolNameLess{});
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  tidy(sig.atoms);
  tidy(sig.roles);
  tidy(sig.individuals);
}

Signature signature(const KnowledgeBase& kb) {
  Signature sig;
  for (const auto& ax : kb.tbox()) {
    collect_signature(ax.lhs, sig);
    collect_signature(ax.rhs, sig);
  }
  for (const auto& ax : kb.dbox()) {
    collect_signature(ax.lhs, sig);
    collect_signature(ax.rhs, sig);
  }
  finish_signature(sig);
  return sig;
}

namespace {

bool safe_rec(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bot:
    case ConceptKind::Atom:
      return true;
    case ConceptKind::Nominal:
      return false;  // bare nominal is only n-safe
    case ConceptKind::DefNominal:
      throw std::invalid_argument("safety of a term with defeasible nominals is judged on its {}-image");
    case ConceptKind::Exists:
      if (c.filler().kind() == ConceptKind::Nominal) return true;
      return safe_rec(c.filler());
    case ConceptKind::Conj:
      for (const auto& op : c.operands())
        if (!safe_rec(op)) return false;
      return true;
  }
  return true;
}

}  // namespace

bool is_safe_concept(const Concept& c) { return safe_rec(c); }

bool is_nsafe_concept(const Concept& c) {
  if (c.kind() == ConceptKind::Nominal) return true;
  if (c.kind() == ConceptKind::DefNominal)
    throw std::invalid_argument("safety of a term with defeasible nominals is judged on its {}-image");
  return safe_rec(c);
}

bool is_safe_axiom(const StrictGci& ax) {
  return is_nsafe_concept(classicalize_concept(ax.lhs)) &&
         is_safe_concept(classicalize_concept(ax.rhs));
}

bool is_safe_axiom(const DefeasibleGci& ax) {
  return is_nsafe_concept(classicalize_concept(ax.lhs)) &&
         is_safe_concept(classicalize_concept(ax.rhs));
}

bool is_nominal_safe_kb(const KnowledgeBase& kb) {
  for (const auto& ax : kb.tbox())
    if (!is_safe_axiom(ax)) return false;
  for (const auto& ax : kb.dbox())
    if (!is_safe_axiom(ax)) return false;
  return true;
}

std::vector<SafetyViolation> safety_violations(const KnowledgeBase& kb) {
  std::vector<SafetyViolation> out;
  auto reason = [](const Concept& lhs, const Concept& rhs) {
    if (!is_nsafe_concept(classicalize_concept(lhs)))
      return std::string("left-hand side is not n-safe (nominal outside an existential filler)");
    if (rhs.kind() == ConceptKind::Nominal || rhs.kind() == ConceptKind::DefNominal)
      return std::string("right-hand side is a bare nominal");
    return std::string("right-hand side is not safe (nominal outside an existential filler)");
  };
  for (const auto& ax : kb.tbox())
    if (!is_safe_axiom(ax)) out.push_back({true, ax, {}, reason(ax.lhs, ax.rhs)});
  for (const auto& ax : kb.dbox())
    if (!is_safe_axiom(ax)) out.push_back({false, {}, ax, reason(ax.lhs, ax.rhs)});
  return out;
}

}  // namespace elrc
