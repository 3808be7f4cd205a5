#include "elrc/concepts.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace elrc {

struct Concept::Node {
  ConceptKind kind;
  Symbol sym = 0;
  std::vector<Concept> kids;  // Exists: one filler; Conj: >= 2 operands
};

namespace {

int kind_rank(ConceptKind k) {
  switch (k) {
    case ConceptKind::Top: return 0;
    case ConceptKind::Bot: return 1;
    case ConceptKind::Atom: return 2;
    case ConceptKind::Nominal: return 3;
    case ConceptKind::DefNominal: return 4;
    case ConceptKind::Exists: return 5;
    case ConceptKind::Conj: return 6;
  }
  return 7;
}

}  // namespace

Concept Concept::top() {
  static const Concept t{std::make_shared<const Node>(Node{ConceptKind::Top, 0, {}})};
  return t;
}

Concept Concept::bot() {
  static const Concept b{std::make_shared<const Node>(Node{ConceptKind::Bot, 0, {}})};
  return b;
}

Concept::Concept() : node_(top().node_) {}

Concept Concept::atom(Symbol name) {
  return Concept(std::make_shared<const Node>(Node{ConceptKind::Atom, name, {}}));
}
Concept Concept::atom(std::string_view name) { return atom(intern(name)); }

Concept Concept::nominal(Symbol individual) {
  return Concept(std::make_shared<const Node>(Node{ConceptKind::Nominal, individual, {}}));
}
Concept Concept::nominal(std::string_view individual) { return nominal(intern(individual)); }

Concept Concept::def_nominal(Symbol individual) {
  return Concept(std::make_shared<const Node>(Node{ConceptKind::DefNominal, individual, {}}));
}
Concept Concept::def_nominal(std::string_view individual) { return def_nominal(intern(individual)); }

Concept Concept::exists(Symbol role, Concept filler) {
  return Concept(std::make_shared<const Node>(Node{ConceptKind::Exists, role, {std::move(filler)}}));
}
Concept Concept::exists(std::string_view role, Concept filler) {
  return exists(intern(role), std::move(filler));
}

Concept Concept::conj(std::vector<Concept> operands) {
  std::vector<Concept> flat;
  flat.reserve(operands.size());
  for (auto& op : operands) {
    switch (op.kind()) {
      case ConceptKind::Top:
        break;  // neutral element
      case ConceptKind::Bot:
        return bot();  // absorbing
      case ConceptKind::Conj:
        for (const auto& k : op.operands()) flat.push_back(k);
        break;
      default:
        flat.push_back(std::move(op));
    }
  }
  std::sort(flat.begin(), flat.end(), ConceptLess{});
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) return top();
  if (flat.size() == 1) return flat.front();
  return Concept(std::make_shared<const Node>(Node{ConceptKind::Conj, 0, std::move(flat)}));
}

ConceptKind Concept::kind() const { return node_->kind; }

Symbol Concept::sym() const {
  assert(kind() == ConceptKind::Atom || kind() == ConceptKind::Nominal ||
         kind() == ConceptKind::DefNominal || kind() == ConceptKind::Exists);
  return node_->sym;
}

const Concept& Concept::filler() const {
  assert(kind() == ConceptKind::Exists);
  return node_->kids.front();
}

const std::vector<Concept>& Concept::operands() const {
  assert(kind() == ConceptKind::Conj);
  return node_->kids;
}

bool Concept::operator==(const Concept& other) const { return compare(*this, other) == 0; }

int compare(const Concept& a, const Concept& b) {
  int ka = kind_rank(a.kind());
  int kb = kind_rank(b.kind());
  if (ka != kb) return ka < kb ? -1 : 1;
  switch (a.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bot:
      return 0;
    case ConceptKind::Atom:
    case ConceptKind::Nominal:
    case ConceptKind::DefNominal:
      return compare_symbols(a.sym(), b.sym());
    case ConceptKind::Exists: {
      if (int c = compare_symbols(a.sym(), b.sym()); c != 0) return c;
      return compare(a.filler(), b.filler());
    }
    case ConceptKind::Conj: {
      const auto& xs = a.operands();
      const auto& ys = b.operands();
      std::size_t n = std::min(xs.size(), ys.size());
      for (std::size_t i = 0; i < n; ++i)
        if (int c = compare(xs[i], ys[i]); c != 0) return c;
      if (xs.size() != ys.size()) return xs.size() < ys.size() ? -1 : 1;
      return 0;
    }
  }
  return 0;
}

Concept canonicalize(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bot:
    case ConceptKind::Atom:
    case ConceptKind::Nominal:
    case ConceptKind::DefNominal:
      return c;
    case ConceptKind::Exists:
      return Concept::exists(c.sym(), canonicalize(c.filler()));
    case ConceptKind::Conj: {
      std::vector<Concept> ops;
      ops.reserve(c.operands().size());
      for (const auto& op : c.operands()) ops.push_back(canonicalize(op));
      return Concept::conj(std::move(ops));
    }
  }
  return c;
}

bool contains_kind(const Concept& c, ConceptKind k) {
  if (c.kind() == k) return true;
  switch (c.kind()) {
    case ConceptKind::Exists:
      return contains_kind(c.filler(), k);
    case ConceptKind::Conj:
      for (const auto& op : c.operands())
        if (contains_kind(op, k)) return true;
      return false;
    default:
      return false;
  }
}

bool contains_any_nominal(const Concept& c) {
  return contains_kind(c, ConceptKind::Nominal) || contains_kind(c, ConceptKind::DefNominal);
}

namespace {

template <typename Fn>
Concept map_leaves(const Concept& c, const Fn& fn) {
  switch (c.kind()) {
    case ConceptKind::Exists:
      return Concept::exists(c.sym(), map_leaves(c.filler(), fn));
    case ConceptKind::Conj: {
      std::vector<Concept> ops;
      ops.reserve(c.operands().size());
      for (const auto& op : c.operands()) ops.push_back(map_leaves(op, fn));
      return Concept::conj(std::move(ops));
    }
    default:
      return fn(c);
  }
}

}  // namespace

Concept defeasibilize_concept(const Concept& c) {
  return map_leaves(c, [](const Concept& leaf) {
    if (leaf.kind() == ConceptKind::Nominal) return Concept::def_nominal(leaf.sym());
    return leaf;
  });
}

Concept classicalize_concept(const Concept& c) {
  return map_leaves(c, [](const Concept& leaf) {
    if (leaf.kind() == ConceptKind::DefNominal) return Concept::nominal(leaf.sym());
    return leaf;
  });
}

Concept conj2(const Concept& a, const Concept& b) { return Concept::conj({a, b}); }

}  // namespace elrc
