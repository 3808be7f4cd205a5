#include "elrc/normalize.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>

namespace elrc {

namespace {

bool is_basic(const Concept& c) {
  return c.kind() == ConceptKind::Atom || c.kind() == ConceptKind::Top;
}

Symbol basic_symbol(const Concept& c) {
  if (c.kind() == ConceptKind::Top) return top_symbol();
  if (c.kind() == ConceptKind::Bot) return bot_symbol();
  assert(c.kind() == ConceptKind::Atom);
  return c.sym();
}

Concept concept_from_symbol(Symbol s) {
  if (s == top_symbol()) return Concept::top();
  if (s == bot_symbol()) return Concept::bot();
  return Concept::atom(s);
}

int compare(const NormalAxiom& a, const NormalAxiom& b) {
  if (a.shape != b.shape) return static_cast<int>(a.shape) < static_cast<int>(b.shape) ? -1 : 1;
  if (int c = compare_symbols(a.c1, b.c1); c != 0) return c;
  if (int c = compare_symbols(a.c2, b.c2); c != 0) return c;
  if (int c = compare_symbols(a.role, b.role); c != 0) return c;
  return compare_symbols(a.d, b.d);
}

void reject_nominals(const Concept& c) {
  if (contains_any_nominal(c))
    throw std::invalid_argument("normalization expects nominal-free input");
}

// A conjunction whose operands are all atoms, with exactly two of them.
bool is_binary_atomic_conj(const Concept& c) {
  if (c.kind() != ConceptKind::Conj) return false;
  const auto& ops = c.operands();
  return ops.size() == 2 && ops[0].kind() == ConceptKind::Atom && ops[1].kind() == ConceptKind::Atom;
}

bool is_exists_basic(const Concept& c) {
  return c.kind() == ConceptKind::Exists && is_basic(c.filler());
}

class Rewriter {
public:
  Rewriter(FreshNameSource& fresh, NameMap& names, RewriteOrder order)
      : fresh_(fresh), names_(names), order_(order) {}

  NormalTBox run(std::span<const StrictGci> input) {
    for (const auto& ax : input) {
      reject_nominals(ax.lhs);
      reject_nominals(ax.rhs);
      push({canonicalize(ax.lhs), canonicalize(ax.rhs)});
    }
    while (!work_.empty()) {
      StrictGci ax = order_ == RewriteOrder::Queue ? work_.front() : work_.back();
      if (order_ == RewriteOrder::Queue)
        work_.pop_front();
      else
        work_.pop_back();
      step(ax);
    }
    std::sort(out_.begin(), out_.end(), [](const NormalAxiom& a, const NormalAxiom& b) {
      return compare(a, b) < 0;
    });
    out_.erase(std::unique(out_.begin(), out_.end()), out_.end());
    return std::move(out_);
  }

private:
  void push(StrictGci ax) { work_.push_back(std::move(ax)); }

  Symbol atom_for(const Concept& c) { return names_.atom_for(c, fresh_); }

  void step(const StrictGci& ax) {
    const Concept& lhs = ax.lhs;
    const Concept& rhs = ax.rhs;

    if (lhs.kind() == ConceptKind::Bot) return;  // tautology, dropped

    // Left side first: replace complex conjuncts and complex fillers.
    if (lhs.kind() == ConceptKind::Conj) {
      const auto& ops = lhs.operands();
      for (std::size_t i = 0; i < ops.size(); ++i) {
        if (!is_basic(ops[i])) {
          Symbol a = atom_for(ops[i]);
          push({ops[i], Concept::atom(a)});
          std::vector<Concept> rest;
          rest.reserve(ops.size());
          for (std::size_t j = 0; j < ops.size(); ++j)
            rest.push_back(j == i ? Concept::atom(a) : ops[j]);
          push({Concept::conj(std::move(rest)), rhs});
          return;
        }
      }
      if (ops.size() > 2) {
        std::vector<Concept> tail(ops.begin() + 1, ops.end());
        Concept tail_conj = Concept::conj(tail);
        Symbol a = atom_for(tail_conj);
        push({tail_conj, Concept::atom(a)});
        push({Concept::conj({ops[0], Concept::atom(a)}), rhs});
        return;
      }
    } else if (lhs.kind() == ConceptKind::Exists && !is_basic(lhs.filler())) {
      Symbol a = atom_for(lhs.filler());
      push({lhs.filler(), Concept::atom(a)});
      push({Concept::exists(lhs.sym(), Concept::atom(a)), rhs});
      return;
    }

    // lhs is now basic, a binary atomic conjunction, or an existential with
    // basic filler.
    bool lhs_basic = is_basic(lhs);

    if (is_basic(rhs) || rhs.kind() == ConceptKind::Bot) {
      emit(lhs, basic_symbol(rhs));
      return;
    }
    if (is_exists_basic(rhs)) {
      if (lhs_basic) {
        out_.push_back({NormalAxiom::Shape::SubExists, basic_symbol(lhs), basic_symbol(rhs.filler()),
                        rhs.sym(), 0});
        return;
      }
      Symbol a = atom_for(lhs);  // both sides complex: route through a middle atom
      push({lhs, Concept::atom(a)});
      push({Concept::atom(a), rhs});
      return;
    }
    // rhs is complex (conjunction, or existential with complex filler).
    if (!lhs_basic) {
      Symbol a = atom_for(lhs);
      push({lhs, Concept::atom(a)});
      push({Concept::atom(a), rhs});
      return;
    }
    if (rhs.kind() == ConceptKind::Conj) {
      for (const auto& op : rhs.operands()) push({lhs, op});
      return;
    }
    assert(rhs.kind() == ConceptKind::Exists);
    Symbol a = atom_for(rhs.filler());
    push({lhs, Concept::exists(rhs.sym(), Concept::atom(a))});
    push({Concept::atom(a), rhs.filler()});
  }

  void emit(const Concept& lhs, Symbol d) {
    if (is_basic(lhs)) {
      out_.push_back({NormalAxiom::Shape::AtomSub, basic_symbol(lhs), 0, 0, d});
    } else if (is_binary_atomic_conj(lhs)) {
      out_.push_back({NormalAxiom::Shape::ConjSub, lhs.operands()[0].sym(), lhs.operands()[1].sym(),
                      0, d});
    } else {
      assert(is_exists_basic(lhs));
      out_.push_back({NormalAxiom::Shape::ExistsSub, basic_symbol(lhs.filler()), 0, lhs.sym(), d});
    }
  }

  FreshNameSource& fresh_;
  NameMap& names_;
  RewriteOrder order_;
  std::deque<StrictGci> work_;
  NormalTBox out_;
};

}  // namespace

Symbol NameMap::atom_for(const Concept& c, FreshNameSource& fresh) {
  Concept key = canonicalize(c);
  auto it = by_concept_.find(key);
  if (it != by_concept_.end()) return it->second;
  Symbol a = fresh.next();
  by_concept_.emplace(key, a);
  definitions_.emplace(a, key);
  return a;
}

std::optional<Symbol> NameMap::lookup(const Concept& c) const {
  auto it = by_concept_.find(canonicalize(c));
  if (it == by_concept_.end()) return std::nullopt;
  return it->second;
}

const Concept* NameMap::concept_of(Symbol atom) const {
  auto it = definitions_.find(atom);
  return it == definitions_.end() ? nullptr : &it->second;
}

StrictGci to_gci(const NormalAxiom& ax) {
  switch (ax.shape) {
    case NormalAxiom::Shape::AtomSub:
      return {concept_from_symbol(ax.c1), concept_from_symbol(ax.d)};
    case NormalAxiom::Shape::ConjSub:
      return {Concept::conj({concept_from_symbol(ax.c1), concept_from_symbol(ax.c2)}),
              concept_from_symbol(ax.d)};
    case NormalAxiom::Shape::ExistsSub:
      return {Concept::exists(ax.role, concept_from_symbol(ax.c1)), concept_from_symbol(ax.d)};
    case NormalAxiom::Shape::SubExists:
      return {concept_from_symbol(ax.c1), Concept::exists(ax.role, concept_from_symbol(ax.c2))};
  }
  throw std::logic_error("unknown normal shape");
}

std::vector<StrictGci> to_gcis(const NormalTBox& t) {
  std::vector<StrictGci> out;
  out.reserve(t.size());
  for (const auto& ax : t) out.push_back(to_gci(ax));
  normalize_set(out);
  return out;
}

NormalTBox normalize_tbox(std::span<const StrictGci> tbox, FreshNameSource& fresh, NameMap& names,
                          RewriteOrder order) {
  return Rewriter(fresh, names, order).run(tbox);
}

NormalizedKb normalize_kb(const KnowledgeBase& kb, FreshNameSource& fresh, RewriteOrder order) {
  NormalizedKb out;
  std::vector<StrictGci> t = kb.tbox();
  for (const auto& ax : kb.dbox()) {
    reject_nominals(ax.lhs);
    reject_nominals(ax.rhs);
    auto side_atom = [&](const Concept& side) {
      if (side.kind() == ConceptKind::Atom) return side.sym();
      Symbol a = out.names.atom_for(side, fresh);
      t.push_back({Concept::atom(a), side});
      t.push_back({side, Concept::atom(a)});
      return a;
    };
    Symbol l = side_atom(ax.lhs);
    Symbol r = side_atom(ax.rhs);
    out.dbox.push_back({Concept::atom(l), Concept::atom(r)});
    out.origin.push_back(ax);
  }
  out.tbox_normal = normalize_tbox(t, fresh, out.names, order);
  out.tbox = to_gcis(out.tbox_normal);
  return out;
}

bool is_normal_form(const StrictGci& ax) {
  const Concept& lhs = ax.lhs;
  const Concept& rhs = ax.rhs;
  bool lhs_ok = is_basic(lhs) || is_binary_atomic_conj(lhs) ||
                (lhs.kind() == ConceptKind::Exists && lhs.filler().kind() != ConceptKind::Bot &&
                 is_basic(lhs.filler()));
  if (!lhs_ok) return false;
  if (is_basic(rhs) || rhs.kind() == ConceptKind::Bot) return true;
  if (rhs.kind() == ConceptKind::Exists && is_basic(rhs.filler())) return is_basic(lhs);
  return false;
}

}  // namespace elrc
