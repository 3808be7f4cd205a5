#include "elrc/reasoner.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace elrc {

namespace {

struct Fact {
  enum class Kind { Sub, Edge } kind;
  int x;
  int a;  // Sub: superconcept column; Edge: target node
  int r;  // Edge only: role index
};

struct Bitset {
  std::vector<std::uint64_t> words;
  explicit Bitset(std::size_t bits = 0) : words((bits + 63) / 64, 0) {}
  bool test(std::size_t i) const { return (words[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
};

}  // namespace

int SaturationState::index_of(Symbol s) const {
  auto it = std::lower_bound(node_syms_.begin(), node_syms_.end(), s, SymbolNameLess{});
  if (it == node_syms_.end() || *it != s) return -1;
  return static_cast<int>(it - node_syms_.begin());
}

bool SaturationState::has_node(Symbol s) const { return index_of(s) >= 0; }

bool SaturationState::subsumed(Symbol sub, Symbol sup) const {
  if (sup == top_symbol()) return true;
  if (sub == bot_symbol()) return true;
  if (node_syms_.empty()) return sub == sup;
  int x = index_of(sub);
  // An unmentioned atom is constrained only through top: it subsumes itself
  // and whatever every concept subsumes.
  if (x < 0) return sub == sup || subsumed(top_symbol(), sup);
  std::size_t bot_col = node_syms_.size();
  const auto& row = subs_[static_cast<std::size_t>(x)];
  auto test = [&](std::size_t i) { return (row[i >> 6] >> (i & 63)) & 1u; };
  if (test(bot_col)) return true;
  if (sup == bot_symbol()) return false;
  int y = index_of(sup);
  if (y < 0) return sub == sup;
  return test(static_cast<std::size_t>(y));
}

bool SaturationState::unsat(Symbol sub) const {
  if (sub == bot_symbol()) return true;
  if (node_syms_.empty()) return false;
  int x = index_of(sub);
  if (x < 0) x = index_of(top_symbol());  // unmentioned atoms behave like top
  std::size_t bot_col = node_syms_.size();
  const auto& row = subs_[static_cast<std::size_t>(x)];
  return (row[bot_col >> 6] >> (bot_col & 63)) & 1u;
}

SaturationState saturate_impl(const NormalTBox& tbox, RewriteOrder order) {
  // Dense node space: every atom-or-top occurring anywhere, in name order.
  std::vector<Symbol> syms;
  std::vector<Symbol> role_syms;
  syms.push_back(top_symbol());
  for (const auto& ax : tbox) {
    auto add = [&syms](Symbol s) {
      if (s != bot_symbol()) syms.push_back(s);
    };
    switch (ax.shape) {
      case NormalAxiom::Shape::AtomSub: add(ax.c1); add(ax.d); break;
      case NormalAxiom::Shape::ConjSub: add(ax.c1); add(ax.c2); add(ax.d); break;
      case NormalAxiom::Shape::ExistsSub: add(ax.c1); add(ax.d); role_syms.push_back(ax.role); break;
      case NormalAxiom::Shape::SubExists: add(ax.c1); add(ax.c2); role_syms.push_back(ax.role); break;
    }
  }
  std::sort(syms.begin(), syms.end(), SymbolNameLess{});
  syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
  std::sort(role_syms.begin(), role_syms.end(), SymbolNameLess{});
  role_syms.erase(std::unique(role_syms.begin(), role_syms.end()), role_syms.end());

  const int n = static_cast<int>(syms.size());
  const int nroles = static_cast<int>(role_syms.size());
  const std::size_t bot_col = static_cast<std::size_t>(n);

  std::unordered_map<Symbol, int> id;
  id.reserve(syms.size() * 2);
  for (int i = 0; i < n; ++i) id[syms[static_cast<std::size_t>(i)]] = i;
  std::unordered_map<Symbol, int> role_id;
  for (int i = 0; i < nroles; ++i) role_id[role_syms[static_cast<std::size_t>(i)]] = i;
  auto col_of = [&](Symbol s) -> std::size_t {
    return s == bot_symbol() ? bot_col : static_cast<std::size_t>(id.at(s));
  };

  // Rule indexes.
  std::vector<std::vector<std::size_t>> sub_rules(static_cast<std::size_t>(n));      // a -> cols d
  std::vector<std::vector<std::pair<int, std::size_t>>> conj_rules(static_cast<std::size_t>(n));
  std::vector<std::vector<std::pair<int, int>>> ex_plus(static_cast<std::size_t>(n));  // a -> (r, b)
  // (r, a) -> cols d, plus a per-role view for the edge handler
  std::map<std::pair<int, int>, std::vector<std::size_t>> ex_minus;
  std::vector<std::vector<std::pair<int, const std::vector<std::size_t>*>>> ex_minus_by_role(
      static_cast<std::size_t>(nroles));
  for (const auto& ax : tbox) {
    switch (ax.shape) {
      case NormalAxiom::Shape::AtomSub:
        sub_rules[static_cast<std::size_t>(id.at(ax.c1))].push_back(col_of(ax.d));
        break;
      case NormalAxiom::Shape::ConjSub: {
        int a1 = id.at(ax.c1), a2 = id.at(ax.c2);
        conj_rules[static_cast<std::size_t>(a1)].push_back({a2, col_of(ax.d)});
        if (a1 != a2) conj_rules[static_cast<std::size_t>(a2)].push_back({a1, col_of(ax.d)});
        break;
      }
      case NormalAxiom::Shape::ExistsSub:
        ex_minus[{role_id.at(ax.role), id.at(ax.c1)}].push_back(col_of(ax.d));
        break;
      case NormalAxiom::Shape::SubExists:
        ex_plus[static_cast<std::size_t>(id.at(ax.c1))].push_back(
            {role_id.at(ax.role), id.at(ax.c2)});
        break;
    }
  }
  for (const auto& [key, targets] : ex_minus)
    ex_minus_by_role[static_cast<std::size_t>(key.first)].push_back({key.second, &targets});

  std::vector<Bitset> subs(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n) + 1));
  // edges[r]: succ and pred bitsets per node.
  std::vector<std::vector<Bitset>> succ(static_cast<std::size_t>(nroles),
                                        std::vector<Bitset>(static_cast<std::size_t>(n),
                                                            Bitset(static_cast<std::size_t>(n))));
  std::vector<std::vector<Bitset>> pred = succ;

  std::deque<Fact> work;
  std::size_t facts = 0;

  auto add_sub = [&](int x, std::size_t col) {
    if (subs[static_cast<std::size_t>(x)].test(col)) return;
    subs[static_cast<std::size_t>(x)].set(col);
    ++facts;
    work.push_back({Fact::Kind::Sub, x, static_cast<int>(col), 0});
  };
  auto add_edge = [&](int x, int r, int y) {
    if (succ[static_cast<std::size_t>(r)][static_cast<std::size_t>(x)].test(
            static_cast<std::size_t>(y)))
      return;
    succ[static_cast<std::size_t>(r)][static_cast<std::size_t>(x)].set(static_cast<std::size_t>(y));
    pred[static_cast<std::size_t>(r)][static_cast<std::size_t>(y)].set(static_cast<std::size_t>(x));
    ++facts;
    work.push_back({Fact::Kind::Edge, x, y, r});
  };

  for (int x = 0; x < n; ++x) {
    add_sub(x, static_cast<std::size_t>(x));
    add_sub(x, col_of(top_symbol()));
  }

  auto for_each_bit = [n](const Bitset& b, auto&& fn) {
    for (int i = 0; i < n; ++i)
      if (b.test(static_cast<std::size_t>(i))) fn(i);
  };

  while (!work.empty()) {
    Fact f = order == RewriteOrder::Queue ? work.front() : work.back();
    if (order == RewriteOrder::Queue)
      work.pop_front();
    else
      work.pop_back();

    if (f.kind == Fact::Kind::Sub) {
      const int x = f.x;
      const std::size_t col = static_cast<std::size_t>(f.a);
      if (col == bot_col) {
        // Everything with an edge into x is unsatisfiable too.
        for (int r = 0; r < nroles; ++r)
          for_each_bit(pred[static_cast<std::size_t>(r)][static_cast<std::size_t>(x)],
                       [&](int p) { add_sub(p, bot_col); });
        continue;
      }
      for (std::size_t d : sub_rules[col]) add_sub(x, d);
      for (auto [a2, d] : conj_rules[col])
        if (subs[static_cast<std::size_t>(x)].test(static_cast<std::size_t>(a2))) add_sub(x, d);
      for (auto [r, b] : ex_plus[col]) add_edge(x, r, b);
      // x gained a superconcept: predecessors of x may fire (ex-) for it.
      for (int r = 0; r < nroles; ++r) {
        auto it = ex_minus.find({r, static_cast<int>(col)});
        if (it == ex_minus.end()) continue;
        for_each_bit(pred[static_cast<std::size_t>(r)][static_cast<std::size_t>(x)], [&](int p) {
          for (std::size_t d : it->second) add_sub(p, d);
        });
      }
    } else {
      const int x = f.x, y = f.a, r = f.r;
      // New edge: fire (ex-) for every current superconcept of y, and (bot).
      if (subs[static_cast<std::size_t>(y)].test(bot_col)) add_sub(x, bot_col);
      for (const auto& [a, targets] : ex_minus_by_role[static_cast<std::size_t>(r)]) {
        if (!subs[static_cast<std::size_t>(y)].test(static_cast<std::size_t>(a))) continue;
        for (std::size_t d : *targets) add_sub(x, d);
      }
    }
  }

  SaturationState state;
  state.node_syms_ = std::move(syms);
  state.subs_.reserve(subs.size());
  for (auto& b : subs) state.subs_.push_back(std::move(b.words));
  state.facts_ = facts;
  return state;
}

SaturationState saturate(const NormalTBox& tbox, RewriteOrder order) {
  return saturate_impl(tbox, order);
}

bool entails(std::span<const StrictGci> tbox, const StrictGci& query, TestCounter* counter) {
  if (counter) counter->bump();

  const Concept lhs = canonicalize(query.lhs);
  const Concept rhs = canonicalize(query.rhs);
  if (contains_any_nominal(lhs) || contains_any_nominal(rhs))
    throw std::invalid_argument("classical entailment expects nominal-free queries");
  if (rhs.kind() == ConceptKind::Top) return true;
  if (lhs.kind() == ConceptKind::Bot) return true;

  // Internalize complex query sides behind fresh atoms. One inclusion per
  // side is enough: lhs_atom <= lhs and rhs <= rhs_atom make
  // lhs_atom <= rhs_atom equivalent to the original question.
  FreshNameSource internal(FreshNameSource::Space::Internal);
  std::vector<StrictGci> working(tbox.begin(), tbox.end());
  Symbol lhs_sym, rhs_sym;
  if (lhs.kind() == ConceptKind::Atom || lhs.kind() == ConceptKind::Top) {
    lhs_sym = lhs.kind() == ConceptKind::Top ? top_symbol() : lhs.sym();
  } else {
    lhs_sym = internal.next();
    working.push_back({Concept::atom(lhs_sym), lhs});
  }
  if (rhs.kind() == ConceptKind::Atom || rhs.kind() == ConceptKind::Bot) {
    rhs_sym = rhs.kind() == ConceptKind::Bot ? bot_symbol() : rhs.sym();
  } else {
    rhs_sym = internal.next();
    working.push_back({rhs, Concept::atom(rhs_sym)});
  }

  NameMap names;
  NormalTBox normal = normalize_tbox(working, internal, names);
  SaturationState state = saturate(normal);
  return state.subsumed(lhs_sym, rhs_sym);
}

}  // namespace elrc
