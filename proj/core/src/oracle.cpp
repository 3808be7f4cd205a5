#include "elrc/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace elrc {

bool RankedInterpretation::in_atom(Symbol atom, int elem) const {
  auto it = atom_ext.find(atom);
  if (it == atom_ext.end()) return false;
  return (it->second >> elem) & 1u;
}

bool RankedInterpretation::related(Symbol role, int from, int to) const {
  auto it = role_ext.find(role);
  if (it == role_ext.end()) return false;
  return (it->second[static_cast<std::size_t>(from)] >> to) & 1u;
}

bool holds_at(const RankedInterpretation& r, const Concept& c, int elem) {
  switch (c.kind()) {
    case ConceptKind::Top:
      return true;
    case ConceptKind::Bot:
      return false;
    case ConceptKind::Atom:
      return r.in_atom(c.sym(), elem);
    case ConceptKind::Nominal:
    case ConceptKind::DefNominal:
      throw std::invalid_argument("the oracle expects nominal-free input");
    case ConceptKind::Conj:
      for (const auto& op : c.operands())
        if (!holds_at(r, op, elem)) return false;
      return true;
    case ConceptKind::Exists:
      for (int y = 0; y < r.domain_size; ++y)
        if (r.related(c.sym(), elem, y) && holds_at(r, c.filler(), y)) return true;
      return false;
  }
  return false;
}

bool satisfies(const RankedInterpretation& r, const StrictGci& ax) {
  for (int x = 0; x < r.domain_size; ++x)
    if (holds_at(r, ax.lhs, x) && !holds_at(r, ax.rhs, x)) return false;
  return true;
}

bool satisfies(const RankedInterpretation& r, const DefeasibleGci& ax) {
  int min_height = -1;
  for (int x = 0; x < r.domain_size; ++x) {
    if (!holds_at(r, ax.lhs, x)) continue;
    if (min_height < 0 || r.height[static_cast<std::size_t>(x)] < min_height)
      min_height = r.height[static_cast<std::size_t>(x)];
  }
  if (min_height < 0) return true;  // empty extension
  for (int x = 0; x < r.domain_size; ++x)
    if (holds_at(r, ax.lhs, x) && r.height[static_cast<std::size_t>(x)] == min_height &&
        !holds_at(r, ax.rhs, x))
      return false;
  return true;
}

bool satisfies(const RankedInterpretation& r, const KnowledgeBase& kb) {
  for (const auto& ax : kb.tbox())
    if (!satisfies(r, ax)) return false;
  for (const auto& ax : kb.dbox())
    if (!satisfies(r, ax)) return false;
  return true;
}

namespace {

// Contiguous height functions over d elements, max value capped.
std::vector<std::vector<int>> height_functions(int d, int max_height) {
  std::vector<std::vector<int>> out;
  std::vector<int> h(static_cast<std::size_t>(d), 0);
  int limit = std::min(d - 1, max_height);
  for (;;) {
    int top = *std::max_element(h.begin(), h.end());
    bool contiguous = true;
    for (int v = 0; v <= top && contiguous; ++v)
      contiguous = std::find(h.begin(), h.end(), v) != h.end();
    if (contiguous) out.push_back(h);
    int i = d - 1;
    while (i >= 0 && h[static_cast<std::size_t>(i)] == limit) {
      h[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++h[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace

void enumerate_models(const KnowledgeBase& kb, const OracleBudget& budget,
                      const std::function<bool(const RankedInterpretation&)>& on_model) {
  Signature sig = signature(kb);
  if (!sig.individuals.empty())
    throw std::invalid_argument("the oracle expects nominal-free input");

  const int atom_count = static_cast<int>(sig.atoms.size());
  const int role_count = static_cast<int>(sig.roles.size());
  std::uint64_t visited = 0;

  for (int d = 1; d <= budget.max_domain; ++d) {
    const std::uint32_t elem_mask_count = 1u << d;
    auto heights = height_functions(d, budget.max_height);

    // One counter drives each enumeration axis as a mixed-radix number.
    std::uint64_t atom_axes = 1;
    for (int i = 0; i < atom_count; ++i) atom_axes *= elem_mask_count;
    std::uint64_t role_axes = 1;
    for (int i = 0; i < role_count * d; ++i) role_axes *= elem_mask_count;

    for (std::uint64_t ac = 0; ac < atom_axes; ++ac) {
      RankedInterpretation r;
      r.domain_size = d;
      std::uint64_t a = ac;
      for (Symbol atom : sig.atoms) {
        r.atom_ext[atom] = static_cast<std::uint32_t>(a % elem_mask_count);
        a /= elem_mask_count;
      }
      for (std::uint64_t rc = 0; rc < role_axes; ++rc) {
        std::uint64_t rr = rc;
        for (Symbol role : sig.roles) {
          auto& rows = r.role_ext[role];
          rows.assign(static_cast<std::size_t>(d), 0);
          for (int x = 0; x < d; ++x) {
            rows[static_cast<std::size_t>(x)] = static_cast<std::uint32_t>(rr % elem_mask_count);
            rr /= elem_mask_count;
          }
        }
        for (const auto& h : heights) {
          if (++visited > budget.max_candidates) throw BudgetExceeded();
          r.height = h;
          if (!satisfies(r, kb)) continue;
          if (!on_model(r)) return;
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Type abstraction. An element is summarized by one bit per atom plus one
// bit per existential subconcept occurring anywhere in the input. Concept
// evaluation is pointwise over these bits; a bit vector is realizable when
// some choice of successors inside the tuple matches its existential claims.
// Every concrete model induces a realizable bit tuple with identical concept
// evaluations, and every realizable tuple is induced by some concrete model,
// so exhaustive search over tuples is exhaustive over models.
// ---------------------------------------------------------------------------

namespace {

class TypeEngine {
public:
  TypeEngine(std::span<const StrictGci> strict, std::span<const DefeasibleGci> defeasible,
             std::span<const Concept> extra) {
    Signature sig;
    for (const auto& ax : strict) {
      collect_signature(ax.lhs, sig);
      collect_signature(ax.rhs, sig);
      collect_exists(ax.lhs);
      collect_exists(ax.rhs);
    }
    for (const auto& ax : defeasible) {
      collect_signature(ax.lhs, sig);
      collect_signature(ax.rhs, sig);
      collect_exists(ax.lhs);
      collect_exists(ax.rhs);
    }
    for (const auto& c : extra) {
      collect_signature(c, sig);
      collect_exists(c);
    }
    finish_signature(sig);
    if (!sig.individuals.empty())
      throw std::invalid_argument("the oracle expects nominal-free input");
    atoms_ = sig.atoms;
    std::sort(exists_.begin(), exists_.end(), ConceptLess{});
    exists_.erase(std::unique(exists_.begin(), exists_.end()), exists_.end());
    if (atoms_.size() + exists_.size() > 31)
      throw BudgetExceeded();  // more bits than the abstraction is meant for
  }

  using State = std::uint32_t;

  std::uint32_t state_count() const {
    return 1u << (atoms_.size() + exists_.size());
  }

  bool eval(State s, const Concept& c) const {
    switch (c.kind()) {
      case ConceptKind::Top:
        return true;
      case ConceptKind::Bot:
        return false;
      case ConceptKind::Atom: {
        auto it = std::lower_bound(atoms_.begin(), atoms_.end(), c.sym(), SymbolNameLess{});
        if (it == atoms_.end() || *it != c.sym()) return false;
        return (s >> (it - atoms_.begin())) & 1u;
      }
      case ConceptKind::Conj:
        for (const auto& op : c.operands())
          if (!eval(s, op)) return false;
        return true;
      case ConceptKind::Exists: {
        auto it = std::lower_bound(exists_.begin(), exists_.end(), c, ConceptLess{});
        assert(it != exists_.end() && *it == c);
        return (s >> (atoms_.size() + static_cast<std::size_t>(it - exists_.begin()))) & 1u;
      }
      default:
        throw std::invalid_argument("the oracle expects nominal-free input");
    }
  }

  // States satisfying every strict axiom pointwise.
  std::vector<State> valid_states(std::span<const StrictGci> strict) const {
    std::vector<State> out;
    for (State s = 0; s < state_count(); ++s) {
      bool ok = true;
      for (const auto& ax : strict)
        if (eval(s, ax.lhs) && !eval(s, ax.rhs)) {
          ok = false;
          break;
        }
      if (ok) out.push_back(s);
    }
    return out;
  }

  // Existential bits of every element must be witnessable by one successor
  // set per role drawn from the tuple.
  bool realizable(std::span<const State> tuple) const {
    for (State s : tuple) {
      for (std::size_t i = 0; i < exists_.size(); ++i) {
        if (!((s >> (atoms_.size() + i)) & 1u)) continue;
        const Concept& ex = exists_[i];
        bool witnessed = false;
        for (State y : tuple) {
          if (!eval(y, ex.filler())) continue;
          // y must not satisfy any same-role filler claimed absent at s.
          bool poisons = false;
          for (std::size_t j = 0; j < exists_.size() && !poisons; ++j) {
            if (((s >> (atoms_.size() + j)) & 1u)) continue;
            if (exists_[j].sym() != ex.sym()) continue;
            poisons = eval(y, exists_[j].filler());
          }
          if (!poisons) {
            witnessed = true;
            break;
          }
        }
        if (!witnessed) return false;
      }
    }
    return true;
  }

private:
  void collect_exists(const Concept& c) {
    switch (c.kind()) {
      case ConceptKind::Exists:
        exists_.push_back(c);
        collect_exists(c.filler());
        return;
      case ConceptKind::Conj:
        for (const auto& op : c.operands()) collect_exists(op);
        return;
      default:
        return;
    }
  }

  std::vector<Symbol> atoms_;
  std::vector<Concept> exists_;
};

// Enumerates state multisets of size d (as non-decreasing index sequences;
// every predicate applied downstream is permutation-invariant), calling fn on
// each realizable one. fn returning true stops the walk (answer found).
template <typename Fn>
bool walk_tuples(const TypeEngine& engine, const std::vector<TypeEngine::State>& states, int d,
                 std::uint64_t& visited, std::uint64_t cap, const Fn& fn) {
  std::vector<TypeEngine::State> tuple(static_cast<std::size_t>(d), 0);
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  if (states.empty()) return false;
  for (;;) {
    for (int i = 0; i < d; ++i)
      tuple[static_cast<std::size_t>(i)] = states[idx[static_cast<std::size_t>(i)]];
    if (++visited > cap) throw BudgetExceeded();
    if (engine.realizable(tuple) && fn(tuple)) return true;
    int i = d - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] + 1 == states.size()) --i;
    if (i < 0) return false;
    std::size_t next = idx[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j < d; ++j) idx[static_cast<std::size_t>(j)] = next;
  }
}

}  // namespace

bool exceptional_bounded(const KnowledgeBase& kb, const Concept& c, const OracleBudget& budget) {
  Concept goal = canonicalize(c);
  TypeEngine engine(kb.tbox(), kb.dbox(), std::span<const Concept>(&goal, 1));
  std::vector<TypeEngine::State> states = engine.valid_states(kb.tbox());
  std::uint64_t visited = 0;

  for (int d = 1; d <= budget.max_domain; ++d) {
    auto heights = height_functions(d, budget.max_height);
    bool witness = walk_tuples(
        engine, states, d, visited, budget.max_candidates,
        [&](const std::vector<TypeEngine::State>& tuple) {
          for (const auto& h : heights) {
            bool model = true;
            for (const auto& ax : kb.dbox()) {
              int min_height = -1;
              for (int x = 0; x < d && model; ++x) {
                if (!engine.eval(tuple[static_cast<std::size_t>(x)], ax.lhs)) continue;
                if (min_height < 0 || h[static_cast<std::size_t>(x)] < min_height)
                  min_height = h[static_cast<std::size_t>(x)];
              }
              if (min_height < 0) continue;
              for (int x = 0; x < d && model; ++x)
                if (engine.eval(tuple[static_cast<std::size_t>(x)], ax.lhs) &&
                    h[static_cast<std::size_t>(x)] == min_height &&
                    !engine.eval(tuple[static_cast<std::size_t>(x)], ax.rhs))
                  model = false;
              if (!model) break;
            }
            if (!model) continue;
            for (int x = 0; x < d; ++x)
              if (h[static_cast<std::size_t>(x)] == 0 &&
                  engine.eval(tuple[static_cast<std::size_t>(x)], goal))
                return true;  // layer-0 witness: not exceptional
          }
          return false;
        });
    if (witness) return false;
  }
  return true;
}

bool classical_countermodel_exists(std::span<const StrictGci> tbox, const StrictGci& query,
                                   const OracleBudget& budget) {
  Concept lhs = canonicalize(query.lhs);
  Concept rhs = canonicalize(query.rhs);
  std::vector<Concept> extra = {lhs, rhs};
  TypeEngine engine(tbox, {}, extra);
  std::vector<TypeEngine::State> states = engine.valid_states(tbox);
  std::uint64_t visited = 0;

  for (int d = 1; d <= budget.max_domain; ++d) {
    bool found = walk_tuples(engine, states, d, visited, budget.max_candidates,
                             [&](const std::vector<TypeEngine::State>& tuple) {
                               for (TypeEngine::State s : tuple)
                                 if (engine.eval(s, lhs) && !engine.eval(s, rhs)) return true;
                               return false;
                             });
    if (found) return true;
  }
  return false;
}

}  // namespace elrc
