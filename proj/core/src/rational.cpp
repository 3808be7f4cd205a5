#include "elrc/rational.hpp"

#include <algorithm>

namespace elrc {

namespace {

std::vector<DefeasibleGci> set_diff(const std::vector<DefeasibleGci>& a,
                                    const std::vector<DefeasibleGci>& b) {
  std::vector<DefeasibleGci> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                      DefeasibleGciLess{});
  return out;
}

std::vector<DefeasibleGci> suffix_union(const std::vector<std::vector<DefeasibleGci>>& cells,
                                        std::size_t from) {
  std::vector<DefeasibleGci> out;
  for (std::size_t i = from; i < cells.size(); ++i)
    out.insert(out.end(), cells[i].begin(), cells[i].end());
  normalize_set(out);
  return out;
}

// Shared by the query procedures: first level at which the marked left side
// stays satisfiable, walking suffix encodings down to the empty one.
struct LevelSearch {
  bool found = false;
  std::size_t level = 0;       // meaningful when found
  TDeltaEncoding encoding;     // the encoding of that level
};

LevelSearch find_level(const Ranking& r, const Concept& c, FreshNameSource& deltas,
                       TestCounter* counter) {
  for (std::size_t i = 0; i <= r.cells.size(); ++i) {
    auto suffix = suffix_union(r.cells, i);
    TDeltaEncoding enc = build_t_delta(r.tstar, suffix, deltas);
    Concept marked = conj2(c, Concept::atom(enc.delta_atom));
    if (!entails(enc.tbox, {marked, Concept::bot()}, counter))
      return {true, i, std::move(enc)};
  }
  return {};
}

}  // namespace

std::string to_string(const Rank& r) {
  return r.is_infinite() ? "inf" : std::to_string(r.value());
}

TDeltaEncoding build_t_delta(std::span<const StrictGci> tbox,
                             std::span<const DefeasibleGci> axioms, FreshNameSource& deltas) {
  TDeltaEncoding enc;
  enc.delta_atom = deltas.next();
  enc.tbox.assign(tbox.begin(), tbox.end());
  for (const auto& ax : axioms)
    enc.tbox.push_back({conj2(ax.lhs, Concept::atom(enc.delta_atom)), ax.rhs});
  return enc;
}

std::vector<DefeasibleGci> exceptional(std::span<const StrictGci> tbox,
                                       std::span<const DefeasibleGci> axioms,
                                       FreshNameSource& deltas, TestCounter* counter) {
  std::vector<DefeasibleGci> out;
  if (axioms.empty()) return out;
  TDeltaEncoding enc = build_t_delta(tbox, axioms, deltas);
  for (const auto& ax : axioms) {
    Concept marked = conj2(ax.lhs, Concept::atom(enc.delta_atom));
    if (entails(enc.tbox, {marked, Concept::bot()}, counter)) out.push_back(ax);
  }
  normalize_set(out);
  return out;
}

Ranking compute_ranking(const KnowledgeBase& kb, TestCounter* counter) {
  Ranking r;
  r.tstar = kb.tbox();
  r.dstar = kb.dbox();
  FreshNameSource deltas(FreshNameSource::Space::Delta);

  std::vector<std::vector<DefeasibleGci>> chain;
  for (;;) {
    chain.clear();
    chain.push_back(r.dstar);
    chain.push_back(exceptional(r.tstar, chain.back(), deltas, counter));
    while (chain.back() != chain[chain.size() - 2])
      chain.push_back(exceptional(r.tstar, chain.back(), deltas, counter));

    const std::vector<DefeasibleGci>& absorbed = chain.back();
    if (absorbed.empty()) break;

    ++r.absorption_rounds;
    r.dstar = set_diff(r.dstar, absorbed);
    for (const auto& ax : absorbed) r.tstar.push_back({ax.lhs, Concept::bot()});
    normalize_set(r.tstar);
    r.infinite.insert(r.infinite.end(), absorbed.begin(), absorbed.end());
  }
  normalize_set(r.infinite);

  // Cells from the final (non-absorbing) fixpoint chain: rank j-1 axioms are
  // those exceptional j-1 times but not j times.
  std::size_t fixpoint_index = chain.size() - 2;
  for (std::size_t j = 1; j <= fixpoint_index; ++j)
    r.cells.push_back(set_diff(chain[j - 1], chain[j]));
  return r;
}

Rank rank_of_concept(const Ranking& r, const Concept& c, FreshNameSource& deltas,
                     TestCounter* counter) {
  LevelSearch s = find_level(r, canonicalize(c), deltas, counter);
  if (!s.found) return Rank::infinite();
  return Rank::finite(s.level);
}

namespace {

bool decide_defeasible(const Ranking& r, const DefeasibleGci& query, bool classical_answer,
                       TestCounter* counter, RcEngine::Verdict* verdict) {
  FreshNameSource deltas(FreshNameSource::Space::Delta);
  Concept lhs = canonicalize(query.lhs);
  Concept rhs = canonicalize(query.rhs);

  LevelSearch s = find_level(r, lhs, deltas, counter);
  if (!s.found) {
    // Exceptional at every level: fall back to the classical answer.
    if (verdict) {
      verdict->lhs_rank = Rank::infinite();
      verdict->classical = true;
      verdict->entailed = classical_answer;
    }
    return classical_answer;
  }
  Concept marked = conj2(lhs, Concept::atom(s.encoding.delta_atom));
  bool answer = entails(s.encoding.tbox, {marked, rhs}, counter);
  if (verdict) {
    verdict->lhs_rank = Rank::finite(s.level);
    verdict->decided_level = s.level;
    verdict->entailed = answer;
  }
  return answer;
}

}  // namespace

bool rational_closure_entails(const KnowledgeBase& kb, const DefeasibleGci& query,
                              TestCounter* counter) {
  if (entails(kb.tbox(), {query.lhs, query.rhs}, counter)) return true;
  Ranking r = compute_ranking(kb, counter);
  if (entails(r.tstar, {query.lhs, query.rhs}, counter)) return true;
  return decide_defeasible(r, query, /*classical_answer=*/false, counter, nullptr);
}

bool rational_closure_entails(const KnowledgeBase& kb, const StrictGci& query,
                              TestCounter* counter) {
  Ranking r = compute_ranking(kb, counter);
  return entails(r.tstar, query, counter);
}

bool is_rank_satisfiable(const KnowledgeBase& kb, TestCounter* counter) {
  Ranking r = compute_ranking(kb, counter);
  return !entails(r.tstar, {Concept::top(), Concept::bot()}, counter);
}

RcEngine::RcEngine(KnowledgeBase kb, TestCounter* counter)
    : kb_(std::move(kb)), counter_(counter) {}

const Ranking& RcEngine::ranking() {
  if (!ranking_) ranking_ = compute_ranking(kb_, counter_);
  return *ranking_;
}

bool RcEngine::entails(const DefeasibleGci& query) {
  if (elrc::entails(kb_.tbox(), {query.lhs, query.rhs}, counter_)) return true;
  const Ranking& r = ranking();
  if (elrc::entails(r.tstar, {query.lhs, query.rhs}, counter_)) return true;
  return decide_defeasible(r, query, false, counter_, nullptr);
}

bool RcEngine::entails(const StrictGci& query) {
  return elrc::entails(ranking().tstar, query, counter_);
}

Rank RcEngine::rank_of(const Concept& c) {
  FreshNameSource deltas(FreshNameSource::Space::Delta);
  return rank_of_concept(ranking(), c, deltas, counter_);
}

RcEngine::Verdict RcEngine::explain(const DefeasibleGci& query) {
  Verdict v;
  if (elrc::entails(kb_.tbox(), {query.lhs, query.rhs}, counter_)) {
    v.entailed = true;
    v.classical = true;
    v.lhs_rank = rank_of(query.lhs);
    return v;
  }
  const Ranking& r = ranking();
  bool classical_after = elrc::entails(r.tstar, {query.lhs, query.rhs}, counter_);
  if (classical_after) {
    v.entailed = true;
    v.classical = true;
    v.lhs_rank = rank_of(query.lhs);
    return v;
  }
  decide_defeasible(r, query, false, counter_, &v);
  return v;
}

}  // namespace elrc
