#include <doctest.h>

#include <map>

#include "elrc/rational.hpp"
#include "elrc/parser.hpp"
#include "generators.hpp"

using namespace elrc;

TEST_CASE("bot-left axioms vanish") {
  FreshNameSource defs(FreshNameSource::Space::Defn);
  NameMap names;
  std::vector<StrictGci> t = {{Concept::bot(), Concept::atom("D")}};
  CHECK(normalize_tbox(t, defs, names).empty());
}

TEST_CASE("already normal axioms pass through") {
  FreshNameSource defs(FreshNameSource::Space::Defn);
  NameMap names;
  std::vector<StrictGci> t = {parse_strict_axiom("A <= B")};
  NormalTBox out = normalize_tbox(t, defs, names);
  REQUIRE(out.size() == 1);
  CHECK(to_gci(out[0]) == t[0]);
  CHECK(names.definitions().empty());
}

TEST_CASE("a conjunctive left side with an existential operand splits once") {
  FreshNameSource defs(FreshNameSource::Space::Defn);
  NameMap names;
  std::vector<StrictGci> t = {parse_strict_axiom("some hasN. top & NotN <= bot")};
  NormalTBox out = normalize_tbox(t, defs, names);
  const Concept has_n = Concept::exists("hasN", Concept::top());
  REQUIRE(names.has(has_n));
  Symbol a1 = *names.lookup(has_n);
  std::vector<StrictGci> expect = {
      {has_n, Concept::atom(a1)},
      {Concept::conj({Concept::atom(a1), Concept::atom("NotN")}), Concept::bot()},
  };
  normalize_set(expect);
  CHECK(to_gcis(out) == expect);
}

TEST_CASE("the red-blood-cell base normalizes to the expected shape") {
  KnowledgeBase kb = parse_kb({R"(
tbox:
  BRBC <= MRBC
  ARBC <= VRBC
  MRBC <= VRBC
  some hasN. top & NotN <= bot
dbox:
  VRBC <~ some hasCM. top
  VRBC <~ some hasN. top
  MRBC <~ NotN
)"});
  FreshNameSource defs(FreshNameSource::Space::Defn);
  NormalizedKb n = normalize_kb(kb, defs);

  const Concept has_n = Concept::exists("hasN", Concept::top());
  const Concept has_cm = Concept::exists("hasCM", Concept::top());
  REQUIRE(n.names.has(has_n));
  REQUIRE(n.names.has(has_cm));
  Symbol a1 = *n.names.lookup(has_n);
  Symbol a2 = *n.names.lookup(has_cm);

  std::vector<StrictGci> expect_t = {
      parse_strict_axiom("BRBC <= MRBC"),
      parse_strict_axiom("ARBC <= VRBC"),
      parse_strict_axiom("MRBC <= VRBC"),
      {has_n, Concept::atom(a1)},
      {Concept::atom(a1), has_n},
      {has_cm, Concept::atom(a2)},
      {Concept::atom(a2), has_cm},
      {Concept::conj({Concept::atom(a1), Concept::atom("NotN")}), Concept::bot()},
  };
  normalize_set(expect_t);
  CHECK(n.tbox == expect_t);

  std::vector<DefeasibleGci> expect_d = {
      {Concept::atom("VRBC"), Concept::atom(a2)},
      {Concept::atom("VRBC"), Concept::atom(a1)},
      {Concept::atom("MRBC"), Concept::atom("NotN")},
  };
  normalize_set(expect_d);
  std::vector<DefeasibleGci> got_d = n.dbox;
  normalize_set(got_d);
  CHECK(got_d == expect_d);

  // origin stays aligned with the atomized axioms
  REQUIRE(n.origin.size() == n.dbox.size());
  for (std::size_t i = 0; i < n.dbox.size(); ++i) CHECK(n.origin[i].lhs == n.dbox[i].lhs);
}

TEST_CASE("atomic defeasible sides are reused, not renamed") {
  KnowledgeBase kb({}, {parse_defeasible_axiom("A <~ B")});
  FreshNameSource defs(FreshNameSource::Space::Defn);
  NormalizedKb n = normalize_kb(kb, defs);
  CHECK(n.tbox.empty());
  CHECK(n.dbox == kb.dbox());
  CHECK(n.names.definitions().empty());

  NormalizedKb empty = normalize_kb(KnowledgeBase{}, defs);
  CHECK(empty.tbox.empty());
  CHECK(empty.dbox.empty());
}

TEST_CASE("every produced axiom matches a normal shape") {
  testgen::Rng rng(19);
  testgen::Profile p;
  for (int i = 0; i < 120; ++i) {
    KnowledgeBase kb = testgen::random_kb(rng, p);
    FreshNameSource defs(FreshNameSource::Space::Defn);
    NormalizedKb n = normalize_kb(kb, defs);
    for (const auto& ax : n.tbox) CHECK(is_normal_form(ax));
    for (const auto& ax : n.dbox) {
      CHECK(ax.lhs.kind() == ConceptKind::Atom);
      CHECK(ax.rhs.kind() == ConceptKind::Atom);
    }
  }
}

TEST_CASE("normalization preserves classical entailment over the original signature") {
  testgen::Rng rng(53);
  testgen::Profile p;
  p.atoms = 4;
  p.roles = 2;
  p.tbox = 6;
  for (int i = 0; i < 80; ++i) {
    KnowledgeBase kb = testgen::random_kb(rng, p);
    FreshNameSource defs(FreshNameSource::Space::Defn);
    NameMap names;
    std::vector<StrictGci> normal = to_gcis(normalize_tbox(kb.tbox(), defs, names));
    for (int q = 0; q < 4; ++q) {
      StrictGci query{testgen::random_concept(rng, p, 2), testgen::random_concept(rng, p, 2)};
      CHECK(entails(kb.tbox(), query) == entails(normal, query));
    }
  }
}

namespace {

// Renames generated atoms to their concept's index in the (shared) sorted
// definition list, making outputs from different worklist orders comparable.
std::vector<StrictGci> canonical_rename(const std::vector<StrictGci>& axioms,
                                        const NameMap& names) {
  std::vector<Concept> defined;
  for (const auto& [atom, c] : names.definitions()) defined.push_back(c);
  std::sort(defined.begin(), defined.end(), ConceptLess{});
  std::map<Symbol, Symbol, SymbolNameLess> rename;
  for (const auto& [atom, c] : names.definitions()) {
    auto pos = std::lower_bound(defined.begin(), defined.end(), c, ConceptLess{});
    rename[atom] = intern("N" + std::to_string(pos - defined.begin()));
  }
  auto map_concept = [&](const Concept& c) {
    struct Walk {
      const std::map<Symbol, Symbol, SymbolNameLess>& rename;
      Concept operator()(const Concept& x) const {
        switch (x.kind()) {
          case ConceptKind::Atom: {
            auto it = rename.find(x.sym());
            return it == rename.end() ? x : Concept::atom(it->second);
          }
          case ConceptKind::Exists:
            return Concept::exists(x.sym(), (*this)(x.filler()));
          case ConceptKind::Conj: {
            std::vector<Concept> ops;
            for (const auto& op : x.operands()) ops.push_back((*this)(op));
            return Concept::conj(std::move(ops));
          }
          default:
            return x;
        }
      }
    };
    return Walk{rename}(c);
  };
  std::vector<StrictGci> out;
  for (const auto& ax : axioms) out.push_back({map_concept(ax.lhs), map_concept(ax.rhs)});
  normalize_set(out);
  return out;
}

}  // namespace

TEST_CASE("rewriting is confluent modulo generated names") {
  testgen::Rng rng(61);
  testgen::Profile p;
  p.atoms = 4;
  p.roles = 2;
  p.tbox = 6;
  for (int i = 0; i < 60; ++i) {
    KnowledgeBase kb = testgen::random_kb(rng, p);
    FreshNameSource defs_a(FreshNameSource::Space::Defn);
    FreshNameSource defs_b(FreshNameSource::Space::Defn);
    NameMap names_a, names_b;
    auto a = to_gcis(normalize_tbox(kb.tbox(), defs_a, names_a, RewriteOrder::Queue));
    auto b = to_gcis(normalize_tbox(kb.tbox(), defs_b, names_b, RewriteOrder::Stack));
    CHECK(canonical_rename(a, names_a) == canonical_rename(b, names_b));
  }
}

TEST_CASE("rational closure of atomic queries survives normalization") {
  testgen::Rng rng(67);
  testgen::Profile p;
  p.atoms = 4;
  p.roles = 1;
  p.tbox = 4;
  p.dbox = 4;
  for (int i = 0; i < 40; ++i) {
    KnowledgeBase kb = testgen::random_kb(rng, p);
    FreshNameSource defs(FreshNameSource::Space::Defn);
    NormalizedKb n = normalize_kb(kb, defs);
    KnowledgeBase nkb = n.kb();
    for (int q = 0; q < 3; ++q) {
      DefeasibleGci query{Concept::atom("A" + std::to_string(rng.below(p.atoms))),
                          Concept::atom("A" + std::to_string(rng.below(p.atoms)))};
      CHECK(rational_closure_entails(kb, query) == rational_closure_entails(nkb, query));
    }
  }
}

TEST_CASE("exceptionality transfers to the atomized axioms") {
  testgen::Rng rng(71);
  testgen::Profile p;
  p.atoms = 4;
  p.roles = 1;
  p.tbox = 4;
  p.dbox = 4;
  for (int i = 0; i < 40; ++i) {
    KnowledgeBase kb = testgen::random_kb(rng, p);
    FreshNameSource defs(FreshNameSource::Space::Defn);
    NormalizedKb n = normalize_kb(kb, defs);
    FreshNameSource deltas(FreshNameSource::Space::Delta);
    auto plain = exceptional(kb.tbox(), kb.dbox(), deltas);
    auto atomized = exceptional(n.tbox, n.dbox, deltas);
    // align through the origin map
    std::vector<DefeasibleGci> mapped;
    for (std::size_t k = 0; k < n.dbox.size(); ++k)
      if (std::binary_search(atomized.begin(), atomized.end(), n.dbox[k], DefeasibleGciLess{}))
        mapped.push_back(n.origin[k]);
    normalize_set(mapped);
    CHECK(mapped == plain);
  }
}
