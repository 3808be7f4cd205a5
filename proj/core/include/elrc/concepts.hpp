#ifndef ELRC_CONCEPTS_HPP
#define ELRC_CONCEPTS_HPP

#include <memory>
#include <vector>

#include "elrc/symbols.hpp"

namespace elrc {

enum class ConceptKind : std::uint8_t {
  Top,
  Bot,
  Atom,
  Nominal,     // {a}
  DefNominal,  // <a>
  Exists,      // some r. C
  Conj,        // C1 & ... & Cn, n >= 2
};

// Immutable concept term with shared structure. Conjunctions are kept
// canonical by construction: flattened, operand-sorted, duplicate-free,
// with "top" operands dropped and "bot" absorbing. Structural equality on
// canonical terms is therefore order-independent.
class Concept {
public:
  Concept();  // top

  static Concept top();
  static Concept bot();
  static Concept atom(Symbol name);
  static Concept atom(std::string_view name);
  static Concept nominal(Symbol individual);
  static Concept nominal(std::string_view individual);
  static Concept def_nominal(Symbol individual);
  static Concept def_nominal(std::string_view individual);
  static Concept exists(Symbol role, Concept filler);
  static Concept exists(std::string_view role, Concept filler);
  static Concept conj(std::vector<Concept> operands);

  ConceptKind kind() const;
  bool is(ConceptKind k) const { return kind() == k; }

  Symbol sym() const;                           // Atom name, Exists role, (Def)Nominal individual
  const Concept& filler() const;                // Exists only
  const std::vector<Concept>& operands() const; // Conj only

  bool operator==(const Concept& other) const;
  bool operator!=(const Concept& other) const { return !(*this == other); }

private:
  struct Node;
  explicit Concept(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Total structural order: kind rank, then names (lexicographic), then
// components. Used everywhere deterministic iteration is needed.
int compare(const Concept& a, const Concept& b);

struct ConceptLess {
  bool operator()(const Concept& a, const Concept& b) const { return compare(a, b) < 0; }
};

// Rebuilds a term through the canonicalizing constructors. Idempotent.
Concept canonicalize(const Concept& c);

bool contains_kind(const Concept& c, ConceptKind k);
bool contains_any_nominal(const Concept& c);  // Nominal or DefNominal

// {a} <-> <a> images, applied to every nominal occurrence.
Concept defeasibilize_concept(const Concept& c);
Concept classicalize_concept(const Concept& c);

// Conjunction of two concepts (canonicalizing).
Concept conj2(const Concept& a, const Concept& b);

}  // namespace elrc

#endif
