#ifndef ELRC_AXIOMS_HPP
#define ELRC_AXIOMS_HPP

#include <span>
#include <vector>

#include "elrc/concepts.hpp"

namespace elrc {

struct StrictGci {
  Concept lhs;
  Concept rhs;
  bool operator==(const StrictGci& o) const { return lhs == o.lhs && rhs == o.rhs; }
};

struct DefeasibleGci {
  Concept lhs;
  Concept rhs;
  bool operator==(const DefeasibleGci& o) const { return lhs == o.lhs && rhs == o.rhs; }
};

int compare(const StrictGci& a, const StrictGci& b);
int compare(const DefeasibleGci& a, const DefeasibleGci& b);

struct StrictGciLess {
  bool operator()(const StrictGci& a, const StrictGci& b) const { return compare(a, b) < 0; }
};
struct DefeasibleGciLess {
  bool operator()(const DefeasibleGci& a, const DefeasibleGci& b) const { return compare(a, b) < 0; }
};

// Sorts and deduplicates in place (canonicalized structural equality).
void normalize_set(std::vector<StrictGci>& axioms);
void normalize_set(std::vector<DefeasibleGci>& axioms);

// Strict TBox plus defeasible DBox, both kept as sorted duplicate-free sets.
class KnowledgeBase {
public:
  KnowledgeBase() = default;
  KnowledgeBase(std::vector<StrictGci> tbox, std::vector<DefeasibleGci> dbox);

  const std::vector<StrictGci>& tbox() const { return tbox_; }
  const std::vector<DefeasibleGci>& dbox() const { return dbox_; }

  bool empty() const { return tbox_.empty() && dbox_.empty(); }
  bool operator==(const KnowledgeBase& o) const { return tbox_ == o.tbox_ && dbox_ == o.dbox_; }

private:
  std::vector<StrictGci> tbox_;
  std::vector<DefeasibleGci> dbox_;
};

struct Signature {
  std::vector<Symbol> atoms;        // sorted by name
  std::vector<Symbol> roles;
  std::vector<Symbol> individuals;  // of both nominal kinds
};

Signature signature(const KnowledgeBase& kb);
void collect_signature(const Concept& c, Signature& out);  // appends, unsorted
void finish_signature(Signature& sig);                     // sort + dedup

// Nominal safeness. A concept is safe when every classical nominal occurs
// only as the immediate filler of an existential; n-safe when safe or a bare
// nominal. Defeasible nominals are judged through their {}-image, so these
// two reject terms that still contain them.
bool is_safe_concept(const Concept& c);
bool is_nsafe_concept(const Concept& c);

// Axiom-level safety (defeasible nominals allowed; checked via the {}-image):
// lhs must be n-safe and rhs safe.
bool is_safe_axiom(const StrictGci& ax);
bool is_safe_axiom(const DefeasibleGci& ax);

bool is_nominal_safe_kb(const KnowledgeBase& kb);

// Human-readable violation list for reporting: axiom text plus reason.
struct SafetyViolation {
  bool strict;
  StrictGci strict_axiom;
  DefeasibleGci defeasible_axiom;
  std::string reason;
};
std::vector<SafetyViolation> safety_violations(const KnowledgeBase& kb);

}  // namespace elrc

#endif
