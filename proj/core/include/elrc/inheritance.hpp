#ifndef ELRC_INHERITANCE_HPP
#define ELRC_INHERITANCE_HPP

#include "elrc/rational.hpp"

namespace elrc {

// Inheritance net over a normal-form knowledge base. Nodes are the concepts
// named by the axioms: atoms, top/bot where they occur, and the existential
// restrictions of the normal shapes. Link kinds:
//
//   strict_pos   C => D    from C <= D axioms (and sound conjunction closure)
//   strict_neg   C <#> D   from A & B <= bot axioms, traversed symmetrically
//   def          C -> D    one per normalized defeasible axiom
//   conj         {C,D} =^ E  classification links: C & D entailed below E
//
// A conj link fires forward in reachability: once both members of the pair
// are reached, the target is reached. Pairs that are unsatisfiable under the
// TBox contribute no conj links (their content is the strict_neg link), and
// the strict closure edges E => C, E => D are added only when E is actually
// equivalent to the conjunction, which keeps every strict edge sound.
struct Net {
  std::vector<Concept> nodes;  // sorted, index is the node id

  struct DefLink {
    int src;
    int dst;
  };
  std::vector<std::pair<int, int>> strict_pos;   // sorted
  std::vector<std::pair<int, int>> strict_neg;   // stored with first < second, sorted
  std::vector<DefLink> def_links;                // aligned with def_origin
  std::vector<DefeasibleGci> def_origin;
  struct ConjLink {
    int a;  // a < b
    int b;
    int target;
  };
  std::vector<ConjLink> conj_links;

  int node_index(const Concept& c) const;  // -1 when absent
};

// kb must be in normal form (tbox normal shapes, dbox atomic).
Net build_net(std::span<const StrictGci> tbox, std::span<const DefeasibleGci> dbox,
              TestCounter* counter = nullptr);

// Forward closure from a node: strict and defeasible links follow their
// direction, incompatibility links are symmetric, conj links fire once both
// members are inside. Returns sorted node ids.
std::vector<int> reachable_from(const Net& net, int start);

// Defeasible links lying on a route from c to d: the link source is
// reachable from c and d is reachable from the link target.
struct DeltaSet {
  std::vector<Net::DefLink> links;
  std::vector<DefeasibleGci> axioms;
};
DeltaSet delta_links(const Net& net, int c, int d);

std::string net_to_dot(const Net& net);

// Inheritance-based closure: build the net once, localize rational closure
// to the delta set of every node pair to decide which defeasible bridges
// to add, then answer queries by rational closure over the widened DBox.
class InheritanceEngine {
public:
  explicit InheritanceEngine(KnowledgeBase kb, TestCounter* counter = nullptr);

  bool entails(const DefeasibleGci& query);

  const NormalizedKb& normalized();
  const Net& net();
  const std::vector<DefeasibleGci>& closure_dbox();  // the widened DBox
  bool rank_satisfiable();

private:
  void ensure_closure();

  KnowledgeBase kb_;
  TestCounter* counter_;
  FreshNameSource defn_{FreshNameSource::Space::Defn};
  std::optional<NormalizedKb> normalized_;
  std::optional<Net> net_;
  std::optional<std::vector<DefeasibleGci>> d_in_;
  std::optional<bool> rank_satisfiable_;
};

bool inheritance_closure_entails(const KnowledgeBase& kb, const DefeasibleGci& query,
                                 TestCounter* counter = nullptr);

}  // namespace elrc

#endif
