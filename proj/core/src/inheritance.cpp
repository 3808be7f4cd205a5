#include "elrc/inheritance.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "elrc/parser.hpp"

namespace elrc {

int Net::node_index(const Concept& c) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), c, ConceptLess{});
  if (it == nodes.end() || !(*it == c)) return -1;
  return static_cast<int>(it - nodes.begin());
}

namespace {

bool is_atomic_or_existential(const Concept& c) {
  return c.kind() == ConceptKind::Atom || c.kind() == ConceptKind::Exists;
}

}  // namespace

Net build_net(std::span<const StrictGci> tbox, std::span<const DefeasibleGci> dbox,
              TestCounter* counter) {
  for (const auto& ax : dbox)
    if (ax.lhs.kind() != ConceptKind::Atom || ax.rhs.kind() != ConceptKind::Atom)
      throw std::invalid_argument("inheritance net expects an atomic (normal-form) DBox");
  for (const auto& ax : tbox)
    if (!is_normal_form(ax))
      throw std::invalid_argument("inheritance net expects a normal-form TBox, got: " +
                                  to_string(ax));

  Net net;

  // Nodes: every atom mentioned anywhere, plus the concept sides of the
  // remaining strict axioms (existential restrictions, top, bot).
  std::vector<Concept> nodes;
  auto add_atoms_of = [&nodes](const Concept& c) {
    Signature sig;
    collect_signature(c, sig);
    for (Symbol a : sig.atoms) nodes.push_back(Concept::atom(a));
  };
  for (const auto& ax : tbox) {
    add_atoms_of(ax.lhs);
    add_atoms_of(ax.rhs);
  }
  for (const auto& ax : dbox) {
    nodes.push_back(ax.lhs);
    nodes.push_back(ax.rhs);
  }
  auto is_disjointness = [](const StrictGci& ax) {
    return ax.rhs.kind() == ConceptKind::Bot && ax.lhs.kind() == ConceptKind::Conj;
  };
  for (const auto& ax : tbox) {
    if (is_disjointness(ax)) continue;
    nodes.push_back(ax.lhs);
    nodes.push_back(ax.rhs);
  }
  std::sort(nodes.begin(), nodes.end(), ConceptLess{});
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  net.nodes = std::move(nodes);

  // Defeasible links.
  for (const auto& ax : dbox) {
    net.def_links.push_back({net.node_index(ax.lhs), net.node_index(ax.rhs)});
    net.def_origin.push_back(ax);
  }

  // Incompatibility links from A & B <= bot, strict links from the rest.
  std::vector<std::pair<int, int>> pos, neg;
  for (const auto& ax : tbox) {
    if (is_disjointness(ax)) {
      const auto& ops = ax.lhs.operands();
      assert(ops.size() == 2);
      int a = net.node_index(ops[0]);
      int b = net.node_index(ops[1]);
      neg.push_back({std::min(a, b), std::max(a, b)});
    } else {
      pos.push_back({net.node_index(ax.lhs), net.node_index(ax.rhs)});
    }
  }

  // Classification links. Candidate pairs are distinct atomic or existential
  // nodes whose conjunction is satisfiable; targets are other nodes entailed
  // above the conjunction. When the target is equivalent to the conjunction
  // the closure edges are strict knowledge and get added as such.
  const std::size_t n = net.nodes.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_atomic_or_existential(net.nodes[i])) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!is_atomic_or_existential(net.nodes[j])) continue;
      Concept pair = conj2(net.nodes[i], net.nodes[j]);
      if (entails(tbox, {pair, Concept::bot()}, counter)) continue;
      for (std::size_t e = 0; e < n; ++e) {
        if (e == i || e == j) continue;
        const Concept& target = net.nodes[e];
        if (target.kind() == ConceptKind::Top) continue;
        if (!entails(tbox, {pair, target}, counter)) continue;
        net.conj_links.push_back({static_cast<int>(i), static_cast<int>(j), static_cast<int>(e)});
        if (entails(tbox, {target, net.nodes[i]}, counter) &&
            entails(tbox, {target, net.nodes[j]}, counter)) {
          pos.push_back({static_cast<int>(e), static_cast<int>(i)});
          pos.push_back({static_cast<int>(e), static_cast<int>(j)});
        }
      }
    }
  }

  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
  std::sort(neg.begin(), neg.end());
  neg.erase(std::unique(neg.begin(), neg.end()), neg.end());
  net.strict_pos = std::move(pos);
  net.strict_neg = std::move(neg);
  return net;
}

std::vector<int> reachable_from(const Net& net, int start) {
  if (start < 0 || static_cast<std::size_t>(start) >= net.nodes.size())
    throw std::invalid_argument("reachable_from: unknown start node");
  std::vector<char> in(net.nodes.size(), 0);
  in[static_cast<std::size_t>(start)] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    auto add = [&](int v) {
      if (!in[static_cast<std::size_t>(v)]) {
        in[static_cast<std::size_t>(v)] = 1;
        changed = true;
      }
    };
    for (const auto& [a, b] : net.strict_pos)
      if (in[static_cast<std::size_t>(a)]) add(b);
    for (const auto& [a, b] : net.strict_neg) {
      if (in[static_cast<std::size_t>(a)]) add(b);
      if (in[static_cast<std::size_t>(b)]) add(a);
    }
    for (const auto& l : net.def_links)
      if (in[static_cast<std::size_t>(l.src)]) add(l.dst);
    for (const auto& l : net.conj_links)
      if (in[static_cast<std::size_t>(l.a)] && in[static_cast<std::size_t>(l.b)]) add(l.target);
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < in.size(); ++i)
    if (in[i]) out.push_back(static_cast<int>(i));
  return out;
}

DeltaSet delta_links(const Net& net, int c, int d) {
  DeltaSet out;
  std::vector<int> from_c = reachable_from(net, c);
  std::vector<char> in_from_c(net.nodes.size(), 0);
  for (int v : from_c) in_from_c[static_cast<std::size_t>(v)] = 1;

  for (std::size_t k = 0; k < net.def_links.size(); ++k) {
    const auto& link = net.def_links[k];
    if (!in_from_c[static_cast<std::size_t>(link.src)]) continue;
    std::vector<int> from_dst = reachable_from(net, link.dst);
    if (std::binary_search(from_dst.begin(), from_dst.end(), d)) {
      out.links.push_back(link);
      out.axioms.push_back(net.def_origin[k]);
    }
  }
  normalize_set(out.axioms);
  return out;
}

std::string net_to_dot(const Net& net) {
  std::ostringstream os;
  os << "digraph inheritance_net {\n";
  os << "  rankdir=BT;\n";
  for (std::size_t i = 0; i < net.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << to_string(net.nodes[i]) << "\"];\n";
  for (const auto& [a, b] : net.strict_pos)
    os << "  n" << a << " -> n" << b << " [style=solid];\n";
  for (const auto& [a, b] : net.strict_neg)
    os << "  n" << a << " -> n" << b << " [style=dotted, dir=both, label=\"#\"];\n";
  for (const auto& l : net.def_links)
    os << "  n" << l.src << " -> n" << l.dst << " [style=dashed];\n";
  for (std::size_t k = 0; k < net.conj_links.size(); ++k) {
    const auto& l = net.conj_links[k];
    os << "  c" << k << " [shape=point];\n";
    os << "  n" << l.a << " -> c" << k << " [dir=none, style=dotted];\n";
    os << "  n" << l.b << " -> c" << k << " [dir=none, style=dotted];\n";
    os << "  c" << k << " -> n" << l.target << " [style=solid];\n";
  }
  os << "}\n";
  return os.str();
}

InheritanceEngine::InheritanceEngine(KnowledgeBase kb, TestCounter* counter)
    : kb_(std::move(kb)), counter_(counter) {}

const NormalizedKb& InheritanceEngine::normalized() {
  if (!normalized_) normalized_ = normalize_kb(kb_, defn_);
  return *normalized_;
}

bool InheritanceEngine::rank_satisfiable() {
  if (!rank_satisfiable_)
    rank_satisfiable_ = is_rank_satisfiable(normalized().kb(), counter_);
  return *rank_satisfiable_;
}

const Net& InheritanceEngine::net() {
  if (!net_) {
    const NormalizedKb& n = normalized();
    net_ = build_net(n.tbox, n.dbox, counter_);
  }
  return *net_;
}

void InheritanceEngine::ensure_closure() {
  if (d_in_) return;
  const NormalizedKb& n = normalized();
  const Net& g = net();
  std::vector<DefeasibleGci> d_in = n.dbox;
  const int count = static_cast<int>(g.nodes.size());
  for (int c = 0; c < count; ++c) {
    for (int d = 0; d < count; ++d) {
      if (c == d) continue;
      DeltaSet delta = delta_links(g, c, d);
      DefeasibleGci candidate{g.nodes[static_cast<std::size_t>(c)],
                              g.nodes[static_cast<std::size_t>(d)]};
      KnowledgeBase localized(n.tbox, delta.axioms);
      if (rational_closure_entails(localized, candidate, counter_)) d_in.push_back(candidate);
    }
  }
  normalize_set(d_in);
  d_in_ = std::move(d_in);
}

const std::vector<DefeasibleGci>& InheritanceEngine::closure_dbox() {
  ensure_closure();
  return *d_in_;
}

bool InheritanceEngine::entails(const DefeasibleGci& query) {
  if (!rank_satisfiable()) return true;
  ensure_closure();
  KnowledgeBase widened(normalized().tbox, *d_in_);
  return rational_closure_entails(widened, query, counter_);
}

bool inheritance_closure_entails(const KnowledgeBase& kb, const DefeasibleGci& query,
                                 TestCounter* counter) {
  InheritanceEngine engine(kb, counter);
  return engine.entails(query);
}

}  // namespace elrc
