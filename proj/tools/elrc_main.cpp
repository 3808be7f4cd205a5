// Command-line front end for the defeasible EL-bot reasoner: load a
// knowledge base, print its ranking, answer subsumption queries under
// rational or inheritance-based closure, check satisfiability and nominal
// safety, dump normal forms and inheritance nets.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "elrc/nominals.hpp"
#include "elrc/oracle.hpp"
#include "elrc/parser.hpp"

namespace {

using namespace elrc;

constexpr int kExitEntailed = 0;
constexpr int kExitNotEntailed = 1;
constexpr int kExitError = 2;

SourceDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return {buf.str(), path};
}

bool kb_has_nominals(const KnowledgeBase& kb) {
  for (const auto& ax : kb.tbox())
    if (contains_any_nominal(ax.lhs) || contains_any_nominal(ax.rhs)) return true;
  for (const auto& ax : kb.dbox())
    if (contains_any_nominal(ax.lhs) || contains_any_nominal(ax.rhs)) return true;
  return false;
}

// Replaces image atoms by their source nominals for display.
Concept decode_images(const Concept& c, const NominalImageMap& m) {
  switch (c.kind()) {
    case ConceptKind::Atom: {
      for (const auto& [ind, atom] : m.classical)
        if (atom == c.sym()) return Concept::nominal(ind);
      for (const auto& [ind, atom] : m.defeasible)
        if (atom == c.sym()) return Concept::def_nominal(ind);
      return c;
    }
    case ConceptKind::Exists:
      return Concept::exists(c.sym(), decode_images(c.filler(), m));
    case ConceptKind::Conj: {
      std::vector<Concept> ops;
      for (const auto& op : c.operands()) ops.push_back(decode_images(op, m));
      return Concept::conj(std::move(ops));
    }
    default:
      return c;
  }
}

struct QueryOutput {
  bool entailed = false;
  std::string closure;  // "rc" | "inheritance" | "classical"
  std::string rank = "-";
  std::optional<std::size_t> decided_level;
  bool classical_decision = false;
  std::uint64_t tests = 0;
  std::int64_t ms = 0;
};

void print_query_output(const QueryOutput& out, bool machine, bool explain) {
  if (machine) {
    std::cout << "{\"entailed\":" << (out.entailed ? "true" : "false") << ",\"closure\":\""
              << out.closure << "\",\"rank\":\"" << out.rank << "\",\"tests\":" << out.tests
              << ",\"ms\":" << out.ms << "}\n";
    return;
  }
  std::cout << "entailed: " << (out.entailed ? "yes" : "no") << "\n";
  std::cout << "closure: " << out.closure << "\n";
  if (explain) {
    std::cout << "rank of left-hand side: " << out.rank << "\n";
    if (out.decided_level)
      std::cout << "decided at level: " << *out.decided_level << "\n";
    else if (out.classical_decision)
      std::cout << "decided classically\n";
  }
  std::cout << "tests: " << out.tests << "\n";
}

int run_query(const std::string& file, const std::string& axiom_text, const std::string& closure,
              bool explain, bool machine) {
  KnowledgeBase kb = parse_kb(load_document(file));
  ParsedAxiom axiom = parse_query_axiom(axiom_text);
  TestCounter counter;
  QueryOutput out;
  auto started = std::chrono::steady_clock::now();

  bool nominals = kb_has_nominals(kb) ||
                  std::visit(
                      [](const auto& ax) {
                        return contains_any_nominal(ax.lhs) || contains_any_nominal(ax.rhs);
                      },
                      axiom);

  if (std::holds_alternative<StrictGci>(axiom)) {
    const auto& q = std::get<StrictGci>(axiom);
    out.closure = "classical";
    if (nominals) {
      out.entailed = strict_entails_nominal_safe(kb, q, &counter);
    } else {
      out.entailed = rational_closure_entails(kb, q, &counter);
    }
  } else {
    const auto& q = std::get<DefeasibleGci>(axiom);
    bool inherit = closure == "inherit";
    out.closure = inherit ? "inheritance" : "rc";
    if (nominals) {
      out.entailed = defeasible_entails_nominal_safe(
          kb, q, inherit ? Closure::Inheritance : Closure::RationalClosure, &counter);
      if (explain) out.rank = to_string(rank_of_nominal_safe(kb, q.lhs, &counter));
    } else if (inherit) {
      InheritanceEngine engine(kb, &counter);
      out.entailed = engine.entails(q);
      if (explain) {
        RcEngine rc(kb, &counter);
        out.rank = to_string(rc.rank_of(q.lhs));
      }
    } else if (explain) {
      RcEngine engine(kb, &counter);
      auto verdict = engine.explain(q);
      out.entailed = verdict.entailed;
      if (verdict.lhs_rank) out.rank = to_string(*verdict.lhs_rank);
      out.decided_level = verdict.decided_level;
      out.classical_decision = verdict.classical;
    } else {
      out.entailed = rational_closure_entails(kb, q, &counter);
    }
  }

  out.tests = counter.read();
  out.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 started)
               .count();
  print_query_output(out, machine, explain);
  return out.entailed ? kExitEntailed : kExitNotEntailed;
}

// Ranking of the (possibly nominal) KB; defeasible nominals are encoded for
// the computation and decoded back for display.
int run_rank(const std::string& file) {
  KnowledgeBase kb = parse_kb(load_document(file));
  NominalImageMap m = NominalImageMap::for_kb(kb);
  KnowledgeBase plain = kb_has_nominals(kb) ? encode_def_nominals(defeasibilize(kb), m) : kb;

  TestCounter counter;
  Ranking r = compute_ranking(plain, &counter);

  std::vector<StrictGci> additions;
  for (const auto& ax : r.tstar) {
    bool original =
        std::binary_search(plain.tbox().begin(), plain.tbox().end(), ax, StrictGciLess{});
    if (!original) additions.push_back(ax);
  }
  std::cout << "T* additions:";
  if (additions.empty()) std::cout << " none";
  std::cout << "\n";
  for (const auto& ax : additions)
    std::cout << "  " << to_string(StrictGci{decode_images(ax.lhs, m), decode_images(ax.rhs, m)})
              << "\n";
  for (std::size_t i = 0; i < r.cells.size(); ++i) {
    std::cout << "D_" << i << ":\n";
    for (const auto& ax : r.cells[i])
      std::cout << "  "
                << to_string(DefeasibleGci{decode_images(ax.lhs, m), decode_images(ax.rhs, m)})
                << "\n";
  }
  std::cout << "tests: " << counter.read() << "\n";
  return kExitEntailed;
}

int run_check(const std::string& file) {
  KnowledgeBase kb = parse_kb(load_document(file));
  NominalImageMap m = NominalImageMap::for_kb(kb);
  KnowledgeBase plain = kb_has_nominals(kb) ? encode_def_nominals(defeasibilize(kb), m) : kb;

  TestCounter counter;
  bool sat = is_rank_satisfiable(plain, &counter);
  std::cout << "rank-satisfiable: " << (sat ? "yes" : "no") << "\n";

  bool individual_trouble = false;
  auto report = individual_unsat_report(kb, &counter);
  if (!report.empty()) {
    std::cout << "individuals:\n";
    for (const auto& [individual, unsat] : report) {
      std::cout << "  " << symbol_name(individual) << ": "
                << (unsat ? "inconsistent (image atom is unsatisfiable)" : "consistent") << "\n";
      individual_trouble |= unsat;
    }
  }
  std::cout << "tests: " << counter.read() << "\n";
  return (sat && !individual_trouble) ? kExitEntailed : kExitNotEntailed;
}

int run_safety(const std::string& file) {
  KnowledgeBase kb = parse_kb(load_document(file));
  auto violations = safety_violations(kb);
  std::cout << "nominal-safe: " << (violations.empty() ? "yes" : "no") << "\n";
  for (const auto& v : violations) {
    std::cout << "  " << (v.strict ? to_string(v.strict_axiom) : to_string(v.defeasible_axiom))
              << "    " << v.reason << "\n";
  }
  return violations.empty() ? kExitEntailed : kExitNotEntailed;
}

int run_normalize(const std::string& file) {
  KnowledgeBase kb = parse_kb(load_document(file));
  if (kb_has_nominals(kb))
    throw std::runtime_error("normalize expects a nominal-free knowledge base");
  FreshNameSource defn(FreshNameSource::Space::Defn);
  NormalizedKb n = normalize_kb(kb, defn);
  std::cout << serialize_kb(n.kb());
  std::cout << "name map:";
  if (n.names.definitions().empty()) std::cout << " none";
  std::cout << "\n";
  for (const auto& [atom, definition] : n.names.definitions())
    std::cout << "  " << symbol_name(atom) << " = " << to_string(definition) << "\n";
  return kExitEntailed;
}

int run_net(const std::string& file) {
  KnowledgeBase kb = parse_kb(load_document(file));
  NominalImageMap m = NominalImageMap::for_kb(kb);
  KnowledgeBase plain = kb_has_nominals(kb) ? encode_def_nominals(defeasibilize(kb), m) : kb;
  InheritanceEngine engine(plain);
  std::cout << net_to_dot(engine.net());
  return kExitEntailed;
}

int run_debug_oracle(const std::string& file, int domain) {
  KnowledgeBase kb = parse_kb(load_document(file));
  NominalImageMap m = NominalImageMap::for_kb(kb);
  KnowledgeBase plain = kb_has_nominals(kb) ? encode_def_nominals(defeasibilize(kb), m) : kb;

  OracleBudget budget;
  budget.max_domain = domain;
  TestCounter counter;
  Ranking r = compute_ranking(plain, &counter);
  FreshNameSource deltas(FreshNameSource::Space::Delta);

  int disagreements = 0;
  for (Symbol atom : signature(plain).atoms) {
    Concept c = Concept::atom(atom);
    Rank rank = rank_of_concept(r, c, deltas, &counter);
    bool marker_says = !(rank == Rank::finite(0));
    bool oracle_says = exceptional_bounded(plain, c, budget);
    bool agree = marker_says == oracle_says;
    if (!agree) ++disagreements;
    std::cout << symbol_name(atom) << ": marker=" << (marker_says ? "exceptional" : "typical")
              << " oracle=" << (oracle_says ? "exceptional" : "typical")
              << (agree ? "" : "  <-- disagreement") << "\n";
  }
  std::cout << (disagreements == 0 ? "agreement: full" : "agreement: BROKEN") << "\n";
  return disagreements == 0 ? kExitEntailed : kExitNotEntailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"defeasible EL-bot subsumption under rational and inheritance-based closure"};
  app.require_subcommand(1);
  bool machine = false;
  app.add_flag("--machine", machine, "line-delimited machine-readable output");

  std::string file, axiom_text, closure = "rc";
  bool explain = false;
  int oracle_domain = 3;

  auto* query = app.add_subcommand("query", "decide one subsumption axiom");
  query->fallthrough();
  query->add_option("file", file)->required();
  query->add_option("axiom", axiom_text, "e.g. \"BRBC <~ NotN\" or \"A <= B\"")->required();
  query->add_option("--closure", closure, "rc or inherit")
      ->check(CLI::IsMember({"rc", "inherit"}));
  query->add_flag("--explain", explain, "also report the rank of the left-hand side");

  auto* rank = app.add_subcommand("rank", "print the ranking of the DBox");
  rank->add_option("file", file)->required();

  auto* check = app.add_subcommand("check", "rank satisfiability and individual consistency");
  check->add_option("file", file)->required();

  auto* safety = app.add_subcommand("safety", "nominal-safety report");
  safety->add_option("file", file)->required();

  auto* normalize = app.add_subcommand("normalize", "print the normal form and the name map");
  normalize->add_option("file", file)->required();

  auto* net = app.add_subcommand("net", "emit the inheritance net as DOT");
  net->add_option("file", file)->required();

  auto* dbg = app.add_subcommand("debug-oracle", "bounded-model differential check");
  dbg->add_option("file", file)->required();
  dbg->add_option("--domain", oracle_domain, "maximum oracle domain size");
  dbg->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (query->parsed()) return run_query(file, axiom_text, closure, explain, machine);
    if (rank->parsed()) return run_rank(file);
    if (check->parsed()) return run_check(file);
    if (safety->parsed()) return run_safety(file);
    if (normalize->parsed()) return run_normalize(file);
    if (net->parsed()) return run_net(file);
    if (dbg->parsed()) return run_debug_oracle(file, oracle_domain);
  } catch (const ParseError& e) {
    std::cerr << "error: " << file << ":" << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
