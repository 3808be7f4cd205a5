#ifndef ELRC_PARSER_HPP
#define ELRC_PARSER_HPP

#include <stdexcept>
#include <string>
#include <variant>

#include "elrc/axioms.hpp"

namespace elrc {

struct SourceDocument {
  std::string text;
  std::string origin = "<inline>";
};

class ParseError : public std::runtime_error {
public:
  ParseError(int line, int column, std::string message);
  int line;
  int column;
  std::string message;  // without the position prefix
};

// Text format:
//
//   document   := { section }
//   section    := ("tbox:" | "dbox:") newline { axiom-line }
//   axiom-line := axiom newline | comment | blank
//   axiom      := concept ("<=" | "<~" | "==") concept    (* "==" and "<=" in tbox, "<~" in dbox *)
//   concept    := primary { "&" primary }
//   primary    := "top" | "bot" | NAME | "{" NAME "}" | "<" NAME ">"
//               | "some" NAME "." primary | "(" concept ")"
//   NAME       := [A-Za-z_][A-Za-z0-9_.-]*   not starting with "__rc."
//
// "#" starts a comment to end of line. "C == D" expands into the two
// inclusions at parse time. Note that a "." directly followed by a name
// character is taken as part of the NAME, so write "some r. C".
KnowledgeBase parse_kb(const SourceDocument& doc);

enum class AxiomKind { Strict, Defeasible };
using ParsedAxiom = std::variant<StrictGci, DefeasibleGci>;

// Parses a single axiom with the grammar above; the operator must match the
// requested kind ("==" is not accepted here).
StrictGci parse_strict_axiom(const std::string& text);
DefeasibleGci parse_defeasible_axiom(const std::string& text);
ParsedAxiom parse_axiom(const std::string& text, AxiomKind kind);
ParsedAxiom parse_query_axiom(const std::string& text);  // kind from the operator

// Deterministic output; parse_kb(serialize_kb(kb)) == kb.
std::string serialize_kb(const KnowledgeBase& kb);
std::string to_string(const Concept& c);
std::string to_string(const StrictGci& ax);
std::string to_string(const DefeasibleGci& ax);

}  // namespace elrc

#endif
