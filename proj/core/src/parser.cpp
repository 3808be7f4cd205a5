#include "elrc/parser.hpp"

#include <cctype>
#include <sstream>
#include <tuple>

namespace elrc {

ParseError::ParseError(int line_, int column_, std::string message_)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << line_ << ":" << column_ << ": " << message_;
        return os.str();
      }()),
      line(line_),
      column(column_),
      message(std::move(message_)) {}

namespace {

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

enum class Tok {
  Name,
  KwTop,
  KwBot,
  KwSome,
  Amp,
  Dot,
  Colon,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Less,
  Greater,
  OpStrict,   // <=
  OpDefeas,   // <~
  OpEquiv,    // ==
  Newline,
  End,
};

struct Token {
  Tok tok;
  std::string text;
  int line;
  int column;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_space_and_comments();
    int line = line_, col = col_;
    if (pos_ >= text_.size()) return {Tok::End, "", line, col};
    char c = text_[pos_];
    switch (c) {
      case '\n': advance(); return {Tok::Newline, "\n", line, col};
      case '&': advance(); return {Tok::Amp, "&", line, col};
      case '.': advance(); return {Tok::Dot, ".", line, col};
      case ':': advance(); return {Tok::Colon, ":", line, col};
      case '(': advance(); return {Tok::LParen, "(", line, col};
      case ')': advance(); return {Tok::RParen, ")", line, col};
      case '{': advance(); return {Tok::LBrace, "{", line, col};
      case '}': advance(); return {Tok::RBrace, "}", line, col};
      case '>': advance(); return {Tok::Greater, ">", line, col};
      default: break;
    }
    if (c == '<') {
      advance();
      if (pos_ < text_.size() && text_[pos_] == '=') { advance(); return {Tok::OpStrict, "<=", line, col}; }
      if (pos_ < text_.size() && text_[pos_] == '~') { advance(); return {Tok::OpDefeas, "<~", line, col}; }
      return {Tok::Less, "<", line, col};
    }
    if (c == '=') {
      advance();
      if (pos_ < text_.size() && text_[pos_] == '=') { advance(); return {Tok::OpEquiv, "==", line, col}; }
      throw ParseError(line, col, "unexpected '='; did you mean '==' or '<='?");
    }
    if (name_start(c)) {
      std::string name = lex_name();
      if (name == "top") return {Tok::KwTop, name, line, col};
      if (name == "bot") return {Tok::KwBot, name, line, col};
      if (name == "some") return {Tok::KwSome, name, line, col};
      return {Tok::Name, name, line, col};
    }
    throw ParseError(line, col, std::string("unexpected character '") + c + "'");
  }

private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else {
        return;
      }
    }
  }

  // A '.' belongs to a NAME only when directly followed by a name character,
  // so "hasN. top" lexes as NAME("hasN") DOT while "a.b" is one NAME.
  std::string lex_name() {
    std::string out;
    out.push_back(text_[pos_]);
    advance();
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (name_char(c)) {
        out.push_back(c);
        advance();
      } else if (c == '.' && pos_ + 1 < text_.size() && name_char(text_[pos_ + 1])) {
        out.push_back(c);
        advance();
      } else {
        break;
      }
    }
    return out;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
public:
  explicit Parser(const std::string& text) : lex_(text) {
    cur_ = lex_.next();
    ahead_ = lex_.next();
  }

  KnowledgeBase parse_document() {
    std::vector<StrictGci> tbox;
    std::vector<DefeasibleGci> dbox;
    bool seen_tbox = false, seen_dbox = false;
    skip_newlines();
    while (cur_.tok != Tok::End) {
      if (!at_section_header())
        throw ParseError(cur_.line, cur_.column, "expected a 'tbox:' or 'dbox:' section header");
      bool strict_section = cur_.text == "tbox";
      if (strict_section && seen_tbox)
        throw ParseError(cur_.line, cur_.column, "duplicate 'tbox:' section");
      if (!strict_section && seen_dbox)
        throw ParseError(cur_.line, cur_.column, "duplicate 'dbox:' section");
      (strict_section ? seen_tbox : seen_dbox) = true;
      shift();  // name
      shift();  // colon
      expect_line_end();
      skip_newlines();
      while (cur_.tok != Tok::End && !at_section_header()) {
        parse_axiom_line(strict_section, tbox, dbox);
        skip_newlines();
      }
    }
    return KnowledgeBase(std::move(tbox), std::move(dbox));
  }

  StrictGci parse_single_strict() {
    auto [lhs, op, rhs] = parse_single();
    if (op != Tok::OpStrict) throw ParseError(op_line_, op_col_, "expected a strict axiom ('<=')");
    return {lhs, rhs};
  }

  DefeasibleGci parse_single_defeasible() {
    auto [lhs, op, rhs] = parse_single();
    if (op != Tok::OpDefeas)
      throw ParseError(op_line_, op_col_, "expected a defeasible axiom ('<~')");
    return {lhs, rhs};
  }

  ParsedAxiom parse_single_any() {
    auto [lhs, op, rhs] = parse_single();
    if (op == Tok::OpStrict) return StrictGci{lhs, rhs};
    if (op == Tok::OpDefeas) return DefeasibleGci{lhs, rhs};
    throw ParseError(op_line_, op_col_, "'==' is not allowed in a single axiom; use '<=' or '<~'");
  }

private:
  std::tuple<Concept, Tok, Concept> parse_single() {
    skip_newlines();
    Concept lhs = parse_concept();
    Tok op = cur_.tok;
    op_line_ = cur_.line;
    op_col_ = cur_.column;
    if (op != Tok::OpStrict && op != Tok::OpDefeas && op != Tok::OpEquiv)
      throw ParseError(cur_.line, cur_.column, "expected '<=', '<~' or '=='");
    shift();
    Concept rhs = parse_concept();
    skip_newlines();
    if (cur_.tok != Tok::End)
      throw ParseError(cur_.line, cur_.column, "unexpected trailing input after axiom");
    return {lhs, op, rhs};
  }

  void parse_axiom_line(bool strict_section, std::vector<StrictGci>& tbox,
                        std::vector<DefeasibleGci>& dbox) {
    Concept lhs = parse_concept();
    Token op = cur_;
    if (op.tok != Tok::OpStrict && op.tok != Tok::OpDefeas && op.tok != Tok::OpEquiv)
      throw ParseError(op.line, op.column, "expected '<=', '<~' or '=='");
    if (strict_section && op.tok == Tok::OpDefeas)
      throw ParseError(op.line, op.column, "'<~' is not allowed in a tbox section");
    if (!strict_section && op.tok != Tok::OpDefeas)
      throw ParseError(op.line, op.column,
                       "'" + op.text + "' is not allowed in a dbox section");
    shift();
    Concept rhs = parse_concept();
    expect_line_end();
    if (op.tok == Tok::OpDefeas) {
      dbox.push_back({lhs, rhs});
    } else if (op.tok == Tok::OpStrict) {
      tbox.push_back({lhs, rhs});
    } else {
      tbox.push_back({lhs, rhs});
      tbox.push_back({rhs, lhs});
    }
  }

  Concept parse_concept() {
    std::vector<Concept> ops;
    ops.push_back(parse_primary());
    while (cur_.tok == Tok::Amp) {
      shift();
      ops.push_back(parse_primary());
    }
    return Concept::conj(std::move(ops));
  }

  Concept parse_primary() {
    switch (cur_.tok) {
      case Tok::KwTop:
        shift();
        return Concept::top();
      case Tok::KwBot:
        shift();
        return Concept::bot();
      case Tok::Name:
        return Concept::atom(take_name());
      case Tok::LBrace: {
        shift();
        std::string name = take_name();
        expect(Tok::RBrace, "expected '}'");
        return Concept::nominal(name);
      }
      case Tok::Less: {
        shift();
        std::string name = take_name();
        expect(Tok::Greater, "expected '>'");
        return Concept::def_nominal(name);
      }
      case Tok::KwSome: {
        shift();
        std::string role = take_name();
        expect(Tok::Dot, "expected '.' after the role name");
        return Concept::exists(role, parse_primary());
      }
      case Tok::LParen: {
        shift();
        Concept c = parse_concept();
        expect(Tok::RParen, "expected ')'");
        return c;
      }
      default:
        throw ParseError(cur_.line, cur_.column, "expected a concept");
    }
  }

  std::string take_name() {
    if (cur_.tok != Tok::Name) {
      if (cur_.tok == Tok::KwTop || cur_.tok == Tok::KwBot || cur_.tok == Tok::KwSome)
        throw ParseError(cur_.line, cur_.column,
                         "'" + cur_.text + "' is a keyword and cannot be used as a name");
      throw ParseError(cur_.line, cur_.column, "expected a name");
    }
    if (is_reserved_name(cur_.text))
      throw ParseError(cur_.line, cur_.column,
                       "name '" + cur_.text + "' uses the reserved prefix '" +
                           std::string(kReservedPrefix) + "'");
    std::string out = cur_.text;
    shift();
    return out;
  }

  bool at_section_header() const {
    return cur_.tok == Tok::Name && (cur_.text == "tbox" || cur_.text == "dbox") &&
           ahead_.tok == Tok::Colon;
  }

  void expect_line_end() {
    if (cur_.tok == Tok::Newline) {
      shift();
      return;
    }
    if (cur_.tok == Tok::End) return;
    throw ParseError(cur_.line, cur_.column, "expected end of line");
  }

  void skip_newlines() {
    while (cur_.tok == Tok::Newline) shift();
  }

  void expect(Tok t, const char* msg) {
    if (cur_.tok != t) throw ParseError(cur_.line, cur_.column, msg);
    shift();
  }

  void shift() {
    cur_ = ahead_;
    ahead_ = lex_.next();
  }

  Lexer lex_;
  Token cur_;
  Token ahead_;
  int op_line_ = 1, op_col_ = 1;
};

void print_primary(std::ostream& os, const Concept& c);

void print_concept(std::ostream& os, const Concept& c) {
  if (c.kind() == ConceptKind::Conj) {
    bool first = true;
    for (const auto& op : c.operands()) {
      if (!first) os << " & ";
      first = false;
      print_primary(os, op);
    }
    return;
  }
  print_primary(os, c);
}

void print_primary(std::ostream& os, const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Top: os << "top"; return;
    case ConceptKind::Bot: os << "bot"; return;
    case ConceptKind::Atom: os << symbol_name(c.sym()); return;
    case ConceptKind::Nominal: os << "{" << symbol_name(c.sym()) << "}"; return;
    case ConceptKind::DefNominal: os << "<" << symbol_name(c.sym()) << ">"; return;
    case ConceptKind::Exists:
      os << "some " << symbol_name(c.sym()) << ". ";
      if (c.filler().kind() == ConceptKind::Conj) {
        os << "(";
        print_concept(os, c.filler());
        os << ")";
      } else {
        print_primary(os, c.filler());
      }
      return;
    case ConceptKind::Conj:
      os << "(";
      print_concept(os, c);
      os << ")";
      return;
  }
}

}  // namespace

KnowledgeBase parse_kb(const SourceDocument& doc) {
  return Parser(doc.text).parse_document();
}

StrictGci parse_strict_axiom(const std::string& text) {
  return Parser(text).parse_single_strict();
}

DefeasibleGci parse_defeasible_axiom(const std::string& text) {
  return Parser(text).parse_single_defeasible();
}

ParsedAxiom parse_axiom(const std::string& text, AxiomKind kind) {
  if (kind == AxiomKind::Strict) return Parser(text).parse_single_strict();
  return Parser(text).parse_single_defeasible();
}

ParsedAxiom parse_query_axiom(const std::string& text) {
  return Parser(text).parse_single_any();
}

std::string to_string(const Concept& c) {
  std::ostringstream os;
  print_concept(os, c);
  return os.str();
}

std::string to_string(const StrictGci& ax) {
  return to_string(ax.lhs) + " <= " + to_string(ax.rhs);
}

std::string to_string(const DefeasibleGci& ax) {
  return to_string(ax.lhs) + " <~ " + to_string(ax.rhs);
}

std::string serialize_kb(const KnowledgeBase& kb) {
  std::ostringstream os;
  os << "tbox:\n";
  for (const auto& ax : kb.tbox()) os << "  " << to_string(ax) << "\n";
  os << "dbox:\n";
  for (const auto& ax : kb.dbox()) os << "  " << to_string(ax) << "\n";
  return os.str();
}

}  // namespace elrc
