#ifndef ELRC_SYMBOLS_HPP
#define ELRC_SYMBOLS_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace elrc {

// Interned name handle. Atom, role and individual names are stored once in a
// process-wide table. Anything that affects output ordering compares the
// *names*, not the ids, so results do not depend on interning order.
using Symbol = std::uint32_t;

// Prefix reserved for generated atoms. The parser rejects user input that
// contains it, which is what makes collisions with generated names impossible.
inline constexpr std::string_view kReservedPrefix = "__rc.";

Symbol intern(std::string_view name);
const std::string& symbol_name(Symbol s);
bool is_reserved_name(std::string_view name);
bool is_reserved(Symbol s);
int compare_symbols(Symbol a, Symbol b);  // lexicographic by name

// The interned symbols for the builtin concepts; used as sentinels in the
// normal-form representation ("top" and "bot" are keywords, never user atoms).
Symbol top_symbol();
Symbol bot_symbol();

struct SymbolNameLess {
  bool operator()(Symbol a, Symbol b) const { return compare_symbols(a, b) < 0; }
};

// Source of generated atom names. Counter-based namespaces never emit the
// same name twice; individual-keyed namespaces derive the name from the
// individual and may be asked only once per individual.
class FreshNameSource {
public:
  enum class Space {
    Delta,     // "__rc.delta.<n>"  exceptionality markers
    Defn,      // "__rc.defn.<n>"   normalization definitions
    Nom,       // "__rc.nom.<a>"    classical nominal images
    DefNom,    // "__rc.dnom.<a>"   defeasible nominal images
    Internal,  // "__rc.i.<n>"      query internalization (never escapes one call)
  };

  explicit FreshNameSource(Space space) : space_(space) {}

  Symbol next();                      // counter-based spaces only
  Symbol for_individual(Symbol ind);  // Nom/DefNom only
  std::uint32_t counter() const { return counter_; }

private:
  Space space_;
  std::uint32_t counter_ = 0;
};

}  // namespace elrc

#endif
