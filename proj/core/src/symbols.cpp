#include "elrc/symbols.hpp"

#include <cassert>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace elrc {

namespace {

struct SymbolTable {
  std::shared_mutex mutex;
  // deque: references to stored names stay valid while new names arrive
  std::deque<std::string> names;
  std::unordered_map<std::string, Symbol> ids;

  SymbolTable() {
    names = {"top", "bot"};
    ids = {{"top", 0u}, {"bot", 1u}};
  }

  Symbol intern(std::string_view name) {
    {
      std::shared_lock lock(mutex);
      auto it = ids.find(std::string(name));
      if (it != ids.end()) return it->second;
    }
    std::unique_lock lock(mutex);
    auto [it, inserted] = ids.try_emplace(std::string(name), static_cast<Symbol>(names.size()));
    if (inserted) names.emplace_back(name);
    return it->second;
  }

  const std::string& name(Symbol s) {
    std::shared_lock lock(mutex);
    assert(s < names.size());
    return names[s];
  }
};

SymbolTable& table() {
  static SymbolTable t;
  return t;
}

std::string space_prefix(FreshNameSource::Space space) {
  using Space = FreshNameSource::Space;
  switch (space) {
    case Space::Delta: return std::string(kReservedPrefix) + "delta.";
    case Space::Defn: return std::string(kReservedPrefix) + "defn.";
    case Space::Nom: return std::string(kReservedPrefix) + "nom.";
    case Space::DefNom: return std::string(kReservedPrefix) + "dnom.";
    case Space::Internal: return std::string(kReservedPrefix) + "i.";
  }
  return std::string(kReservedPrefix);
}

}  // namespace

Symbol intern(std::string_view name) { return table().intern(name); }

const std::string& symbol_name(Symbol s) { return table().name(s); }

bool is_reserved_name(std::string_view name) { return name.starts_with(kReservedPrefix); }

bool is_reserved(Symbol s) { return is_reserved_name(symbol_name(s)); }

int compare_symbols(Symbol a, Symbol b) {
  if (a == b) return 0;
  return symbol_name(a).compare(symbol_name(b));
}

Symbol top_symbol() { return 0u; }
Symbol bot_symbol() { return 1u; }

Symbol FreshNameSource::next() {
  if (space_ == Space::Nom || space_ == Space::DefNom)
    throw std::logic_error("individual-keyed namespace has no counter");
  return intern(space_prefix(space_) + std::to_string(counter_++));
}

Symbol FreshNameSource::for_individual(Symbol ind) {
  if (space_ != Space::Nom && space_ != Space::DefNom)
    throw std::logic_error("counter namespace is not keyed by individual");
  return intern(space_prefix(space_) + symbol_name(ind));
}

}  // namespace elrc
