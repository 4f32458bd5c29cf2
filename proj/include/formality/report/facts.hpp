#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "formality/errors.hpp"

namespace formality::report {

enum class Fact {
  b1_le_1,
  b1_even,
  one_formal,
  formal,
  free,
  kahler_group,
  quasi_kahler_group,
  commutator_relators,
  cup_zero,
  closed_orientable_3mfld,
  fibers_over_circle,
  jordan_block_ge_2,
  resonance_nonlinear,
  position_obstruction_fails,
  alexander_multi_variable,
  b1_ne_2,
  product_of_one_formal,
};

inline constexpr std::size_t fact_count = 17;

inline constexpr std::array<std::string_view, fact_count> fact_names = {
    "b1_le_1",
    "b1_even",
    "one_formal",
    "formal",
    "free",
    "kahler_group",
    "quasi_kahler_group",
    "commutator_relators",
    "cup_zero",
    "closed_orientable_3mfld",
    "fibers_over_circle",
    "jordan_block_ge_2",
    "resonance_nonlinear",
    "position_obstruction_fails",
    "alexander_multi_variable",
    "b1_ne_2",
    "product_of_one_formal",
};

inline std::string_view to_string(Fact f) { return fact_names[static_cast<std::size_t>(f)]; }

inline Fact parse_fact(std::string_view name) {
  for (std::size_t i = 0; i < fact_count; ++i)
    if (fact_names[i] == name) return static_cast<Fact>(i);
  throw InputError("unknown fact '" + std::string(name) + "'");
}

inline std::vector<Fact> all_facts() {
  std::vector<Fact> out;
  for (std::size_t i = 0; i < fact_count; ++i) out.push_back(static_cast<Fact>(i));
  return out;
}

enum class Truth { unknown, yes, no };

inline std::string_view to_string(Truth t) {
  switch (t) {
    case Truth::yes: return "true";
    case Truth::no: return "false";
    default: return "unknown";
  }
}

inline Truth truth(bool b) { return b ? Truth::yes : Truth::no; }

struct Literal {
  Fact fact;
  bool value = true;
  friend bool operator==(const Literal&, const Literal&) = default;
};

inline std::string literal_string(const Literal& l) {
  return (l.value ? "" : "not ") + std::string(to_string(l.fact));
}

/// Three-valued assignment; missing entries are unknown.
class FactSet {
 public:
  FactSet() = default;
  FactSet(std::initializer_list<std::pair<Fact, bool>> init) {
    for (auto [f, v] : init) assign(f, v);
  }

  /// Assigning both values to the same fact is an input error.
  void assign(Fact f, bool v) {
    auto [it, inserted] = values_.try_emplace(f, v);
    if (!inserted && it->second != v)
      throw InputError("inconsistent facts: " + std::string(to_string(f)) + " given as both true and false");
  }
  void set(Fact f, Truth t) {
    if (t == Truth::unknown) values_.erase(f);
    else values_[f] = t == Truth::yes;
  }
  Truth get(Fact f) const {
    auto it = values_.find(f);
    return it == values_.end() ? Truth::unknown : truth(it->second);
  }
  bool holds(const Literal& l) const { return get(l.fact) == truth(l.value); }
  const std::map<Fact, bool>& known() const { return values_; }
  std::size_t size() const { return values_.size(); }

  friend bool operator==(const FactSet&, const FactSet&) = default;

 private:
  std::map<Fact, bool> values_;
};

}  // namespace formality::report
