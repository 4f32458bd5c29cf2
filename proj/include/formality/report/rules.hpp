#pragma once

#include <optional>
#include <string>
#include <vector>

#include "formality/report/facts.hpp"

namespace formality::report {

struct Citation {
  std::string tag;
  std::string statement;
};

struct Rule {
  std::string id;
  std::vector<Literal> premises;
  std::optional<Literal> conclusion;  // nullopt: the premises are jointly impossible
  Citation citation;
};

inline std::string rule_string(const Rule& r) {
  std::string s;
  for (std::size_t i = 0; i < r.premises.size(); ++i) s += (i ? " & " : "") + literal_string(r.premises[i]);
  return s + " => " + (r.conclusion ? literal_string(*r.conclusion) : "contradiction");
}

inline const std::vector<Rule>& rules() {
  using F = Fact;
  static const std::vector<Rule> table = {
      {"R1", {{F::b1_le_1, true}}, Literal{F::one_formal, true},
       {"low-b1-one-formal", "a group whose first Betti number is at most one is 1-formal"}},
      {"R2", {{F::kahler_group, true}}, Literal{F::one_formal, true},
       {"kahler-formal", "compact Kahler manifolds are formal, and 1-formality only sees the fundamental group"}},
      {"R3", {{F::commutator_relators, true}, {F::one_formal, true}, {F::cup_zero, true}}, Literal{F::free, true},
       {"commutator-relators-free",
        "a 1-formal group with a commutator-relators presentation and vanishing cup product on H^1 is free"}},
      {"R4", {{F::commutator_relators, true}, {F::cup_zero, true}, {F::free, false}}, Literal{F::one_formal, false},
       {"commutator-relators-free",
        "a 1-formal group with a commutator-relators presentation and vanishing cup product on H^1 is free"}},
      {"R5", {{F::one_formal, true}, {F::resonance_nonlinear, true}}, std::nullopt,
       {"tangent-cone-linear", "for a 1-formal group every resonance variety is a union of linear subspaces"}},
      {"R6", {{F::quasi_kahler_group, true}, {F::one_formal, true}, {F::position_obstruction_fails, true}},
       std::nullopt,
       {"quasi-kahler-position",
        "for 1-formal quasi-Kahler groups the positive-dimensional resonance components are p-isotropic and meet "
        "pairwise only at 0"}},
      {"R7", {{F::quasi_kahler_group, true}, {F::b1_ne_2, true}, {F::alexander_multi_variable, true}},
       std::nullopt,
       {"quasi-kahler-alexander", "when b1 != 2 the Alexander polynomial of a quasi-Kahler group depends on a "
                                  "single essential variable"}},
      {"R8", {{F::closed_orientable_3mfld, true}, {F::b1_even, true}, {F::one_formal, true}},
       Literal{F::fibers_over_circle, false},
       {"three-manifold-fibration", "a closed orientable 3-manifold with even b1 and 1-formal fundamental group "
                                    "does not fiber smoothly over the circle"}},
      {"R9", {{F::closed_orientable_3mfld, true}, {F::b1_le_1, true}}, Literal{F::formal, true},
       {"three-manifold-low-b1", "a closed orientable 3-manifold with b1 <= 1 is formal"}},
      {"R10", {{F::one_formal, true}, {F::fibers_over_circle, true}, {F::jordan_block_ge_2, true}}, std::nullopt,
       {"fibration-jordan", "if M is 1-formal and fibers over a mapping torus, every Jordan block of the monodromy "
                            "for the eigenvalue 1 has size one"}},
      {"R11", {{F::product_of_one_formal, true}}, Literal{F::one_formal, true},
       {"products-one-formal", "products and free products of 1-formal groups are 1-formal"}},
      {"R12", {{F::formal, true}}, Literal{F::one_formal, true},
       {"formal-implies-one-formal", "formality implies 1-formality"}},
  };
  return table;
}

inline const Rule& rule_by_id(const std::string& id) {
  for (const auto& r : rules())
    if (r.id == id) return r;
  throw InputError("unknown rule " + id);
}

}  // namespace formality::report
