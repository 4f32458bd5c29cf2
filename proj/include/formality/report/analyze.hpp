#pragma once

#include <map>
#include <string>
#include <vector>

#include "formality/cdga/cohomology.hpp"
#include "formality/cdga/massey.hpp"
#include "formality/graph/classify.hpp"
#include "formality/report/infer.hpp"
#include "formality/torus/mapping_torus.hpp"

namespace formality::report {

struct ModuleVerdict {
  std::string module;
  std::string statement;
  Citation citation;
};

struct AnalysisReport {
  std::string subject;
  std::vector<std::pair<std::string, std::string>> details;  // key, value
  std::vector<ModuleVerdict> verdicts;
  FactSet facts;
  std::map<Fact, std::string> provenance;
  ObstructionReport inference;
};

namespace detail {

struct FactBuilder {
  FactSet facts;
  std::map<Fact, std::string> provenance;
  void put(Fact f, bool v, std::string why) {
    facts.assign(f, v);
    provenance.emplace(f, std::move(why));
  }
  void betti(std::size_t b1) {
    const std::string why = "b1 = " + std::to_string(b1);
    put(Fact::b1_le_1, b1 <= 1, why);
    put(Fact::b1_even, b1 % 2 == 0, why);
    put(Fact::b1_ne_2, b1 != 2, why);
  }
};

inline void finish(AnalysisReport& r, detail::FactBuilder& fb, const FactSet& extra) {
  for (const auto& [f, v] : extra.known()) fb.facts.assign(f, v);
  r.facts = fb.facts;
  r.provenance = fb.provenance;
  r.inference = infer(fb.facts, fb.provenance);
}

}  // namespace detail

/// Cdga pipeline: validation, cohomology, cup data, Massey triple products of
/// basis classes. A nonvanishing triple product rules out 1-formality.
inline AnalysisReport analyze_cdga(const cdga::FiniteCdga& A, const std::string& name, const FactSet& extra = {},
                                   std::size_t massey_b1_limit = 6) {
  AnalysisReport r;
  r.subject = "cdga " + name;
  if (auto v = cdga::validate(A)) throw InputError("invalid cdga: " + v->message);
  const cdga::Cohomology H = cdga::cohomology(A);
  const CupData c = cdga::extract_cup_data(A, H);
  const std::size_t b1 = H.dim(1);
  r.details.push_back({"b1", std::to_string(b1)});
  r.details.push_back({"b2", std::to_string(H.dim(2))});
  detail::FactBuilder fb;
  fb.betti(b1);
  fb.put(Fact::cup_zero, c.is_zero(), c.is_zero() ? "cup product H^1 x H^1 -> H^2 vanishes" : "nonzero cup product on H^1");

  if (b1 <= massey_b1_limit && A.top_degree() >= 2) {
    bool found = false;
    for (std::size_t i = 0; i < b1 && !found; ++i)
      for (std::size_t j = 0; j < b1 && !found; ++j)
        for (std::size_t k = 0; k < b1 && !found; ++k) {
          auto m = cdga::massey_triple(A, H, H.basis_class(1, i), H.basis_class(1, j), H.basis_class(1, k));
          if (!m.defined || m.vanishes) continue;
          found = true;
          const std::string triple = "<h" + std::to_string(i + 1) + ",h" + std::to_string(j + 1) + ",h" +
                                     std::to_string(k + 1) + ">";
          const std::string rep = A.format(A.from_local(m.representative.representative, 2));
          r.details.push_back({"massey", triple + " = [" + rep + "], outside the indeterminacy"});
          const std::string why = "Massey product " + triple + " = [" + rep + "] does not vanish";
          fb.put(Fact::one_formal, false, why);
          fb.put(Fact::formal, false, why);
          r.verdicts.push_back({"cdga-massey", "not 1-formal: " + why,
                                {"massey-obstruction", "a nonvanishing Massey triple product of degree-one classes "
                                                       "obstructs 1-formality"}});
        }
    if (!found) r.details.push_back({"massey", "all defined triple products of basis classes vanish"});
  }
  detail::finish(r, fb, extra);
  return r;
}

/// Graph pipeline for the right-angled Artin group or the Bestvina-Brady group.
inline AnalysisReport analyze_graph(const graph::SimpleGraph& g, bool bestvina_brady, const FactSet& extra = {}) {
  AnalysisReport r;
  detail::FactBuilder fb;
  if (!bestvina_brady) {
    r.subject = "right-angled Artin group on " + std::to_string(g.vertices()) + " vertices";
    auto v = graph::classify_raag(g);
    const bool edgeless = g.edge_count() == 0;
    fb.betti(g.vertices());
    fb.put(Fact::commutator_relators, true, "relators are commutators of adjacent generators");
    fb.put(Fact::cup_zero, edgeless, "H^2 is spanned by the edges");
    fb.put(Fact::free, edgeless, edgeless ? "no edges: free group" : "an edge gives a Z^2 subgroup");
    fb.put(Fact::formal, true, "right-angled Artin groups are formal");
    fb.put(Fact::quasi_kahler_group, v.quasi_kahler, v.explanation);
    fb.put(Fact::kahler_group, v.kahler, v.explanation);
    r.verdicts.push_back({"graph-groups",
                          std::string(v.kahler ? "Kahler" : v.quasi_kahler ? "quasi-Kahler, not Kahler"
                                                                             : "not quasi-Kahler") +
                              ": " + v.explanation,
                          {v.theorem, "a right-angled Artin group is quasi-Kahler iff the graph is complete "
                                      "multipartite, and Kahler iff the graph is K_n with n even"}});
  } else {
    r.subject = "Bestvina-Brady group on " + std::to_string(g.vertices()) + " vertices";
    auto v = graph::classify_bb(g);
    fb.put(Fact::quasi_kahler_group, v.quasi_kahler, v.explanation);
    fb.put(Fact::kahler_group, v.kahler, v.explanation);
    r.verdicts.push_back({"graph-groups",
                          std::string(v.kahler ? "Kahler" : v.quasi_kahler ? "quasi-Kahler, not Kahler"
                                                                             : "not quasi-Kahler") +
                              ": " + v.explanation,
                          {v.theorem, "a Bestvina-Brady group of a connected graph is quasi-Kahler iff the graph is "
                                      "a tree or a complete multipartite graph with a part of size 1 or with at "
                                      "least three parts all of size >= 2; Kahler iff K_n with n odd"}});
    auto a = graph::artin_kernel_formality(g);
    r.details.push_back({"flag H~_0", a.integral_homology[0].str()});
    r.details.push_back({"flag H~_1", a.integral_homology[1].str()});
    if (a.one_formal)
      fb.put(Fact::one_formal, true, "flag complex has vanishing rational H~_0 and H~_1");
    r.verdicts.push_back(
        {"graph-groups",
         a.one_formal ? "1-formal" + std::string(a.torsion_warning ? " (integral torsion in H_1 of the flag complex)" : "")
                      : "Artin kernel criterion fails in degree " + std::to_string(*a.failing_degree),
         {"artin-kernel-formality", "the Artin kernel of the diagonal character is 1-formal when the flag complex "
                                    "has vanishing reduced rational homology in degrees <= 1"}});
  }
  detail::finish(r, fb, extra);
  return r;
}

/// Monodromy pipeline for a mapping torus U_h.
inline AnalysisReport analyze_monodromy(const IntegerMatrix& m, const FactSet& extra = {}) {
  AnalysisReport r;
  r.subject = "mapping torus U_h";
  const torus::MonodromyMatrix h(m);
  detail::FactBuilder fb;
  const std::size_t b1 = torus::b1_mapping_torus(h);
  fb.betti(b1);
  fb.put(Fact::fibers_over_circle, true, "U_h fibers over the circle");
  const auto j = torus::formality_jordan_obstruction(h);
  fb.put(Fact::jordan_block_ge_2, j.obstructed, "Jordan test at eigenvalue 1: " + std::string(to_string(j.verdict)));
  r.details.push_back({"H_1(U_h)", torus::wang_h1(h).str()});
  r.details.push_back({"char poly", char_poly(m).str()});
  r.details.push_back({"symplectic", h.symplectic() ? "yes" : "no"});
  if (j.obstructed)
    r.verdicts.push_back({"mapping-torus", "a size >= 2 Jordan block at eigenvalue 1: no 1-formal M fibers over U_h",
                          rule_by_id("R10").citation});
  const auto q = torus::quasi_kahler_obstruction(h);
  if (q.obstructed)
    r.verdicts.push_back({"mapping-torus",
                          "h_* has an eigenvalue off the unit circle (factor " + q.witness->poly.str() +
                              "): pi_1(N x U_h) is not quasi-Kahler, so N x U_h carries no Kahler metric",
                          {"monodromy-unit-eigenvalues", "if pi_1(N x U_h) is quasi-Kahler then all eigenvalues of "
                                                         "the monodromy on H_1 have norm one"}});
  else
    r.verdicts.push_back({"mapping-torus", "all eigenvalues of h_* lie on the unit circle: no obstruction", {}});
  detail::finish(r, fb, extra);
  return r;
}

}  // namespace formality::report
