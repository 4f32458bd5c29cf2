#include <gtest/gtest.h>

#include <random>

#include "formality/cdga/builtins.hpp"
#include "formality/io/json.hpp"
#include "formality/io/report_json.hpp"
#include "formality/report/analyze.hpp"
#include "oracles.hpp"

using namespace formality;
using namespace formality::report;
using json = nlohmann::json;

namespace {

using F = Fact;

// Naive closure: apply every rule whose premises hold until nothing changes.
FactSet naive_closure(FactSet s) {
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& r : rules()) {
      if (!r.conclusion) continue;
      bool fire = true;
      for (const auto& p : r.premises) fire = fire && s.holds(p);
      if (fire && s.get(r.conclusion->fact) == Truth::unknown) {
        s.set(r.conclusion->fact, truth(r.conclusion->value));
        changed = true;
      }
    }
  }
  return s;
}

FactSet random_facts(std::mt19937_64& rng, double density) {
  std::bernoulli_distribution pick(density), coin(0.5);
  FactSet s;
  for (auto f : all_facts())
    if (pick(rng)) s.assign(f, coin(rng));
  return s;
}

bool step_chain_has(const std::vector<ChainStep>& chain, const std::string& rule) {
  for (const auto& s : chain)
    if (s.rule == rule) return true;
  return false;
}

}  // namespace

TEST(Facts, NamesAndParsing) {
  EXPECT_EQ(all_facts().size(), 17u);
  for (auto f : all_facts()) EXPECT_EQ(parse_fact(to_string(f)), f);
  EXPECT_THROW(parse_fact("nonsense"), InputError);
  EXPECT_EQ(literal_string({F::free, false}), "not free");
}

TEST(Facts, InconsistentInputIsRejected) {
  FactSet s;
  s.assign(F::free, true);
  s.assign(F::free, true);
  EXPECT_THROW(s.assign(F::free, false), InputError);
  EXPECT_THROW((FactSet{{F::one_formal, true}, {F::one_formal, false}}), InputError);
  EXPECT_THROW(io::facts_from_json(json::parse(R"([["free", true], ["free", false]])")), InputError);
}

TEST(Rules, TableIsComplete) {
  ASSERT_EQ(rules().size(), 12u);
  for (std::size_t i = 0; i < rules().size(); ++i) {
    const auto& r = rules()[i];
    EXPECT_EQ(r.id, "R" + std::to_string(i + 1));
    EXPECT_FALSE(r.citation.tag.empty());
    EXPECT_FALSE(r.citation.statement.empty());
    EXPECT_FALSE(r.premises.empty());
  }
  for (auto id : {"R5", "R6", "R7", "R10"}) EXPECT_FALSE(rule_by_id(id).conclusion);
}

TEST(Infer, CommutatorRelatorsExample) {
  auto rep = infer({{F::commutator_relators, true}, {F::cup_zero, true}, {F::free, false}});
  EXPECT_TRUE(rep.consistent());
  EXPECT_EQ(rep.closure.get(F::one_formal), Truth::no);
  EXPECT_EQ(rep.derivations.at(F::one_formal).rule, "R4");
  auto chain = rep.chain(F::one_formal);
  ASSERT_EQ(chain.size(), 1u);
  EXPECT_EQ(rule_by_id(chain[0].rule).citation.tag, "commutator-relators-free");
  // nothing runs backwards from not 1-formal: formal stays unknown
  EXPECT_EQ(rep.closure.get(F::formal), Truth::unknown);
  EXPECT_TRUE(rep.unused_inputs.empty());
}

TEST(Infer, LowBettiExample) {
  auto rep = infer({{F::b1_le_1, true}});
  EXPECT_EQ(rep.closure.get(F::one_formal), Truth::yes);
  EXPECT_EQ(rep.derivations.at(F::one_formal).rule, "R1");
  EXPECT_EQ(rule_by_id("R1").citation.tag, "low-b1-one-formal");
  EXPECT_TRUE(replay(rep, F::one_formal));
}

TEST(Infer, ThreeManifoldContradiction) {
  auto rep = infer({{F::closed_orientable_3mfld, true},
                    {F::b1_even, true},
                    {F::one_formal, true},
                    {F::fibers_over_circle, true}});
  ASSERT_FALSE(rep.consistent());
  ASSERT_EQ(rep.contradictions.size(), 1u);
  const auto& c = rep.contradictions[0];
  EXPECT_EQ(c.rule, "R8");
  EXPECT_EQ(c.premises.size(), 4u);
  EXPECT_EQ(c.premises.back(), (Literal{F::fibers_over_circle, true}));
  EXPECT_EQ(c.chains.size(), 4u);
  EXPECT_NE(c.description.find("three-manifold-fibration"), std::string::npos);
  EXPECT_TRUE(rep.unused_inputs.empty());
}

TEST(Infer, ContradictionRulesAndChains) {
  // formal => one_formal (R12) then R10 fires with the fibration and Jordan facts
  auto rep = infer({{F::formal, true}, {F::fibers_over_circle, true}, {F::jordan_block_ge_2, true}});
  ASSERT_EQ(rep.contradictions.size(), 1u);
  EXPECT_EQ(rep.contradictions[0].rule, "R10");
  EXPECT_TRUE(step_chain_has(rep.contradictions[0].chains[0], "R12"));

  auto r5 = infer({{F::kahler_group, true}, {F::resonance_nonlinear, true}});
  ASSERT_EQ(r5.contradictions.size(), 1u);
  EXPECT_EQ(r5.contradictions[0].rule, "R5");
  EXPECT_TRUE(step_chain_has(r5.contradictions[0].chains[0], "R2"));

  auto unused = infer({{F::b1_ne_2, true}});
  ASSERT_EQ(unused.unused_inputs.size(), 1u);
  EXPECT_EQ(unused.unused_inputs[0], F::b1_ne_2);
}

TEST(Infer, RandomFactSetProperties) {
  std::mt19937_64 rng(71);
  std::size_t consistent = 0;
  for (int t = 0; t < 1000; ++t) {
    const FactSet base = random_facts(rng, 0.25);
    auto rep = infer(base);

    // fixpoint within the bound, and stable under re-inference
    ASSERT_LE(rep.iterations, rules().size() * fact_count);
    auto again = infer(rep.closure);
    ASSERT_EQ(again.closure, rep.closure);
    ASSERT_TRUE(again.derived.empty());

    // inputs are kept; every derived fact comes from a rule whose premises hold
    for (const auto& [f, v] : base.known()) ASSERT_EQ(rep.closure.get(f), truth(v));
    for (auto f : rep.derived) {
      const auto& d = rep.derivations.at(f);
      ASSERT_FALSE(d.rule.empty());
      ASSERT_EQ(base.get(f), Truth::unknown);
      for (const auto& p : d.premises) ASSERT_TRUE(rep.closure.holds(p));
      ASSERT_TRUE(replay(rep, f));
    }

    if (!rep.consistent()) continue;
    ++consistent;
    ASSERT_EQ(rep.closure, naive_closure(base));

    // monotone: extending the inputs keeps every derived value
    FactSet bigger = base;
    const FactSet extra = random_facts(rng, 0.2);
    for (const auto& [f, v] : extra.known()) {
      if (base.get(f) != Truth::unknown) continue;
      bigger.assign(f, v);
    }
    auto rep2 = infer(bigger);
    if (!rep2.consistent()) continue;
    for (const auto& [f, v] : rep.closure.known()) ASSERT_EQ(rep2.closure.get(f), truth(v));
  }
  EXPECT_GT(consistent, 300u);
}

TEST(Infer, NoRuleFiresOnUnknownPremises) {
  for (const auto& r : rules()) {
    // all premises but one: nothing from this rule may appear
    for (std::size_t skip = 0; skip < r.premises.size(); ++skip) {
      FactSet s;
      for (std::size_t k = 0; k < r.premises.size(); ++k)
        if (k != skip) s.assign(r.premises[k].fact, r.premises[k].value);
      auto rep = infer(s);
      for (const auto& [f, d] : rep.derivations) ASSERT_NE(d.rule, r.id) << r.id;
      for (const auto& c : rep.contradictions) ASSERT_NE(c.rule, r.id) << r.id;
    }
  }
}

TEST(Analyze, HeisenbergNotOneFormal) {
  auto r = analyze_cdga(cdga::heisenberg(), "heisenberg");
  EXPECT_EQ(r.inference.closure.get(F::one_formal), Truth::no);
  EXPECT_EQ(r.inference.closure.get(F::cup_zero), Truth::yes);
  EXPECT_EQ(r.inference.closure.get(F::b1_ne_2), Truth::no);
  EXPECT_TRUE(r.inference.consistent());
  ASSERT_FALSE(r.verdicts.empty());
  EXPECT_EQ(r.verdicts[0].module, "cdga-massey");
  EXPECT_NE(r.inference.derivations.at(F::one_formal).source.find("computed"), std::string::npos);

  // torus: formal-looking, nothing forces a verdict on one_formal
  auto t = analyze_cdga(cdga::torus(2), "torus");
  EXPECT_EQ(t.inference.closure.get(F::one_formal), Truth::unknown);
  EXPECT_EQ(t.inference.closure.get(F::cup_zero), Truth::no);
}

TEST(Analyze, HeisenbergAsMappingTorus) {
  auto r = analyze_monodromy(IntegerMatrix{{Integer(1), Integer(1)}, {Integer(0), Integer(1)}},
                             {{F::one_formal, true}});
  ASSERT_FALSE(r.inference.consistent());
  EXPECT_EQ(r.inference.contradictions[0].rule, "R10");
}

TEST(Analyze, CompleteGraphRaag) {
  auto r = analyze_graph(graph::SimpleGraph::complete(4), false);
  EXPECT_EQ(r.inference.closure.get(F::kahler_group), Truth::yes);
  EXPECT_EQ(r.inference.closure.get(F::one_formal), Truth::yes);
  ASSERT_EQ(r.verdicts.size(), 1u);
  EXPECT_EQ(r.verdicts[0].citation.tag, "raag-kahler-classification");
  EXPECT_TRUE(r.inference.consistent());

  auto bb = analyze_graph(graph::SimpleGraph::cycle(4), true);
  EXPECT_EQ(bb.inference.closure.get(F::quasi_kahler_group), Truth::no);
  EXPECT_EQ(bb.inference.closure.get(F::one_formal), Truth::unknown);
}

TEST(Analyze, FamilyMonodromyObstructed) {
  auto r = analyze_monodromy(torus::family_block(2));
  bool found = false;
  for (const auto& v : r.verdicts) found = found || v.citation.tag == "monodromy-unit-eigenvalues";
  EXPECT_TRUE(found);
  EXPECT_EQ(r.inference.closure.get(F::jordan_block_ge_2), Truth::no);
  EXPECT_EQ(r.inference.closure.get(F::one_formal), Truth::yes);  // b1 = 1
}

TEST(Json, FactsRoundTrip) {
  std::mt19937_64 rng(73);
  for (int t = 0; t < 100; ++t) {
    auto s = random_facts(rng, 0.5);
    json j = json::object();
    for (const auto& [f, v] : s.known()) j[std::string(to_string(f))] = v;
    if (s.get(F::formal) == Truth::unknown) j["formal"] = nullptr;
    ASSERT_EQ(io::facts_from_json(j), s);
    json pairs = json::array();
    for (const auto& [f, v] : s.known()) pairs.push_back({to_string(f), v});
    ASSERT_EQ(io::facts_from_json(pairs), s);
  }
}

TEST(Json, ReportShape) {
  auto rep = infer({{F::closed_orientable_3mfld, true}, {F::b1_le_1, true}});
  json j = io::to_json(rep, true);
  EXPECT_TRUE(j["consistent"].get<bool>());
  EXPECT_TRUE(j["facts"]["formal"]["value"].get<bool>());
  EXPECT_EQ(j["facts"]["formal"]["source"], "R9");
  ASSERT_FALSE(j["derived"].empty());
  EXPECT_FALSE(j["derived"][0]["chain"][0]["citation"]["statement"].get<std::string>().empty());
}

TEST(Json, ModuleRoundTrips) {
  std::mt19937_64 rng(75);
  for (int t = 0; t < 30; ++t) {
    auto m = oracle::random_matrix(rng, 1 + t % 4, 1 + t % 3, 50);
    ASSERT_EQ(io::integer_matrix_from_json(io::to_json(m)), m);
    auto c = oracle::random_cup(rng, 2 + t % 3, 1 + t % 2);
    auto c2 = io::cup_data_from_json(io::to_json(c));
    for (std::size_t i = 0; i < c.b1(); ++i)
      for (std::size_t k = 0; k < c.b1(); ++k) ASSERT_EQ(c2.value(i, k), c.value(i, k));
  }
  IntPolynomial p{3, 0, -2, 1};
  EXPECT_EQ(io::polynomial_from_json(io::to_json(p)), p);
  auto g = graph::SimpleGraph::cycle(5);
  auto g2 = io::graph_from_json(io::to_json(g));
  EXPECT_EQ(g2.edges(), g.edges());
  auto K = graph::rp2_six_vertex();
  EXPECT_EQ(io::complex_from_json(io::to_json(K)), K);
  auto A = io::cdga_from_json(io::to_json(cdga::heisenberg()));
  auto H = cdga::cohomology(A);
  EXPECT_EQ(H.dim(1), 2u);
  EXPECT_EQ(H.dim(2), 2u);
  auto a = H.basis_class(1, 0), b = H.basis_class(1, 1);
  EXPECT_FALSE(cdga::massey_triple(A, H, a, a, b).vanishes);
  EXPECT_THROW(io::cdga_from_json(json::parse(R"({"degrees": {"a": 1}, "diff": {"b": {"a": 1}}})")), InputError);
}
