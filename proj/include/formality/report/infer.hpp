#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "formality/report/rules.hpp"

namespace formality::report {

/// How a fact value entered the closure.
struct Derivation {
  Literal literal;
  std::string rule;               // empty for input or computed facts
  std::vector<Literal> premises;  // premises of `rule`
  std::string source;             // "input", "computed: ...", or the rule id
};

struct ChainStep {
  std::string rule;
  std::vector<Literal> premises;
  Literal conclusion;
};

struct Contradiction {
  std::string rule;
  std::string description;
  std::vector<Literal> premises;
  std::vector<std::vector<ChainStep>> chains;  // one per premise, or both sides of a clash
};

struct ObstructionReport {
  FactSet inputs;
  FactSet closure;
  std::map<Fact, Derivation> derivations;
  std::vector<Fact> derived;  // in derivation order, inputs excluded
  std::vector<Contradiction> contradictions;
  std::vector<Fact> unused_inputs;
  std::size_t iterations = 0;

  bool consistent() const { return contradictions.empty(); }

  /// Rule steps leading to the current value of f, premises first.
  std::vector<ChainStep> chain(Fact f) const {
    std::vector<ChainStep> out;
    std::set<Fact> seen;
    collect(f, out, seen);
    return out;
  }

 private:
  void collect(Fact f, std::vector<ChainStep>& out, std::set<Fact>& seen) const {
    if (!seen.insert(f).second) return;
    auto it = derivations.find(f);
    if (it == derivations.end() || it->second.rule.empty()) return;
    for (const auto& p : it->second.premises) collect(p.fact, out, seen);
    out.push_back({it->second.rule, it->second.premises, it->second.literal});
  }
};

/// Forward chaining to a fixpoint. Rules fire only when every premise is known
/// and matches; a derived value never overwrites a known one, a clash is
/// reported as a contradiction instead. `computed` carries facts established
/// by module computations, each with a short provenance note.
inline ObstructionReport infer(const FactSet& facts, const std::map<Fact, std::string>& computed = {}) {
  ObstructionReport rep;
  rep.inputs = facts;
  rep.closure = facts;
  for (const auto& [f, v] : facts.known()) {
    auto c = computed.find(f);
    rep.derivations[f] = {{f, v}, "", {}, c == computed.end() ? "input" : "computed: " + c->second};
  }
  std::set<std::string> fired_contradictions;
  std::set<Fact> used;

  auto chains_of = [&](const std::vector<Literal>& lits) {
    std::vector<std::vector<ChainStep>> out;
    for (const auto& l : lits) out.push_back(rep.chain(l.fact));
    return out;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    ++rep.iterations;
    for (const Rule& r : rules()) {
      if (!std::all_of(r.premises.begin(), r.premises.end(), [&](const Literal& l) { return rep.closure.holds(l); }))
        continue;
      for (const auto& p : r.premises) used.insert(p.fact);
      if (!r.conclusion) {
        if (fired_contradictions.insert(r.id).second)
          rep.contradictions.push_back({r.id, rule_string(r) + " [" + r.citation.tag + "]", r.premises,
                                        chains_of(r.premises)});
        continue;
      }
      const Literal& c = *r.conclusion;
      const Truth now = rep.closure.get(c.fact);
      if (now == Truth::unknown) {
        rep.closure.set(c.fact, truth(c.value));
        rep.derivations[c.fact] = {c, r.id, r.premises, r.id};
        rep.derived.push_back(c.fact);
        changed = true;
      } else if (now != truth(c.value)) {
        used.insert(c.fact);
        const std::string key = r.id + ":" + std::string(to_string(c.fact));
        if (fired_contradictions.insert(key).second) {
          auto chains = chains_of(r.premises);
          chains.push_back(rep.chain(c.fact));
          auto premises = r.premises;
          premises.push_back({c.fact, !c.value});
          rep.contradictions.push_back({r.id,
                                        rule_string(r) + " [" + r.citation.tag + "] clashes with " +
                                            literal_string({c.fact, !c.value}) + " (" +
                                            rep.derivations[c.fact].source + ")",
                                        premises, std::move(chains)});
        }
      }
    }
  }
  for (const auto& [f, v] : facts.known())
    if (!used.count(f)) rep.unused_inputs.push_back(f);
  return rep;
}

/// Re-applies the chain for f starting from the inputs alone; true when every
/// step's premises hold at the time it fires and the end value matches.
inline bool replay(const ObstructionReport& rep, Fact f) {
  FactSet state = rep.inputs;
  for (const auto& step : rep.chain(f)) {
    const Rule& r = rule_by_id(step.rule);
    if (r.premises != step.premises || !r.conclusion || !(*r.conclusion == step.conclusion)) return false;
    for (const auto& p : r.premises)
      if (!state.holds(p)) return false;
    if (state.get(step.conclusion.fact) == Truth::unknown) state.set(step.conclusion.fact, truth(step.conclusion.value));
  }
  return state.get(f) == rep.closure.get(f);
}

}  // namespace formality::report
