#pragma once

#include "formality/io/json.hpp"
#include "formality/report/analyze.hpp"

namespace formality::io {

inline json citation_json(const report::Citation& c, bool with_statement) {
  json j = {{"tag", c.tag}};
  if (with_statement) j["statement"] = c.statement;
  return j;
}

inline json literal_json(const report::Literal& l) { return {{"fact", report::to_string(l.fact)}, {"value", l.value}}; }

inline json chain_json(const std::vector<report::ChainStep>& chain, bool cite) {
  json a = json::array();
  for (const auto& s : chain) {
    const auto& r = report::rule_by_id(s.rule);
    json premises = json::array();
    for (const auto& p : s.premises) premises.push_back(report::literal_string(p));
    a.push_back({{"rule", s.rule},
                 {"premises", premises},
                 {"conclusion", report::literal_string(s.conclusion)},
                 {"citation", citation_json(r.citation, cite)}});
  }
  return a;
}

inline json to_json(const report::ObstructionReport& rep, bool cite) {
  json facts = json::object();
  for (auto f : report::all_facts()) {
    const auto t = rep.closure.get(f);
    if (t == report::Truth::unknown) continue;
    const auto& d = rep.derivations.at(f);
    facts[std::string(report::to_string(f))] = {{"value", t == report::Truth::yes}, {"source", d.source}};
  }
  json derived = json::array();
  for (auto f : rep.derived)
    derived.push_back({{"fact", report::literal_string(rep.derivations.at(f).literal)},
                       {"chain", chain_json(rep.chain(f), cite)}});
  json contradictions = json::array();
  for (const auto& c : rep.contradictions) {
    json chains = json::array();
    for (const auto& ch : c.chains) chains.push_back(chain_json(ch, cite));
    json premises = json::array();
    for (const auto& p : c.premises) premises.push_back(report::literal_string(p));
    contradictions.push_back({{"rule", c.rule},
                              {"description", c.description},
                              {"premises", premises},
                              {"citation", citation_json(report::rule_by_id(c.rule).citation, cite)},
                              {"chains", chains}});
  }
  json unused = json::array();
  for (auto f : rep.unused_inputs) unused.push_back(report::to_string(f));
  return {{"facts", facts},
          {"derived", derived},
          {"contradictions", contradictions},
          {"unused_inputs", unused},
          {"iterations", rep.iterations},
          {"consistent", rep.consistent()}};
}

inline json to_json(const report::AnalysisReport& r, bool cite) {
  json details = json::object();
  for (const auto& [k, v] : r.details) details[k] = v;
  json verdicts = json::array();
  for (const auto& v : r.verdicts) {
    json j = {{"module", v.module}, {"statement", v.statement}};
    if (!v.citation.tag.empty()) j["citation"] = citation_json(v.citation, cite);
    verdicts.push_back(std::move(j));
  }
  return {{"subject", r.subject}, {"details", details}, {"verdicts", verdicts}, {"inference", to_json(r.inference, cite)}};
}

/// {"fact": true|false|null, ...} or [["fact", bool], ...]; null means
/// unknown. The list form can state a fact twice, which is rejected when the
/// values disagree.
inline report::FactSet facts_from_json(const json& j) {
  const json& body = j.is_object() && j.contains("facts") ? j.at("facts") : j;
  report::FactSet fs;
  auto put = [&](const std::string& name, const json& v) {
    const auto f = report::parse_fact(name);
    if (v.is_null()) return;
    if (!v.is_boolean()) throw InputError("fact " + name + " must be true, false or null");
    fs.assign(f, v.get<bool>());
  };
  if (body.is_object()) {
    for (const auto& [name, v] : body.items()) put(name, v);
  } else if (body.is_array()) {
    for (const auto& p : body) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string()) throw InputError("fact entries must be [name, value]");
      put(p[0].get<std::string>(), p[1]);
    }
  } else {
    throw InputError("facts must be an object or a list of [name, value] pairs");
  }
  return fs;
}

}  // namespace formality::io
