#pragma once

// JSON views of the library types. Needs nlohmann/json on the include path.

#include <json.hpp>

#include "propp/constructions.hpp"
#include "propp/extremal_search.hpp"
#include "propp/proof_audit.hpp"
#include "propp/property_p.hpp"
#include "propp/sumset_structure.hpp"

namespace propp {

using ojson = nlohmann::ordered_json;

inline ojson to_json(const Rational& r) { return ojson{{"num", r.num()}, {"den", r.den()}}; }

inline ojson to_json(const IntSet& s) { return ojson(s.elements()); }

inline ojson to_json(const Witness& w) { return ojson{{"z", w.z}, {"x", w.x}, {"y", w.y}}; }

inline ojson to_json(const CheckResult& c) {
  ojson j;
  j["name"] = c.name;
  j["lhs"] = to_json(c.lhs);
  j["rhs"] = to_json(c.rhs);
  j["relation"] = to_string(c.relation);
  j["holds"] = c.holds;
  j["anchor"] = c.anchor;
  j["kind"] = to_string(c.kind);
  j["hypothesis_met"] = c.hypothesis_met;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

inline ojson to_json(const std::vector<CheckResult>& cs) {
  ojson a = ojson::array();
  for (const auto& c : cs) a.push_back(to_json(c));
  return a;
}

inline ojson to_json(const MappedSet& m) {
  ojson a = ojson::array();
  for (const auto& e : m.entries)
    a.push_back({{"source", e.source}, {"exponent", e.exponent}, {"multiplier", to_json(e.multiplier)}, {"image", e.image}});
  return a;
}

inline ojson to_json(const APDescriptor& ap) {
  return ojson{{"start", ap.start}, {"diff", ap.diff}, {"length", ap.length}};
}

inline ojson to_json(const FreimanClassification& fc) {
  ojson j;
  j["expansion_holds"] = fc.expansion_holds;
  j["ap"] = fc.ap ? to_json(*fc.ap) : ojson(nullptr);
  j["s_size"] = fc.s_size;
  j["t_size"] = fc.t_size;
  j["sum_size"] = fc.sum_size;
  return j;
}

// Timing is left out so that identical runs print identical bytes.
inline ojson to_json(const SearchResult& r) {
  ojson j;
  j["n"] = r.n;
  j["best_size"] = r.best_size;
  j["best_set"] = to_json(r.best_set);
  j["optimal"] = r.optimal;
  j["nodes_explored"] = r.nodes_explored;
  return j;
}

inline ojson to_json(const AuditConfig& c) {
  return ojson{{"delta", to_json(c.delta)}, {"c", to_json(c.c_const)}, {"epsilon", to_json(c.epsilon)}};
}

inline ojson to_json(const CaseReport& r) {
  ojson j;
  j["n"] = r.n;
  j["set"] = to_json(r.set);
  j["path"] = r.path;
  j["config"] = to_json(r.config);
  j["checks"] = to_json(r.checks);
  ojson cons = ojson::array();
  for (const auto& c : r.constructions)
    cons.push_back({{"name", c.name}, {"size", c.elements.size()}, {"elements", to_json(c.elements)}});
  j["constructions"] = cons;
  j["unconditional_pass"] = r.unconditional_pass;
  return j;
}

}  // namespace propp
