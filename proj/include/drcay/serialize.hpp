#pragma once

// JSON views of reports. Key order is fixed (ordered_json) so output is
// byte-stable.

#include <string>
#include <vector>

#include <json.hpp>

#include "drcay/classify.hpp"
#include "drcay/designs.hpp"

namespace drcay {

using Json = nlohmann::ordered_json;

inline Json to_json(const IntersectionArray& a) {
  return Json{{"b", a.b}, {"c", a.c}, {"a", a.a}, {"k", a.k}, {"text", a.to_string()}};
}

inline Json set_json(const Group& g, const Bits& s) { return Json(g.format_set(s)); }

inline Json optional_json(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }

inline Json to_json(const Group& g, const CensusRecord& r) {
  return Json{{"set", set_json(g, r.set)},
              {"orbitSize", r.orbit_size},
              {"family", r.family.to_string()},
              {"array", r.array.to_string()},
              {"flags",
               {{"primitive", r.primitive},
                {"bipartite", r.bipartite},
                {"antipodal", r.antipodal},
                {"schur", optional_json(r.schur)},
                {"modulePrimitive", optional_json(r.module_primitive)},
                {"fourier", optional_json(r.fourier)}}}};
}

inline Json to_json(const CensusReport& rep) {
  const Group g = Group::parse(rep.group);
  Json families = Json::object();
  for (const auto& [name, fc] : rep.families)
    families[name] = Json{{"sets", fc.sets}, {"orbits", fc.orbits}, {"arrays", std::vector<std::string>(fc.arrays.begin(), fc.arrays.end())}};
  Json records = Json::array();
  for (const auto& r : rep.records) records.push_back(to_json(g, r));
  return Json{{"group", rep.group},
              {"mode", rep.mode},
              {"totals",
               {{"symmetricSets", rep.symmetric_sets},
                {"connected", rep.connected},
                {"drgSets", rep.drg_sets},
                {"orbits", rep.orbits},
                {"parameterClasses", rep.parameter_classes},
                {"antipodalNonBipartiteD3", rep.antipodal_non_bipartite_d3}}},
              {"families", families},
              {"records", records},
              {"anomalies", rep.anomalies},
              {"reviewNotes", rep.review_notes}};
}

inline Json to_json(const DifferenceSetCertificate& c, const Group& g) {
  return Json{{"group", c.group}, {"set", set_json(g, c.set)}, {"v", c.v}, {"k", c.k},
              {"lambda", c.lambda}, {"n", c.n}, {"nontrivial", c.nontrivial}};
}

inline Json to_json(const VerificationReport& r) {
  return Json{{"ok", r.ok}, {"checks", r.checks}, {"firstFailure", r.ok ? Json(nullptr) : Json(r.first_failure)}};
}

inline Json to_json(const BipartiteConstruction& r) {
  Json j{{"n", r.n},
         {"group", r.group.spec_string()},
         {"connectionSet", set_json(r.group, r.connection_set)},
         {"connected", r.connected},
         {"drg", r.array.has_value()},
         {"array", r.array ? Json(r.array->to_string()) : Json(nullptr)},
         {"family", r.array ? Json(r.family.to_string()) : Json(nullptr)},
         {"bipartite", r.bipartite},
         {"antipodal", r.antipodal},
         {"shiftedDifferenceSet", r.shifted ? to_json(*r.shifted, r.group) : Json(nullptr)},
         {"predictionHolds", r.prediction_holds}};
  return j;
}

}  // namespace drcay
