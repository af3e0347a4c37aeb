#pragma once

#include <nlohmann/json.hpp>

#include "betti.hpp"
#include "ring_invariants.hpp"

namespace aslkit {

inline nlohmann::ordered_json to_json(const betti_table& t) {
  nlohmann::ordered_json j;
  j["num_vars"] = t.num_vars;
  auto entries = nlohmann::ordered_json::array();
  for (const auto& [k, v] : t.entries) {
    entries.push_back({{"i", k.first}, {"j", k.second}, {"beta", v}});
  }
  j["entries"] = std::move(entries);
  return j;
}

inline betti_table betti_from_json(const nlohmann::ordered_json& j) {
  betti_table t;
  t.num_vars = j.at("num_vars").get<int>();
  for (const auto& e : j.at("entries")) t.add(e.at("i").get<int>(), e.at("j").get<int>(), e.at("beta").get<long long>());
  return t;
}

inline nlohmann::ordered_json to_json(const ring_invariants_result& r) {
  nlohmann::ordered_json j;
  j["dim"] = r.dim;
  j["depth"] = r.depth;
  j["reg"] = r.reg;
  j["pd"] = r.pd;
  j["cm"] = r.cm;
  j["cm_type"] = r.cm_type;
  j["gorenstein"] = r.gorenstein;
  j["level"] = r.level;
  j["h_vector"] = r.h_vector;
  return j;
}

}  // namespace aslkit
