#pragma once

// JSON encodings. Orders are canonical so identical inputs produce
// byte-identical output.

#include <string>
#include <vector>

#include <json.hpp>

#include "splint/branch.hpp"
#include "splint/error.hpp"
#include "splint/rootsys.hpp"
#include "splint/rules.hpp"
#include "splint/schur.hpp"
#include "splint/weightlat.hpp"

namespace splint {

using nlohmann::json;

inline json to_json(const FormalCharacter& c) {
  json terms = json::array();
  for (const auto& [w, m] : c.sorted_terms()) terms.push_back({{"w2", w.doubled_coords()}, {"c", m}});
  return {{"rank", c.rank()}, {"terms", std::move(terms)}};
}

inline FormalCharacter character_from_json(const json& j) {
  const int rank = j.at("rank").get<int>();
  if (rank < 1 || rank > kMaxRank) throw Error(ErrorCode::RankMismatch, "bad rank in character JSON");
  FormalCharacter c(rank);
  for (const auto& t : j.at("terms")) {
    const auto w2 = t.at("w2").get<std::vector<int>>();
    if (static_cast<int>(w2.size()) != rank) throw Error(ErrorCode::RankMismatch, "term of wrong rank");
    c.add(WeightVector::from_doubled(w2), t.at("c").get<std::int64_t>());
  }
  return c;
}

inline json summands_json(const Summands& s) {
  json out = json::array();
  for (const auto& [nu, m] : s) out.push_back({{"nu", nu}, {"m", m}});
  return out;
}

inline json to_json(const BranchingResult& r) {
  return {{"case", r.case_tag},
          {"ambient", r.ambient_weight.system},
          {"lambda", r.ambient_weight.coeffs},
          {"summands", summands_json(r.summands)},
          {"coefficient_sum", r.coefficient_sum},
          {"dim_check", r.dim_check}};
}

inline json to_json(const RuleReport& r) {
  json out = to_json(r.rule_result);
  out["rule"] = r.rule;
  out["oracle_summands"] = summands_json(r.oracle_result.summands);
  out["equal"] = r.equal;
  out["expected"] = r.expected;
  return out;
}

inline json to_json(const SchurSum& s) {
  json out = json::array();
  for (const auto& [idx, c] : s.terms()) out.push_back({{"a", idx.a}, {"b", idx.b}, {"c", c}});
  return out;
}

inline json to_json(const RootSystem& rs) {
  auto vecs = [](const std::vector<WeightVector>& vs) {
    json out = json::array();
    for (const auto& v : vs) out.push_back(v.doubled_coords());
    return out;
  };
  json form = json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    json row = json::array();
    for (int j = 0; j < rs.rank(); ++j) row.push_back(rs.form(i, j));
    form.push_back(std::move(row));
  }
  return {{"label", rs.label()},
          {"rank", rs.rank()},
          {"simple_roots", vecs(rs.simple_roots())},
          {"positive_roots", vecs(rs.positive_roots())},
          {"fundamental_weights", vecs(rs.fundamental_weights())},
          {"rho", rs.rho().doubled_coords()},
          {"form", std::move(form)},
          {"form_scale", rs.form_scale()},
          {"weyl_order", rs.weyl().order()}};
}

}  // namespace splint
