#include "sqenergy/serialize.hpp"

#include <cmath>

#include "json.hpp"

namespace sqe {

namespace {

using nlohmann::json;

double r6(double x) {
  if (!std::isfinite(x)) return x;
  const double r = std::round(x * 1e6) / 1e6;
  return r == 0.0 ? 0.0 : r;
}

json real(double x) { return std::isfinite(x) ? json(r6(x)) : json(nullptr); }

json extremum(const Extremum& e) {
  return {{"value", real(e.value)}, {"graph6", e.graph6}, {"unique", e.unique()}};
}

}  // namespace

std::string to_json(const BoundCertificate& c) {
  json w = json::object();
  for (const auto& [k, v] : c.witness.sets) w[k] = v;
  for (const auto& [k, v] : c.witness.values) w[k] = real(v);
  for (const auto& [k, v] : c.witness.labels) w[k] = v;
  json j = {{"rule", rule_name(c.rule)},
            {"target", target_name(c.target)},
            {"bound", real(c.bound_value)},
            {"witness", std::move(w)},
            {"conclusive", c.conclusive}};
  return j.dump();
}

std::string to_json(const SurveyRecord& r) {
  json j = {{"graph6", r.graph6},
            {"n", r.n},
            {"m", r.m},
            {"s_plus", real(r.s_plus)},
            {"s_minus", real(r.s_minus)},
            {"energy", real(r.energy)},
            {"inertia", {r.inertia.positive, r.inertia.zero, r.inertia.negative}},
            {"bipartite", r.bipartite},
            {"fragile", r.fragile},
            {"conjecture_ok", {r.conjecture_ok.first, r.conjecture_ok.second}},
            {"certificates", r.certificates}};
  return j.dump();
}

std::string to_json(const SurveyReport& r) {
  json j = {{"n", r.n},
            {"total", r.total},
            {"s_plus_gt", r.s_plus_gt},
            {"s_minus_gt", r.s_minus_gt},
            {"equal", r.equal},
            {"bipartite", r.bipartite},
            {"nonbipartite_equal", r.nonbipartite_equal},
            {"min_s_plus", extremum(r.min_s_plus)},
            {"min_s_minus", extremum(r.min_s_minus)},
            {"min_slack_plus", real(r.min_slack_plus)},
            {"min_slack_minus", real(r.min_slack_minus)},
            {"conjecture_failures", r.conjecture_failures},
            {"fragile", r.fragile},
            {"min_near_rounding_boundary", r.min_near_rounding_boundary}};
  return j.dump();
}

}  // namespace sqe
