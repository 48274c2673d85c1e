#include "ostro/report_json.hpp"

namespace ostro {

Json to_json(const Enclosure& e) {
  return Json{{"lo", e.lo}, {"hi", e.hi}, {"center", e.center()}, {"width", e.width()}};
}

Json to_json(const EnclosureReport& r) {
  Json j;
  j["enclosure"] = to_json(r.enclosure);
  j["point_used"] = {r.point_used.x, r.point_used.y};
  j["bounds_used"] = {r.bounds_used.lower(), r.bounds_used.upper()};
  j["bounds_estimated"] = r.bounds_estimated;
  j["rigorous"] = r.rigorous;
  j["cells"] = r.cells;
  j["radius"] = r.radius;
  j["quadrature_padding"] = r.quadrature_padding;
  j["per_cell_width"] = r.per_cell_width;
  return j;
}

Json to_json(const IdentityReport& r) {
  Json j;
  j["oracle"] = r.oracle_value;
  j["derived"] = r.derived_value;
  j["verbatim"] = r.verbatim_value;
  Json quads = Json::array();
  for (const auto& q : r.per_quadrant)
    quads.push_back({{"quadrant", std::string(to_string(q.quadrant))},
                     {"oracle", q.oracle},
                     {"derived", q.derived},
                     {"verbatim", q.verbatim}});
  j["per_quadrant"] = quads;
  j["max_abs_discrepancy_derived"] = r.max_abs_discrepancy_derived;
  j["max_abs_discrepancy_verbatim"] = r.max_abs_discrepancy_verbatim;
  j["tol"] = r.tol;
  j["ok"] = r.ok;
  return j;
}

Json to_json(const ComparisonReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"rule", row.rule},
                    {"lhs", row.lhs},
                    {"rhs", row.rhs},
                    {"width", row.width},
                    {"violated", row.violated}});
  return Json{{"lambda", r.lambda}, {"rows", rows}};
}

Json to_json(const RuleOutcome& o) {
  return Json{{"lhs", o.lhs}, {"rhs", o.rhs}, {"slack", o.slack}, {"satisfied", o.satisfied}};
}

Json to_json(const CaseInput& c) {
  Json j;
  j["source"] = c.source;
  j["trial_index"] = c.trial_index;
  j["trial_seed"] = c.trial_seed;
  j["expr"] = c.expr;
  j["rect"] = c.rect;
  j["point"] = c.point;
  j["bounds"] = c.bounds;
  j["lambda"] = c.lambda ? Json(*c.lambda) : Json(nullptr);
  return j;
}

CaseInput case_input_from_json(const Json& j) {
  CaseInput c;
  c.source = j.at("source").get<std::string>();
  c.trial_index = j.at("trial_index").get<long>();
  c.trial_seed = j.at("trial_seed").get<std::uint64_t>();
  c.expr = j.at("expr").get<std::string>();
  c.rect = j.at("rect").get<std::array<double, 4>>();
  c.point = j.at("point").get<std::array<double, 2>>();
  c.bounds = j.at("bounds").get<std::array<double, 2>>();
  if (!j.at("lambda").is_null()) c.lambda = j.at("lambda").get<double>();
  return c;
}

Json to_json(const RuleTally& t) {
  Json j;
  j["rule"] = t.rule;
  j["lambda"] = t.lambda ? Json(*t.lambda) : Json(nullptr);
  j["trials"] = t.trials;
  j["violations"] = t.violations;
  j["raw_violations"] = t.raw_violations;
  j["worst_excess"] = t.trials > 0 ? Json(t.worst_excess) : Json(nullptr);
  j["max_ratio"] = t.max_ratio;
  j["worst_outcome"] = t.trials > 0 ? to_json(t.worst_outcome) : Json(nullptr);
  j["worst_case"] = t.trials > 0 ? to_json(t.worst_case) : Json(nullptr);
  return j;
}

Json to_json(const VerifyReport& r) {
  Json corpus;
  corpus["generator"] = "xorshift64* seeded via splitmix64; trial seed splitmix64(seed ^ splitmix64(i))";
  corpus["seed"] = r.options.seed;
  corpus["trials"] = r.options.trials;
  corpus["max_degree"] = r.options.degree;
  corpus["coefficients"] = {-1.0, 1.0};
  corpus["bounds"] = "monomial interval enclosure of the exact derivative";
  corpus["lambdas"] = r.options.lambdas;
  corpus["fixtures"] = r.fixtures;
  Json rules = Json::array();
  for (const auto& t : r.tallies) rules.push_back(to_json(t));
  Json j;
  j["tool_version"] = r.tool_version;
  j["corpus"] = corpus;
  j["slack_rel"] = r.options.slack_rel;
  j["rules"] = rules;
  return j;
}

}  // namespace ostro
