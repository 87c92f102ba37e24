#include "netgame/json_io.hpp"

#include <cmath>

namespace netgame {

using nlohmann::json;

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  return json{{"n", g.node_count()}, {"edges", edges}};
}

json config_to_json(const GameConfig& cfg) {
  return json{{"delta", cfg.delta}, {"e_star", cfg.e_star}, {"cost", cfg.cost}, {"tol", cfg.tol}};
}

json node_set_to_json(const NodeSet& s) { return json(s.values()); }

json solutions_to_json(double delta, double tol, const std::vector<LcpSolution>& solutions) {
  json list = json::array();
  for (const auto& sol : solutions)
    list.push_back(json{{"support", node_set_to_json(sol.support)}, {"x", sol.x}, {"l1", sol.l1()}});
  return json{{"delta", delta}, {"tol", tol}, {"solutions", list}};
}

json profile_to_json(const EffortProfile& p) { return json(p.x); }

json tree_structure_to_json(const TreeStructure& ts) {
  json branches = json::array();
  for (const auto& b : ts.branches)
    branches.push_back(json{{"endpoint_a", b.endpoint_a},
                            {"endpoint_b", b.endpoint_b},
                            {"interior", node_set_to_json(b.interior)}});
  json per_center = json::object();
  for (int c : ts.centers) per_center[std::to_string(c)] = ts.leaf_branch_count(c);
  return json{{"kind", to_string(ts.kind)},
              {"centers", node_set_to_json(ts.centers)},
              {"branches", branches},
              {"branch_count", ts.branch_count()},
              {"listed_branch_count", ts.listed_branch_count()},
              {"odd_branch_count", ts.odd_branch_count()},
              {"leaf_branches_per_center", per_center}};
}

json bounds_report_to_json(const BoundsReport& report) {
  json out{{"quantity", to_string(report.quantity)},
           {"theorem_tags", report.theorem_tags},
           {"applicability", report.applicability},
           {"applicable", report.applicable},
           {"caveats", report.caveats}};
  if (std::isfinite(report.lower)) out["lower"] = report.lower;
  if (std::isfinite(report.upper)) out["upper"] = report.upper;
  if (report.exact) out["exact"] = *report.exact;
  if (report.sigma1_limit) out["sigma1_limit"] = *report.sigma1_limit;
  return out;
}

EffortProfile parse_profile(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GraphParseError(0, std::string("invalid profile JSON: ") + e.what());
  }
  const json* arr = nullptr;
  if (doc.is_array())
    arr = &doc;
  else if (doc.is_object() && doc.contains("x") && doc["x"].is_array())
    arr = &doc["x"];
  else
    throw GraphParseError(0, "profile must be a JSON array or an object with an \"x\" array");
  EffortProfile p;
  for (const auto& v : *arr) {
    if (!v.is_number()) throw GraphParseError(0, "profile entries must be numeric");
    p.x.push_back(v.get<double>());
  }
  return p;
}

}  // namespace netgame
