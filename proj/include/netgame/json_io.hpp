#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "netgame/bounds.hpp"
#include "netgame/game.hpp"
#include "netgame/graph.hpp"
#include "netgame/lcp.hpp"
#include "netgame/tree.hpp"

namespace netgame {

nlohmann::json graph_to_json(const Graph& g);
nlohmann::json config_to_json(const GameConfig& cfg);
nlohmann::json node_set_to_json(const NodeSet& s);

// {"delta": d, "tol": t, "solutions": [{"support": [...], "x": [...], "l1": v}]}
nlohmann::json solutions_to_json(double delta, double tol,
                                 const std::vector<LcpSolution>& solutions);

nlohmann::json profile_to_json(const EffortProfile& p);
nlohmann::json tree_structure_to_json(const TreeStructure& ts);
// Non-finite bounds are omitted from the object; `applicable` and the caveats
// carry the explanation.
nlohmann::json bounds_report_to_json(const BoundsReport& report);

// Accepts a bare JSON array of efforts or an object with an "x" array.
EffortProfile parse_profile(const std::string& text);

}  // namespace netgame
