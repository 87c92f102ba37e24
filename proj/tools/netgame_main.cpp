// netgame: equilibrium analysis for public-goods games on networks.
//
// Exit codes: 0 success / profile verified, 1 violation or rejection,
// 2 usage or input error, 3 enumeration cap or work budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "netgame/bounds.hpp"
#include "netgame/game.hpp"
#include "netgame/graph.hpp"
#include "netgame/json_io.hpp"
#include "netgame/lcp.hpp"
#include "netgame/search.hpp"
#include "netgame/sweep.hpp"
#include "netgame/tree.hpp"

namespace {

using nlohmann::json;
using namespace netgame;

struct Options {
  std::string graph_path;
  double delta = 0.0;
  double e_star = 1.0;
  double cost = 1.0;
  double tol = kDefaultTol;
  double sigma_b_target = 0.5;
  std::optional<double> b0;
  double delta_min = 0.5;
  double delta_max = 1.0;
  int steps = 101;
  std::string format = "json";
  int cap = kDefaultEnumerationCap;
  long long budget = 50'000'000;
  std::string profile_path;
  std::vector<int> mis_override;
};

int default_cap() {
  if (const char* env = std::getenv("NETGAME_CAP")) {
    try {
      int cap = std::stoi(env);
      if (cap > 0) return cap;
    } catch (...) {
    }
    std::cerr << "warning: ignoring unparsable NETGAME_CAP\n";
  }
  return kDefaultEnumerationCap;
}

GameConfig make_config(const Options& opt) {
  GameConfig cfg{opt.delta, opt.e_star, opt.cost, opt.tol};
  cfg.validate();
  return cfg;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

void require_json_format(const Options& opt) {
  if (opt.format != "json")
    throw CLI::ValidationError("--format", "csv output is only defined for sweep");
}

int cmd_info(const Options& opt) {
  require_json_format(opt);
  Graph g = load_graph_file(opt.graph_path).graph;
  json doc;
  doc["graph"] = graph_to_json(g);
  json degrees = json::array();
  for (int v = 0; v < g.node_count(); ++v) degrees.push_back(g.degree(v));
  doc["degrees"] = degrees;
  doc["d_min"] = g.min_degree();
  doc["d_max"] = g.max_degree();
  if (g.node_count() >= 1 && g.node_count() <= opt.cap) {
    auto mis = independence_number(g, opt.cap);
    doc["alpha"] = mis.alpha;
    doc["alpha_witness"] = node_set_to_json(mis.witness);
    auto unique = unique_max_independent_set(g, opt.cap);
    doc["unique_max_independent_set"] = unique.has_value();
    if (unique) doc["unique_mis"] = node_set_to_json(*unique);
    doc["omega"] = clique_number(g, opt.cap);
    doc["eta"] = eta(g, opt.cap);
  } else {
    doc["note"] = "exact invariants skipped: node count exceeds cap";
  }
  doc["tree"] = tree_structure_to_json(tree_structure(g));
  emit(doc);
  return 0;
}

int cmd_enumerate(const Options& opt) {
  require_json_format(opt);
  Graph g = load_graph_file(opt.graph_path).graph;
  GameConfig cfg = make_config(opt);
  auto lcp = enumerate_solutions(LcpInstance{g, cfg.delta}, cfg.tol, opt.cap);
  json doc;
  doc["graph"] = graph_to_json(g);
  doc["cfg"] = config_to_json(cfg);
  doc["lcp"] = solutions_to_json(cfg.delta, cfg.tol, lcp.solutions);
  json profiles = json::array();
  for (const auto& sol : lcp.solutions) {
    EffortProfile p;
    for (double v : sol.x) p.x.push_back(v * cfg.e_star);
    profiles.push_back(profile_to_json(p));
  }
  doc["equilibria"] = profiles;
  doc["count"] = lcp.solutions.size();
  doc["singular_supports"] = lcp.singular_supports;
  emit(doc);
  return 0;
}

int cmd_max_play(const Options& opt) {
  require_json_format(opt);
  Graph g = load_graph_file(opt.graph_path).graph;
  GameConfig cfg = make_config(opt);
  auto result = max_aggregate_play(g, cfg, opt.cap);
  json doc;
  doc["cfg"] = config_to_json(cfg);
  doc["value"] = result.value;
  json argmax = json::array();
  for (const auto& p : result.argmax) argmax.push_back(profile_to_json(p));
  doc["argmax"] = argmax;
  doc["diagnostics"] = result.diagnostics;
  emit(doc);
  return 0;
}

int cmd_bounds(const Options& opt) {
  require_json_format(opt);
  auto loaded = load_graph_file(opt.graph_path);
  const Graph& g = loaded.graph;
  GameConfig cfg = make_config(opt);
  json doc;
  doc["cfg"] = config_to_json(cfg);
  doc["eta"] = eta(g, opt.cap);
  if (cfg.delta < 1.0)
    doc["aggregate_play"] = bounds_report_to_json(aggregate_bounds(g, cfg.delta, cfg.e_star, opt.cap));
  auto ts = tree_structure(g);
  if (ts.kind != TreeKind::not_a_tree)
    doc["tree_aggregate_play"] = bounds_report_to_json(tree_bounds(g, cfg.e_star));
  if (g.node_count() >= 2) {
    auto spec = make_benefit(cfg, g.node_count(), opt.sigma_b_target, opt.b0);
    doc["benefit"] = json{{"b0", spec.b0},
                          {"lambda", spec.lambda},
                          {"sigma_b", sigma_b(spec, g.node_count(), cfg.delta)}};
    doc["max_welfare"] = bounds_report_to_json(max_welfare_bounds(g, cfg, spec, opt.cap));
    if (ts.kind != TreeKind::not_a_tree && !ts.centers.empty())
      doc["tree_welfare"] = bounds_report_to_json(tree_welfare_bounds(g, cfg, spec));
    // perfect-substitutes weighted results, when asked for delta = 1 or when
    // the graph document carries node weights
    if (cfg.delta == 1.0 || loaded.weights) {
      std::vector<double> w = loaded.weights.value_or(std::vector<double>{});
      auto d1 = delta1_results(g, w, cfg, spec, opt.cap);
      json d1_doc;
      d1_doc["max_weighted_effort"] = d1.max_weighted_effort;
      d1_doc["witness_support"] = node_set_to_json(d1.witness_support);
      d1_doc["witness"] = profile_to_json(d1.witness);
      d1_doc["propagated_weights"] = d1.propagated_weights;
      if (d1.influential_limit_welfare) {
        d1_doc["influential_limit_welfare"] = *d1.influential_limit_welfare;
        d1_doc["influential_support"] = node_set_to_json(*d1.influential_support);
      }
      doc["delta_one"] = d1_doc;
    }
  }
  emit(doc);
  return 0;
}

int cmd_welfare(const Options& opt) {
  require_json_format(opt);
  Graph g = load_graph_file(opt.graph_path).graph;
  GameConfig cfg = make_config(opt);
  if (g.node_count() < 2)
    throw CLI::ValidationError("--graph", "welfare analysis needs at least two nodes");
  auto spec = make_benefit(cfg, g.node_count(), opt.sigma_b_target, opt.b0);
  auto eq = enumerate_equilibria(g, cfg, opt.cap);
  json doc;
  doc["cfg"] = config_to_json(cfg);
  doc["benefit"] = json{{"b0", spec.b0},
                        {"lambda", spec.lambda},
                        {"sigma_b", sigma_b(spec, g.node_count(), cfg.delta)}};
  json rows = json::array();
  for (const auto& p : eq.profiles) {
    json row;
    row["x"] = profile_to_json(p);
    row["total"] = p.total();
    row["welfare"] = welfare(g, cfg, spec, p);
    row["bounds"] = bounds_report_to_json(welfare_profile_bounds(g, cfg, spec, p, opt.cap));
    rows.push_back(row);
  }
  doc["equilibria"] = rows;
  doc["max_welfare_bounds"] = bounds_report_to_json(max_welfare_bounds(g, cfg, spec, opt.cap));
  emit(doc);
  return 0;
}

int cmd_sweep(const Options& opt) {
  Graph g = load_graph_file(opt.graph_path).graph;
  SweepOptions sweep_opt;
  sweep_opt.delta_min = opt.delta_min;
  sweep_opt.delta_max = opt.delta_max;
  sweep_opt.steps = opt.steps;
  sweep_opt.tol = opt.tol;
  sweep_opt.cap = opt.cap;
  sweep_opt.budget = opt.budget;
  auto rows = sweep_equilibria(g, opt.e_star, sweep_opt);
  if (opt.format == "csv") {
    std::cout << "support,delta_lo,delta_hi,play_at_lo,play_at_hi\n";
    for (const auto& row : rows) {
      std::ostringstream support;
      for (std::size_t i = 0; i < row.support.values().size(); ++i) {
        if (i) support << ' ';
        support << row.support.values()[i];
      }
      for (const auto& iv : row.intervals)
        std::cout << '"' << support.str() << "\"," << iv.delta_lo << ',' << iv.delta_hi << ','
                  << iv.play_lo << ',' << iv.play_hi << "\n";
    }
    return 0;
  }
  json doc;
  doc["delta_min"] = opt.delta_min;
  doc["delta_max"] = opt.delta_max;
  doc["steps"] = opt.steps;
  doc["e_star"] = opt.e_star;
  json out_rows = json::array();
  for (const auto& row : rows) {
    json intervals = json::array();
    for (const auto& iv : row.intervals)
      intervals.push_back(json{{"delta_lo", iv.delta_lo},
                               {"delta_hi", iv.delta_hi},
                               {"play_at_lo", iv.play_lo},
                               {"play_at_hi", iv.play_hi}});
    out_rows.push_back(json{{"support", node_set_to_json(row.support)}, {"intervals", intervals}});
  }
  doc["rows"] = out_rows;
  emit(doc);
  return 0;
}

int cmd_verify(const Options& opt) {
  require_json_format(opt);
  Graph g = load_graph_file(opt.graph_path).graph;
  GameConfig cfg = make_config(opt);
  std::ifstream in(opt.profile_path);
  if (!in) throw GraphParseError(0, "cannot open " + opt.profile_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  EffortProfile profile = parse_profile(buf.str());
  if (static_cast<int>(profile.x.size()) != g.node_count())
    throw GraphParseError(0, "profile length " + std::to_string(profile.x.size()) +
                                 " does not match node count " +
                                 std::to_string(g.node_count()));
  auto result = check_nash(g, cfg, profile);
  json doc;
  doc["cfg"] = config_to_json(cfg);
  doc["x"] = profile_to_json(profile);
  doc["is_nash"] = result.ok;
  if (!result.ok) doc["worst_violation"] = result.worst->describe();
  emit(doc);
  return result.ok ? 0 : 1;
}

int cmd_ice(const Options& opt) {
  require_json_format(opt);
  Graph g = load_graph_file(opt.graph_path).graph;
  GameConfig cfg = make_config(opt);
  NodeSet mis = opt.mis_override.empty() ? independence_number(g, opt.cap).witness
                                         : NodeSet(opt.mis_override);
  auto ics = construct_ics(g, cfg.delta, mis, cfg.tol, opt.cap);
  json doc;
  doc["cfg"] = config_to_json(cfg);
  doc["mis"] = node_set_to_json(mis);
  if (!ics) {
    doc["found"] = false;
    emit(doc);
    return 1;
  }
  doc["found"] = true;
  json cliques = json::array();
  for (const auto& c : ics->cliques) cliques.push_back(node_set_to_json(c));
  doc["cliques"] = cliques;
  EffortProfile p;
  for (double v : ics->x) p.x.push_back(v * cfg.e_star);
  doc["profile"] = profile_to_json(p);
  doc["total"] = p.total();
  emit(doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nash equilibria and structural bounds for public-goods games on networks"};
  app.require_subcommand(1);

  Options opt;
  opt.cap = default_cap();

  auto add_common = [&](CLI::App* cmd, bool needs_delta) {
    cmd->add_option("--graph", opt.graph_path, "graph file (edge list or JSON)")->required();
    auto* delta = cmd->add_option("--delta", opt.delta, "substitutability factor in (0, 1]");
    if (needs_delta) delta->required();
    cmd->add_option("--e-star", opt.e_star, "effort level where marginal benefit equals cost");
    cmd->add_option("--cost", opt.cost, "marginal cost");
    cmd->add_option("--tol", opt.tol, "numeric tolerance");
    cmd->add_option("--cap", opt.cap, "enumeration cap (overrides NETGAME_CAP)");
    cmd->add_option("--format", opt.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };
  auto add_benefit = [&](CLI::App* cmd) {
    cmd->add_option("--sigma-b", opt.sigma_b_target, "target benefit concavity in (0, 1)");
    cmd->add_option("--b0", opt.b0, "benefit level at e-star (default cost * e-star)");
  };

  auto* info = app.add_subcommand("info", "graph invariants and tree classification");
  add_common(info, false);

  auto* enumerate = app.add_subcommand("enumerate", "enumerate all equilibria");
  add_common(enumerate, true);

  auto* max_play = app.add_subcommand("max-play", "maximum aggregate play and maximizers");
  add_common(max_play, true);

  auto* bounds = app.add_subcommand("bounds", "closed-form aggregate-play and welfare bounds");
  add_common(bounds, true);
  add_benefit(bounds);

  auto* welfare_cmd = app.add_subcommand("welfare", "welfare of every equilibrium with bounds");
  add_common(welfare_cmd, true);
  add_benefit(welfare_cmd);

  auto* sweep = app.add_subcommand("sweep", "equilibrium supports across a delta grid");
  add_common(sweep, false);
  sweep->add_option("--delta-min", opt.delta_min, "grid start")->required();
  sweep->add_option("--delta-max", opt.delta_max, "grid end")->required();
  sweep->add_option("--steps", opt.steps, "grid points (>= 2)")->required();
  sweep->add_option("--budget", opt.budget, "work budget on steps * 2^n");

  auto* verify = app.add_subcommand("verify", "check a profile for equilibrium");
  add_common(verify, true);
  verify->add_option("profile", opt.profile_path, "JSON effort profile file")->required();

  auto* ice = app.add_subcommand("ice", "independent-clique equilibrium from a maximum independent set");
  add_common(ice, true);
  ice->add_option("--mis", opt.mis_override,
                  "maximum independent set to grow from (default: computed)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(info)) return cmd_info(opt);
    if (app.got_subcommand(enumerate)) return cmd_enumerate(opt);
    if (app.got_subcommand(max_play)) return cmd_max_play(opt);
    if (app.got_subcommand(bounds)) return cmd_bounds(opt);
    if (app.got_subcommand(welfare_cmd)) return cmd_welfare(opt);
    if (app.got_subcommand(sweep)) return cmd_sweep(opt);
    if (app.got_subcommand(verify)) return cmd_verify(opt);
    if (app.got_subcommand(ice)) return cmd_ice(opt);
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
