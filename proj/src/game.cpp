#include "netgame/game.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "netgame/bounds.hpp"
#include "netgame/search.hpp"

namespace netgame {

void GameConfig::validate() const {
  if (!(delta > 0.0) || delta > 1.0)
    throw std::invalid_argument("GameConfig: delta must lie in (0, 1]");
  if (!(e_star > 0.0)) throw std::invalid_argument("GameConfig: e_star must be positive");
  if (!(cost > 0.0)) throw std::invalid_argument("GameConfig: cost must be positive");
  if (!(tol > 0.0)) throw std::invalid_argument("GameConfig: tol must be positive");
}

double EffortProfile::total() const { return std::accumulate(x.begin(), x.end(), 0.0); }

double BenefitSpec::value(double y) const {
  return b0 + cost / lambda * -std::expm1(-lambda * (y - e_star));
}

double BenefitSpec::derivative(double y) const {
  return cost * std::exp(-lambda * (y - e_star));
}

double best_response(const Graph& g, const GameConfig& cfg, const EffortProfile& x, int node) {
  cfg.validate();
  double seen = 0.0;
  for (int w : g.neighbors(node)) seen += x.x.at(w);
  return std::max(0.0, cfg.e_star - cfg.delta * seen);
}

VerifyResult check_nash(const Graph& g, const GameConfig& cfg, const EffortProfile& x) {
  cfg.validate();
  if (static_cast<int>(x.x.size()) != g.node_count())
    throw std::invalid_argument("check_nash: dimension mismatch");
  std::vector<double> scaled(x.x.size());
  for (std::size_t i = 0; i < x.x.size(); ++i) scaled[i] = x.x[i] / cfg.e_star;
  return verify_solution(LcpInstance{g, cfg.delta}, scaled, cfg.tol);
}

bool is_nash(const Graph& g, const GameConfig& cfg, const EffortProfile& x) {
  return check_nash(g, cfg, x).ok;
}

EquilibriumSet enumerate_equilibria(const Graph& g, const GameConfig& cfg, int cap) {
  cfg.validate();
  auto enumerated = enumerate_solutions(LcpInstance{g, cfg.delta}, cfg.tol, cap);
  EquilibriumSet out;
  out.singular_supports = enumerated.singular_supports;
  for (auto& sol : enumerated.solutions) {
    EffortProfile p;
    p.x.reserve(sol.x.size());
    for (double v : sol.x) p.x.push_back(v * cfg.e_star);
    out.profiles.push_back(std::move(p));
  }
  return out;
}

std::optional<EffortProfile> construct_ice(const Graph& g, const GameConfig& cfg,
                                           const NodeSet& mis) {
  cfg.validate();
  auto ics = construct_ics(g, cfg.delta, mis, cfg.tol);
  if (!ics) return std::nullopt;
  EffortProfile p;
  p.x.reserve(ics->x.size());
  for (double v : ics->x) p.x.push_back(v * cfg.e_star);
  return p;
}

namespace {

// True when the support of x decomposes into exactly `count` pairwise
// independent cliques whose members all play e* / (1 + (|C|-1) delta).
bool is_ice_with_cliques(const Graph& g, const GameConfig& cfg, const EffortProfile& x,
                         int count) {
  std::vector<int> support;
  for (int v = 0; v < g.node_count(); ++v)
    if (x.x[v] > 10.0 * cfg.tol * cfg.e_star) support.push_back(v);
  if (support.empty()) return count == 0;
  NodeSet s(support);
  auto comps = connected_components(g.induced(s));
  if (static_cast<int>(comps.size()) != count) return false;
  for (const auto& comp : comps) {
    int k = comp.graph.node_count();
    if (comp.graph.edge_count() != k * (k - 1) / 2) return false;  // not a clique
    double expected = cfg.e_star / (1.0 + (k - 1) * cfg.delta);
    for (int local : comp.original_nodes) {
      double val = x.x[s.values()[local]];
      if (std::abs(val - expected) > 100.0 * cfg.tol * cfg.e_star) return false;
    }
  }
  return true;
}

}  // namespace

MaxPlayResult max_aggregate_play(const Graph& g, const GameConfig& cfg, int cap) {
  cfg.validate();
  auto eq = enumerate_equilibria(g, cfg, cap);
  MaxPlayResult out;
  if (eq.profiles.empty()) {
    out.diagnostics.push_back("no equilibrium found by support enumeration");
    return out;
  }
  double best = 0.0;
  for (const auto& p : eq.profiles) best = std::max(best, p.total());
  out.value = best;
  for (const auto& p : eq.profiles)
    if (p.total() >= best - 10.0 * cfg.tol * cfg.e_star) out.argmax.push_back(p);

  double threshold = eta(g, cap);
  if (cfg.delta >= threshold) {
    auto alpha = independence_number(g, cap);
    bool ice_found = false;
    for (const auto& p : out.argmax)
      if (is_ice_with_cliques(g, cfg, p, alpha.alpha)) ice_found = true;
    if (!ice_found) {
      std::ostringstream msg;
      msg << "delta >= eta but no maximizer is an independent-clique profile with " << alpha.alpha
          << " cliques";
      out.diagnostics.push_back(msg.str());
    }
    if (auto unique = unique_max_independent_set(g, cap)) {
      bool matches = false;
      for (const auto& p : out.argmax) {
        bool same = true;
        for (int v = 0; v < g.node_count(); ++v) {
          double want = unique->contains(v) ? cfg.e_star : 0.0;
          if (std::abs(p.x[v] - want) > 10.0 * cfg.tol * cfg.e_star) same = false;
        }
        if (same) matches = true;
      }
      if (!matches)
        out.diagnostics.push_back(
            "unique maximum independent set exists but no maximizer equals its "
            "characteristic profile");
    }
  }
  return out;
}

namespace {

// Normalized secant slope of the family as a function of u = lambda * span:
// (1 - exp(-u)) / u, strictly decreasing from 1 to 0.
double secant_slope(double u) { return -std::expm1(-u) / u; }

}  // namespace

BenefitSpec make_benefit(const GameConfig& cfg, int n, double sigma_target,
                         std::optional<double> b0) {
  cfg.validate();
  if (n < 2) throw std::invalid_argument("make_benefit: need at least two agents");
  if (!(sigma_target > 0.0) || !(sigma_target < 1.0))
    throw std::invalid_argument("make_benefit: sigma_target must lie in (0, 1)");
  double span = cfg.delta * (n - 1) * cfg.e_star;

  double lo = 1e-18, hi = 1.0;
  while (secant_slope(hi * span) > sigma_target) hi *= 2.0;
  while (secant_slope(lo * span) < sigma_target) lo *= 0.5;  // paranoia; slope(0+) -> 1
  for (int iter = 0; iter < 300 && (hi - lo) > 1e-12 * lo; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (secant_slope(mid * span) > sigma_target)
      lo = mid;
    else
      hi = mid;
  }
  BenefitSpec spec;
  spec.lambda = 0.5 * (lo + hi);
  spec.e_star = cfg.e_star;
  spec.cost = cfg.cost;
  spec.b0 = b0.value_or(cfg.cost * cfg.e_star);
  return spec;
}

double sigma_b(const BenefitSpec& spec, int n, double delta) {
  if (n < 2) throw std::invalid_argument("sigma_b: need at least two agents");
  double span = delta * (n - 1) * spec.e_star;
  double value = (spec.value(spec.e_star + span) - spec.value(spec.e_star)) /
                 (spec.cost * (n - 1) * spec.e_star * delta);
  if (!(value > 0.0) || !(value < 1.0))
    throw std::logic_error("sigma_b: value escaped (0, 1), benefit spec is inconsistent");
  return value;
}

double welfare(const Graph& g, const GameConfig& cfg, const BenefitSpec& spec,
               const EffortProfile& x) {
  if (static_cast<int>(x.x.size()) != g.node_count())
    throw std::invalid_argument("welfare: dimension mismatch");
  auto sums = closed_neighborhood_sums(g, cfg.delta, x.x);
  double w = 0.0;
  for (int v = 0; v < g.node_count(); ++v) w += spec.value(sums[v]) - cfg.cost * x.x[v];
  return w;
}

int domination_order(double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("domination_order: delta must be positive");
  return static_cast<int>(std::ceil(1.0 / delta - 1e-9));
}

std::vector<EffortProfile> specialized_equilibria(const Graph& g, const GameConfig& cfg,
                                                  int cap) {
  cfg.validate();
  int k = domination_order(cfg.delta);
  std::vector<EffortProfile> out;
  for (const auto& s : enumerate_maximal_independent_sets(g, cap)) {
    if (!is_k_dominating_independent(g, s, k)) continue;
    EffortProfile p;
    p.x.assign(g.node_count(), 0.0);
    for (int v : s) p.x[v] = cfg.e_star;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace netgame
