#include "netgame/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "netgame/search.hpp"
#include "netgame/tree.hpp"

namespace netgame {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::string to_string(Quantity q) {
  return q == Quantity::aggregate_play ? "aggregate_play" : "welfare";
}

double eta(const Graph& g, int cap) {
  if (g.node_count() < 1) throw std::invalid_argument("eta: empty graph");
  double omega = clique_number(g, cap);
  if (omega <= 1.0) return 0.0;  // edgeless
  double alpha = independence_number(g, cap).alpha;
  double clique_term =
      (omega - 3.0 + std::sqrt((omega - 3.0) * (omega - 3.0) + 4.0 * (omega - 1.0))) /
      (2.0 * (omega - 1.0));
  double mix_term = (alpha * (omega - 1.0) - omega) / (alpha * (omega - 1.0));
  return std::max(clique_term, mix_term);
}

BoundsReport aggregate_bounds(const Graph& g, double delta, double e_star, int cap) {
  if (!(delta > 0.0) || !(delta < 1.0))
    throw std::invalid_argument("aggregate_bounds: delta must lie in (0, 1)");
  if (!(e_star > 0.0)) throw std::invalid_argument("aggregate_bounds: e_star must be positive");
  int n = g.node_count();
  auto mis = independence_number(g, cap);
  double alpha = mis.alpha;
  double threshold = eta(g, cap);

  BoundsReport report;
  report.quantity = Quantity::aggregate_play;
  report.lower = e_star * alpha;
  report.theorem_tags.push_back("Thm3.2");
  report.applicability = "0 < delta < 1";

  if (mis.alpha == 1) {
    // complete graph: the unique equilibrium is uniform
    report.exact = n * e_star / (1.0 + (n - 1) * delta);
    report.upper = *report.exact;
    report.lower = std::min(report.lower, *report.exact);
    report.theorem_tags.push_back("Ex3.1");
    report.caveats.push_back(
        "alpha = 1: interval formula undefined; exact uniform-equilibrium value "
        "n e*/(1 + (n-1) delta) reported instead (Ex3.1)");
    return report;
  }

  if (delta >= threshold) {
    report.upper = e_star * (alpha + 1.0 + 1.0 / (alpha - 1.0));
    report.theorem_tags.push_back("Thm3.5");
    std::ostringstream cond;
    cond << "upper requires delta >= eta(G) = " << threshold;
    report.applicability += "; " + cond.str();
    if (unique_max_independent_set(g, cap)) {
      report.exact = e_star * alpha;
      report.theorem_tags.push_back("Thm3.6");
      report.caveats.push_back("unique maximum independent set: maximum play is exactly e* alpha");
    }
  } else {
    std::ostringstream note;
    note << "delta = " << delta << " < eta(G) = " << threshold
         << ": no upper bound available outside the theorem range";
    report.caveats.push_back(note.str());
  }
  return report;
}

namespace {

// Shared core of the welfare sandwiches: base + coefficient * total effort.
// The lower coefficient comes from the secant slope sigma_b, the upper one
// from the tangent slope at e* (slope c); a secant-discounted upper bound
// would be violated by full-support equilibria, where every node sits exactly
// at e* and welfare equals base + c delta * sum of degree-weighted efforts.
struct WelfareTerms {
  double base;         // n (b(e*) - c e*)
  double lower_coeff;  // c ((d_min delta + 1) sigma_b - 1)
  double upper_coeff;  // c d_max delta
  double sigma;
};

WelfareTerms welfare_terms(const Graph& g, const GameConfig& cfg, const BenefitSpec& spec) {
  int n = g.node_count();
  double sigma = sigma_b(spec, n, cfg.delta);
  WelfareTerms t;
  t.sigma = sigma;
  t.base = n * (spec.value(cfg.e_star) - cfg.cost * cfg.e_star);
  t.lower_coeff = cfg.cost * ((g.min_degree() * cfg.delta + 1.0) * sigma - 1.0);
  t.upper_coeff = cfg.cost * g.max_degree() * cfg.delta;
  return t;
}

}  // namespace

BoundsReport welfare_profile_bounds(const Graph& g, const GameConfig& cfg,
                                    const BenefitSpec& spec, const EffortProfile& x, int cap) {
  cfg.validate();
  auto nash = check_nash(g, cfg, x);
  if (!nash.ok)
    throw std::invalid_argument("welfare_profile_bounds: profile is not an equilibrium (" +
                                nash.worst->describe() + ")");
  BoundsReport report;
  report.quantity = Quantity::welfare;
  report.theorem_tags = {"Lem3.7-lower", "Lem3.7-upper"};
  double threshold = eta(g, cap);
  std::ostringstream cond;
  cond << "x is an equilibrium; delta >= eta(G) = " << threshold;
  report.applicability = cond.str();
  if (cfg.delta < threshold) {
    report.applicable = false;
    report.caveats.push_back("delta < eta(G): interval not covered by the lemma");
    return report;
  }
  auto t = welfare_terms(g, cfg, spec);
  double total = x.total();
  report.lower = t.base + t.lower_coeff * total;
  report.upper = t.base + t.upper_coeff * total;
  return report;
}

BoundsReport max_welfare_bounds(const Graph& g, const GameConfig& cfg, const BenefitSpec& spec,
                                int cap) {
  cfg.validate();
  BoundsReport report;
  report.quantity = Quantity::welfare;
  double threshold = eta(g, cap);
  std::ostringstream cond;
  cond << "delta >= eta(G) = " << threshold;
  report.applicability = cond.str();
  if (cfg.delta < threshold) {
    report.applicable = false;
    report.caveats.push_back("delta < eta(G): not covered; no extrapolated numbers reported");
    return report;
  }

  auto t = welfare_terms(g, cfg, spec);
  auto mis = independence_number(g, cap);
  double alpha = mis.alpha;
  bool unique = unique_max_independent_set(g, cap).has_value();
  double play_low, play_high;  // known range of the maximum aggregate play, in e* units
  if (mis.alpha == 1) {
    play_low = play_high = g.node_count() / (1.0 + (g.node_count() - 1) * cfg.delta);
    report.caveats.push_back("alpha = 1: exact uniform-equilibrium aggregate used (Ex3.1)");
    report.theorem_tags.push_back("Ex3.1");
  } else if (unique) {
    play_low = play_high = alpha;
    report.theorem_tags.push_back("Thm3.8d");
    report.caveats.push_back("unique maximum independent set: both bounds use factor alpha");
  } else {
    play_low = alpha;
    play_high = alpha + 1.0 + 1.0 / (alpha - 1.0);
  }

  report.upper = t.base + t.upper_coeff * cfg.e_star * play_high;
  report.theorem_tags.insert(report.theorem_tags.begin(), "Thm3.8a");
  double split = 1.0 / (1.0 + g.min_degree() * cfg.delta);
  if (t.sigma <= split) {
    // nonpositive lower coefficient: the larger play factor gives the bound
    report.lower = t.base + t.lower_coeff * cfg.e_star * play_high;
    report.theorem_tags.push_back("Thm3.8b");
  } else {
    report.lower = t.base + t.lower_coeff * cfg.e_star * play_low;
    report.theorem_tags.push_back("Thm3.8c");
  }

  if (g.min_degree() == g.max_degree() && g.node_count() <= cap) {
    auto play = max_aggregate_play(g, cfg, cap);
    report.sigma1_limit = t.base + cfg.cost * g.max_degree() * cfg.delta * play.value;
    report.theorem_tags.push_back("Thm3.8e");
    report.caveats.push_back(
        "regular graph: sigma1_limit is the exact welfare limit as sigma_b -> 1, "
        "computed as base + c d delta E* (derivation form, without the extra e* "
        "factor the theorem statement carries)");
  }
  return report;
}

BoundsReport line_bounds(int n, double e_star) {
  if (n < 1) throw std::invalid_argument("line_bounds: need at least one node");
  BoundsReport report;
  report.quantity = Quantity::aggregate_play;
  report.lower = n / 2.0 * e_star;
  report.upper = (n + 1) / 2.0 * e_star;
  report.theorem_tags = {"Thm4.1"};
  report.applicability = "line network, delta >= 1/2";
  if (n % 2 == 1) {
    report.exact = report.upper;
    report.caveats.push_back("odd node count: upper bound is achieved");
  }
  return report;
}

StarEquilibrium star_equilibrium(int n_peripherals, const GameConfig& cfg) {
  cfg.validate();
  if (n_peripherals < 3) throw std::invalid_argument("star_equilibrium: need >= 3 peripherals");
  if (cfg.delta * n_peripherals < 1.0)
    throw std::invalid_argument("star_equilibrium: requires delta >= 1/n");
  StarEquilibrium out;
  out.profile.x.assign(n_peripherals + 1, cfg.e_star);
  out.profile.x[0] = 0.0;  // center free-rides
  out.report.quantity = Quantity::aggregate_play;
  out.report.exact = n_peripherals * cfg.e_star;
  out.report.lower = out.report.upper = *out.report.exact;
  out.report.theorem_tags = {"Thm4.2"};
  out.report.applicability = "star network, delta >= 1/n; the equilibrium is unique";
  return out;
}

BoundsReport starlike_bounds(const Graph& g, double e_star) {
  auto ts = tree_structure(g);
  if (ts.kind != TreeKind::star && ts.kind != TreeKind::starlike)
    throw std::invalid_argument("starlike_bounds: graph is not starlike");
  int n = g.node_count();
  int m = ts.branch_count();
  int r = ts.odd_branch_count();
  BoundsReport report;
  report.quantity = Quantity::aggregate_play;
  report.lower = (n + r - 1) / 2.0 * e_star;
  report.upper = (n + m - 1) / 2.0 * e_star;
  report.theorem_tags = {"Thm4.3"};
  report.applicability = "starlike tree, delta >= 1/2";
  if (ts.kind == TreeKind::star) report.theorem_tags.push_back("Thm4.2");
  if (ts.all_branches_odd()) {
    report.exact = report.upper;
    report.caveats.push_back("all chains odd: upper bound is achieved");
  }
  return report;
}

BoundsReport tree_bounds(const Graph& g, double e_star) {
  auto ts = tree_structure(g);
  if (ts.kind == TreeKind::not_a_tree)
    throw std::invalid_argument("tree_bounds: graph is not a tree");
  if (ts.kind == TreeKind::line) return line_bounds(g.node_count(), e_star);
  if (ts.kind == TreeKind::star || ts.kind == TreeKind::starlike)
    return starlike_bounds(g, e_star);

  int n = g.node_count();
  int centers = ts.centers.size();
  int m = ts.branch_count();
  int r = ts.odd_branch_count();
  BoundsReport report;
  report.quantity = Quantity::aggregate_play;
  report.lower = (n + r - centers) / 2.0 * e_star;
  report.upper = (n + m - centers) / 2.0 * e_star;
  report.theorem_tags = {"Thm4.4"};
  report.applicability = "tree, delta >= 1/2";
  if (ts.all_branches_odd()) {
    report.exact = report.upper;
    report.caveats.push_back("all branches odd: upper bound is achieved");
  }
  int m_listed = ts.listed_branch_count();
  if (m_listed != m) {
    std::ostringstream note;
    note << "branch-count conventions differ: counting adjacent-center pairs m = " << m
         << " (primary, upper = " << report.upper << "), omitting them m = " << m_listed
         << " (upper = " << (n + m_listed - centers) / 2.0 * e_star << ")";
    report.caveats.push_back(note.str());
  }
  return report;
}

BoundsReport tree_welfare_bounds(const Graph& g, const GameConfig& cfg,
                                 const BenefitSpec& spec) {
  cfg.validate();
  auto ts = tree_structure(g);
  if (ts.kind == TreeKind::not_a_tree || ts.centers.empty())
    throw std::invalid_argument("tree_welfare_bounds: need a tree with centers");
  int n = g.node_count();
  int centers = ts.centers.size();
  double m_play = (n + ts.branch_count() - centers) / 2.0;
  double r_play = (n + ts.odd_branch_count() - centers) / 2.0;

  double sigma = sigma_b(spec, n, cfg.delta);
  double base = n * (spec.value(cfg.e_star) - cfg.cost * cfg.e_star);
  BoundsReport report;
  report.quantity = Quantity::welfare;
  report.applicability = "tree with centers, delta >= 1/2";
  report.upper = base + cfg.cost * g.max_degree() * cfg.delta * cfg.e_star * m_play;
  report.theorem_tags = {"Thm4.5a"};
  double coeff = cfg.cost * ((cfg.delta + 1.0) * sigma - 1.0);
  if (sigma <= 1.0 / (1.0 + cfg.delta)) {
    report.lower = base + coeff * cfg.e_star * m_play;
    report.theorem_tags.push_back("Thm4.5b");
  } else {
    report.lower = base + coeff * cfg.e_star * r_play;
    report.theorem_tags.push_back("Thm4.5c");
  }
  return report;
}

Delta1Report delta1_results(const Graph& g, std::span<const double> weights,
                            const GameConfig& cfg, const BenefitSpec& spec, int cap) {
  int n = g.node_count();
  if (n < 1) throw std::invalid_argument("delta1_results: empty graph");
  std::vector<double> w(weights.begin(), weights.end());
  if (w.empty()) w.assign(n, 1.0);
  if (static_cast<int>(w.size()) != n)
    throw std::invalid_argument("delta1_results: weight length mismatch");

  Delta1Report report;
  auto best = weighted_max_independent_set(g, w, cap);
  report.max_weighted_effort = cfg.e_star * best.weight;
  report.witness_support = best.witness;
  report.witness.x.assign(n, 0.0);
  for (int v : best.witness) report.witness.x[v] = cfg.e_star;

  report.propagated_weights.assign(n, 0.0);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) report.propagated_weights[v] += w[u];

  bool isolated = false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0) isolated = true;
  if (!isolated) {
    auto influential = weighted_max_independent_set(g, report.propagated_weights, cap);
    report.influential_support = influential.witness;
    report.influential_limit_welfare =
        n * (spec.value(cfg.e_star) - cfg.cost * cfg.e_star) +
        cfg.cost * cfg.e_star * influential.weight;
  }
  return report;
}

}  // namespace netgame
