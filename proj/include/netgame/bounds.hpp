#pragma once

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netgame/game.hpp"
#include "netgame/graph.hpp"
#include "netgame/types.hpp"

namespace netgame {

enum class Quantity { aggregate_play, welfare };

std::string to_string(Quantity q);

// One bounded quantity with the results that produced the interval, the
// regime the interval is valid in, and any caveats. Regimes no result covers
// are reported as inapplicable with infinite bounds rather than extrapolated.
struct BoundsReport {
  Quantity quantity = Quantity::aggregate_play;
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
  std::optional<double> exact;
  std::vector<std::string> theorem_tags;
  std::string applicability;
  bool applicable = true;
  std::vector<std::string> caveats;
  // Regular graphs only: the exact welfare limit as sigma_b tends to 1.
  std::optional<double> sigma1_limit;
};

// Substitutability threshold above which the l1-maximal solution is an
// independent-clique solution with alpha(G) cliques. Zero for edgeless graphs.
double eta(const Graph& g, int cap = kDefaultEnumerationCap);

// Aggregate-play interval for 0 < delta < 1: lower e* alpha always; upper
// e*(alpha + 1 + 1/(alpha-1)) for delta >= eta(G); exact value for complete
// graphs and for graphs with a unique maximum independent set.
BoundsReport aggregate_bounds(const Graph& g, double delta, double e_star,
                              int cap = kDefaultEnumerationCap);

// Welfare interval for one equilibrium profile in terms of its total effort,
// the degree range and sigma_b. Throws when x is not an equilibrium.
BoundsReport welfare_profile_bounds(const Graph& g, const GameConfig& cfg,
                                    const BenefitSpec& spec, const EffortProfile& x,
                                    int cap = kDefaultEnumerationCap);

// Interval for the maximum equilibrium welfare; requires delta >= eta(G).
BoundsReport max_welfare_bounds(const Graph& g, const GameConfig& cfg,
                                const BenefitSpec& spec, int cap = kDefaultEnumerationCap);

// Line networks, delta >= 1/2: [n/2, (n+1)/2] e*, exact for odd n.
BoundsReport line_bounds(int n, double e_star);

struct StarEquilibrium {
  EffortProfile profile;  // node 0 is the center and free-rides
  BoundsReport report;
};

// Star with n >= 3 peripheral nodes and delta >= 1/n: the unique equilibrium
// and its exact aggregate n e*.
StarEquilibrium star_equilibrium(int n_peripherals, const GameConfig& cfg);

// Starlike trees (one center, >= 3 chains), delta >= 1/2:
// [(n + r - 1)/2, (n + m - 1)/2] e*, exact when all chains are odd.
BoundsReport starlike_bounds(const Graph& g, double e_star);

// Any tree, delta >= 1/2; dispatches to the line / starlike formulas and to
// the general (n + {r, m} - #centers)/2 interval otherwise. Both branch-count
// conventions are reported; the one counting adjacent-center pairs is primary.
BoundsReport tree_bounds(const Graph& g, double e_star);

// Welfare interval for trees with centers, delta >= 1/2, split at
// sigma_b = 1/(1 + delta).
BoundsReport tree_welfare_bounds(const Graph& g, const GameConfig& cfg,
                                 const BenefitSpec& spec);

struct Delta1Report {
  double max_weighted_effort = 0.0;  // e* * alpha_w(G)
  NodeSet witness_support;           // w-weighted maximum independent set
  EffortProfile witness;             // the specialized equilibrium on it
  std::vector<double> propagated_weights;            // (A w)_i = sum of neighbor weights
  std::optional<double> influential_limit_welfare;   // absent when isolated nodes exist
  std::optional<NodeSet> influential_support;
};

// Perfect-substitutes results: the maximum weighted effort over equilibria and
// the limiting welfare of the influential equilibrium (propagated-weight
// maximum independent set). Empty `weights` means unit weights.
Delta1Report delta1_results(const Graph& g, std::span<const double> weights,
                            const GameConfig& cfg, const BenefitSpec& spec,
                            int cap = kDefaultEnumerationCap);

}  // namespace netgame
