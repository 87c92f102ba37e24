#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netgame/graph.hpp"
#include "netgame/lcp.hpp"
#include "netgame/types.hpp"

namespace netgame {

// Game parameters: substitutability delta in (0, 1], the effort level e* where
// marginal benefit meets marginal cost, the marginal cost c, and the numeric
// tolerance applied to normalized quantities.
struct GameConfig {
  double delta = 1.0;
  double e_star = 1.0;
  double cost = 1.0;
  double tol = kDefaultTol;
  void validate() const;
};

struct EffortProfile {
  std::vector<double> x;
  double total() const;
};

// Exponential-saturation benefit b(y) = b0 + (c/lambda)(1 - exp(-lambda (y - e*))).
// Strictly increasing and strictly concave for every lambda > 0, with
// b(e*) = b0 and b'(e*) = c by construction.
struct BenefitSpec {
  double b0 = 1.0;
  double lambda = 1.0;
  double e_star = 1.0;
  double cost = 1.0;
  double value(double y) const;
  double derivative(double y) const;
};

// max{0, e* - delta * sum of neighbor efforts}.
double best_response(const Graph& g, const GameConfig& cfg, const EffortProfile& x, int node);

// Equilibrium test via the complementarity characterization of x / e*.
VerifyResult check_nash(const Graph& g, const GameConfig& cfg, const EffortProfile& x);
bool is_nash(const Graph& g, const GameConfig& cfg, const EffortProfile& x);

struct EquilibriumSet {
  std::vector<EffortProfile> profiles;  // canonical order
  int singular_supports = 0;
};

// e* times every enumerated normalized solution.
EquilibriumSet enumerate_equilibria(const Graph& g, const GameConfig& cfg,
                                    int cap = kDefaultEnumerationCap);

// e* times the independent-clique solution grown from the given maximum
// independent set; clique values are e* / (1 + (|C|-1) delta).
std::optional<EffortProfile> construct_ice(const Graph& g, const GameConfig& cfg,
                                           const NodeSet& mis);

struct MaxPlayResult {
  double value = 0.0;
  std::vector<EffortProfile> argmax;      // all maximizers within 10*tol of the max
  std::vector<std::string> diagnostics;   // failed structural assertions, if any
};

// Maximum aggregate play over all enumerated equilibria. For delta >= eta(G)
// the result is checked to be attained by an independent-clique profile with
// alpha(G) cliques (and by e* * 1_S when the maximum independent set S is
// unique); failures are reported as diagnostics, never silently dropped.
MaxPlayResult max_aggregate_play(const Graph& g, const GameConfig& cfg,
                                 int cap = kDefaultEnumerationCap);

// Calibrates lambda so the normalized secant slope sigma_b over
// [e*, e* + delta (n-1) e*] equals sigma_target; b0 defaults to c * e*.
BenefitSpec make_benefit(const GameConfig& cfg, int n, double sigma_target,
                         std::optional<double> b0 = std::nullopt);

// (b(e* + delta (n-1) e*) - b(e*)) / (c (n-1) e* delta); lies in (0, 1).
double sigma_b(const BenefitSpec& spec, int n, double delta);

// Sum of b(own + discounted neighbor efforts) minus total effort cost.
double welfare(const Graph& g, const GameConfig& cfg, const BenefitSpec& spec,
               const EffortProfile& x);

// All profiles e* * 1_S with S a ceil(1/delta)-dominating independent set;
// may be empty.
std::vector<EffortProfile> specialized_equilibria(const Graph& g, const GameConfig& cfg,
                                                  int cap = kDefaultEnumerationCap);

// Smallest integer k with k >= 1/delta, robust to floating-point noise.
int domination_order(double delta);

}  // namespace netgame
