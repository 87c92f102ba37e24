#pragma once

#include <vector>

#include "netgame/game.hpp"
#include "netgame/graph.hpp"
#include "netgame/types.hpp"

namespace netgame {

struct SweepOptions {
  double delta_min = 0.5;
  double delta_max = 1.0;
  int steps = 2;  // grid points, endpoints included
  double tol = kDefaultTol;
  int cap = kDefaultEnumerationCap;
  long long budget = 50'000'000;  // limit on steps * 2^n
};

struct SweepInterval {
  double delta_lo = 0.0;
  double delta_hi = 0.0;
  double play_lo = 0.0;  // aggregate play at the interval endpoints
  double play_hi = 0.0;
};

// One support pattern with the delta ranges (at grid resolution) where an
// equilibrium on that support exists.
struct SweepRow {
  NodeSet support;
  std::vector<SweepInterval> intervals;
};

// Enumerates equilibria on a uniform delta grid and groups them by support.
// Interval endpoints are only as sharp as the grid step.
std::vector<SweepRow> sweep_equilibria(const Graph& g, double e_star,
                                       const SweepOptions& options);

}  // namespace netgame
