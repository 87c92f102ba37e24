#include "netgame/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "netgame/lcp.hpp"

namespace netgame {

std::vector<SweepRow> sweep_equilibria(const Graph& g, double e_star,
                                       const SweepOptions& options) {
  if (!(options.delta_min > 0.0) || !(options.delta_min < options.delta_max) ||
      options.delta_max > 1.0)
    throw std::invalid_argument("sweep: need 0 < delta_min < delta_max <= 1");
  if (options.steps < 2) throw std::invalid_argument("sweep: need at least 2 grid points");
  int n = g.node_count();
  if (n > options.cap)
    throw CapExceededError("sweep: graph exceeds enumeration cap");
  double work = static_cast<double>(options.steps) * std::ldexp(1.0, n);
  if (work > static_cast<double>(options.budget))
    throw CapExceededError("sweep: steps * 2^n exceeds the work budget");

  struct Hit {
    int grid_index;
    double delta;
    double play;
  };
  std::map<NodeSet, std::vector<Hit>> hits;
  double step = (options.delta_max - options.delta_min) / (options.steps - 1);
  for (int k = 0; k < options.steps; ++k) {
    double delta = k + 1 == options.steps ? options.delta_max : options.delta_min + k * step;
    auto enumerated = enumerate_solutions(LcpInstance{g, delta}, options.tol, options.cap);
    for (const auto& sol : enumerated.solutions)
      hits[sol.support].push_back({k, delta, sol.l1() * e_star});
  }

  std::vector<SweepRow> rows;
  for (auto& [support, list] : hits) {
    SweepRow row;
    row.support = support;
    std::size_t i = 0;
    while (i < list.size()) {
      std::size_t j = i;
      while (j + 1 < list.size() && list[j + 1].grid_index == list[j].grid_index + 1) ++j;
      row.intervals.push_back(
          {list[i].delta, list[j].delta, list[i].play, list[j].play});
      i = j + 1;
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(),
            [](const SweepRow& a, const SweepRow& b) { return a.support < b.support; });
  return rows;
}

}  // namespace netgame
