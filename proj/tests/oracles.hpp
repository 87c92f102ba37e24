#pragma once

// Brute-force oracles over explicit subset enumeration. These stay
// independent of the library's branch-and-bound and Bron-Kerbosch paths so
// the two can be compared on small graphs.

#include <cstdint>
#include <vector>

#include "netgame/graph.hpp"
#include "netgame/types.hpp"

namespace oracles {

using netgame::Graph;
using netgame::NodeSet;

inline bool subset_independent(const Graph& g, std::uint32_t mask) {
  for (auto [u, v] : g.edges())
    if ((mask >> u & 1u) && (mask >> v & 1u)) return false;
  return true;
}

inline bool subset_clique(const Graph& g, std::uint32_t mask) {
  for (int u = 0; u < g.node_count(); ++u)
    for (int v = u + 1; v < g.node_count(); ++v)
      if ((mask >> u & 1u) && (mask >> v & 1u) && !g.has_edge(u, v)) return false;
  return true;
}

inline int popcount(std::uint32_t mask) { return __builtin_popcount(mask); }

inline int alpha_brute(const Graph& g) {
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << g.node_count()); ++mask)
    if (subset_independent(g, mask)) best = std::max(best, popcount(mask));
  return best;
}

inline int omega_brute(const Graph& g) {
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << g.node_count()); ++mask)
    if (subset_clique(g, mask)) best = std::max(best, popcount(mask));
  return best;
}

inline std::vector<std::uint32_t> maximum_independent_sets_brute(const Graph& g) {
  int alpha = alpha_brute(g);
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << g.node_count()); ++mask)
    if (popcount(mask) == alpha && subset_independent(g, mask)) out.push_back(mask);
  return out;
}

// Maximal = independent and not extendable by any outside node.
inline std::vector<std::uint32_t> maximal_independent_sets_brute(const Graph& g) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << g.node_count()); ++mask) {
    if (!subset_independent(g, mask)) continue;
    bool extendable = false;
    for (int v = 0; v < g.node_count() && !extendable; ++v)
      if (!(mask >> v & 1u) && subset_independent(g, mask | (1u << v))) extendable = true;
    if (!extendable && g.node_count() > 0) out.push_back(mask);
  }
  return out;
}

inline double alpha_weighted_brute(const Graph& g, const std::vector<double>& w) {
  double best = 0.0;
  for (std::uint32_t mask = 0; mask < (1u << g.node_count()); ++mask) {
    if (!subset_independent(g, mask)) continue;
    double weight = 0.0;
    for (int v = 0; v < g.node_count(); ++v)
      if (mask >> v & 1u) weight += w[v];
    best = std::max(best, weight);
  }
  return best;
}

inline bool k_dominating_independent_brute(const Graph& g, const NodeSet& s, int k) {
  std::uint32_t mask = 0;
  for (int v : s) mask |= 1u << v;
  if (!subset_independent(g, mask)) return false;
  for (int v = 0; v < g.node_count(); ++v) {
    if (mask >> v & 1u) continue;
    int hits = 0;
    for (int w : g.neighbors(v))
      if (mask >> w & 1u) ++hits;
    if (hits < k) return false;
  }
  return true;
}

}  // namespace oracles
