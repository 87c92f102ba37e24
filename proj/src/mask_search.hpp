#pragma once

// Internal bitmask search helpers for graphs small enough for exact search.
// Node v corresponds to bit v of a std::uint64_t; callers enforce the cap.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "netgame/graph.hpp"
#include "netgame/types.hpp"

namespace netgame::detail {

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }

inline std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.node_count(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= bit(v);
    adj[v] |= bit(u);
  }
  return adj;
}

inline void require_cap(const Graph& g, int cap, const char* op) {
  int n = g.node_count();
  int hard = cap < 63 ? cap : 63;
  if (n > hard)
    throw CapExceededError(std::string(op) + ": graph has " + std::to_string(n) +
                           " nodes, cap is " + std::to_string(hard));
}

// Greedy clique cover of `pool`: an upper bound on the independence number of
// the induced subgraph. Each pass peels one clique off the pool.
inline int clique_cover_bound(const std::vector<Mask>& adj, Mask pool) {
  int cliques = 0;
  while (pool != 0) {
    int v = std::countr_zero(pool);
    Mask clique_candidates = pool & adj[v];
    pool &= ~bit(v);
    while (clique_candidates != 0) {
      int w = std::countr_zero(clique_candidates);
      pool &= ~bit(w);
      clique_candidates &= adj[w] & ~bit(w);
    }
    ++cliques;
  }
  return cliques;
}

// Greedy coloring of `pool` in the adjacency structure: an upper bound on the
// clique number of the induced subgraph.
inline int coloring_bound(const std::vector<Mask>& adj, Mask pool) {
  int colors = 0;
  while (pool != 0) {
    Mask eligible = pool;
    while (eligible != 0) {
      int v = std::countr_zero(eligible);
      pool &= ~bit(v);
      eligible &= ~(adj[v] | bit(v));
    }
    ++colors;
  }
  return colors;
}

// Largest independent subset of `pool`. Explores "include v" before "exclude
// v" for the lowest candidate, updating only on strict improvement, so the
// recorded witness is the lexicographically smallest maximizer.
struct MisSearch {
  const std::vector<Mask>& adj;
  int best_size = -1;
  Mask best_set = 0;

  void run(Mask pool) { expand(pool, 0, 0); }

  void expand(Mask pool, Mask chosen, int size) {
    if (pool == 0) {
      if (size > best_size) {
        best_size = size;
        best_set = chosen;
      }
      return;
    }
    if (size + clique_cover_bound(adj, pool) <= best_size) return;
    int v = std::countr_zero(pool);
    expand(pool & ~(adj[v] | bit(v)), chosen | bit(v), size + 1);
    expand(pool & ~bit(v), chosen, size);
  }
};

// Largest clique within `pool`; same traversal order and tie-break as above.
struct CliqueSearch {
  const std::vector<Mask>& adj;
  int best_size = -1;
  Mask best_set = 0;

  void expand(Mask pool, Mask chosen, int size) {
    if (pool == 0) {
      if (size > best_size) {
        best_size = size;
        best_set = chosen;
      }
      return;
    }
    if (size + coloring_bound(adj, pool) <= best_size) return;
    int v = std::countr_zero(pool);
    expand(pool & adj[v], chosen | bit(v), size + 1);
    expand(pool & ~bit(v), chosen, size);
  }
};

}  // namespace netgame::detail
