#pragma once

// Shared graph fixtures for the test suites. Figure graphs use 0-based labels
// (original drawings are 1-based).

#include <random>
#include <utility>
#include <vector>

#include "netgame/graph.hpp"

namespace fixtures {

using netgame::Graph;

inline Graph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

inline Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  if (n >= 3) edges.push_back({0, n - 1});
  return Graph(n, edges);
}

inline Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

// Star with the center at node 0.
inline Graph star(int peripherals) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= peripherals; ++v) edges.push_back({0, v});
  return Graph(peripherals + 1, edges);
}

inline Graph edgeless(int n) { return Graph(n); }

inline Graph k4() { return complete(4); }

inline Graph p7() { return path(7); }

// Ten-node graph with a triangle, a paired clique and hanging paths.
inline Graph fig2_ten() {
  return Graph(10, {{0, 1},
                    {1, 2},
                    {2, 3},
                    {3, 4},
                    {3, 5},
                    {4, 5},
                    {5, 6},
                    {6, 7},
                    {7, 8},
                    {6, 9},
                    {0, 2}});
}

// Twelve-node tree with four centers.
inline Graph fig5_tree() {
  return Graph(12, {{0, 1},
                    {1, 2},
                    {2, 3},
                    {3, 4},
                    {4, 5},
                    {5, 6},
                    {4, 7},
                    {2, 9},
                    {9, 10},
                    {8, 1},
                    {9, 11}});
}

// Seven-node starlike tree: center 2 with three chains of two nodes.
inline Graph fig6_starlike() {
  return Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}});
}

// Seven-node tree with centers 1 and 4; all five branches have odd interiors.
inline Graph fig7_tree() {
  return Graph(7, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {4, 5}, {4, 6}});
}

// Starlike tree: one center with chains of the given lengths.
inline Graph spider(const std::vector<int>& chain_lengths) {
  std::vector<std::pair<int, int>> edges;
  int next = 1;
  for (int len : chain_lengths) {
    int prev = 0;
    for (int k = 0; k < len; ++k) {
      edges.push_back({prev, next});
      prev = next++;
    }
  }
  return Graph(next, edges);
}

inline Graph erdos_renyi(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

inline Graph random_connected(int n, std::mt19937& rng) {
  std::uniform_real_distribution<double> dist(0.25, 0.75);
  for (;;) {
    Graph g = erdos_renyi(n, dist(rng), rng);
    if (g.is_connected()) return g;
  }
}

// Uniform random labeled tree via Pruefer decoding.
inline Graph random_tree(int n, std::mt19937& rng) {
  if (n <= 1) return Graph(n);
  if (n == 2) return Graph(2, {{0, 1}});
  std::uniform_int_distribution<int> node(0, n - 1);
  std::vector<int> seq(n - 2);
  for (int& s : seq) s = node(rng);
  std::vector<int> degree(n, 1);
  for (int s : seq) ++degree[s];
  std::vector<std::pair<int, int>> edges;
  std::vector<bool> used(n, false);
  for (int s : seq) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1 && !used[leaf]) {
        edges.push_back({std::min(leaf, s), std::max(leaf, s)});
        used[leaf] = true;
        --degree[s];
        break;
      }
    }
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1 && !used[v]) (a < 0 ? a : b) = v;
  }
  edges.push_back({std::min(a, b), std::max(a, b)});
  return Graph(n, edges);
}

}  // namespace fixtures
