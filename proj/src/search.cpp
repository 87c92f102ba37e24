#include "netgame/search.hpp"

#include <algorithm>
#include <bit>

#include "mask_search.hpp"

namespace netgame {

using detail::adjacency_masks;
using detail::bit;
using detail::Mask;

MaxIndependentSet independence_number(const Graph& g, int cap) {
  if (g.node_count() < 1) throw std::invalid_argument("independence_number: empty graph");
  detail::require_cap(g, cap, "independence_number");
  auto adj = adjacency_masks(g);
  detail::MisSearch search{adj};
  search.run((Mask{1} << g.node_count()) - 1);
  return {search.best_size, NodeSet::from_mask(search.best_set)};
}

namespace {

// Collects maximum independent sets until `limit` are found.
struct MisCollector {
  const std::vector<Mask>& adj;
  int alpha;
  std::size_t limit;
  std::vector<Mask> found;

  void expand(Mask pool, Mask chosen, int size) {
    if (found.size() >= limit) return;
    if (size == alpha) {
      found.push_back(chosen);
      return;
    }
    if (size + std::popcount(pool) < alpha) return;
    if (size + detail::clique_cover_bound(adj, pool) < alpha) return;
    int v = std::countr_zero(pool);
    expand(pool & ~(adj[v] | bit(v)), chosen | bit(v), size + 1);
    expand(pool & ~bit(v), chosen, size);
  }
};

}  // namespace

std::optional<NodeSet> unique_max_independent_set(const Graph& g, int cap) {
  if (g.node_count() < 1) return std::nullopt;
  detail::require_cap(g, cap, "unique_max_independent_set");
  auto alpha = independence_number(g, cap);
  auto adj = adjacency_masks(g);
  MisCollector collector{adj, alpha.alpha, 2, {}};
  collector.expand((Mask{1} << g.node_count()) - 1, 0, 0);
  if (collector.found.size() == 1) return NodeSet::from_mask(collector.found[0]);
  return std::nullopt;
}

int clique_number(const Graph& g, int cap) {
  if (g.node_count() < 1) throw std::invalid_argument("clique_number: empty graph");
  detail::require_cap(g, cap, "clique_number");
  auto adj = adjacency_masks(g);
  detail::CliqueSearch search{adj};
  search.expand((Mask{1} << g.node_count()) - 1, 0, 0);
  return search.best_size;
}

namespace {

// Bron-Kerbosch with pivoting over the non-adjacency relation, so maximal
// "cliques" of that relation are exactly the maximal independent sets.
void bron_kerbosch_is(const std::vector<Mask>& nonadj, Mask r, Mask p, Mask x,
                      std::vector<Mask>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  Mask px = p | x;
  int pivot = -1, best = -1;
  for (Mask scan = px; scan != 0; scan &= scan - 1) {
    int u = std::countr_zero(scan);
    int cnt = std::popcount(p & nonadj[u]);
    if (cnt > best) {
      best = cnt;
      pivot = u;
    }
  }
  Mask ext = p & ~nonadj[pivot];
  for (Mask scan = ext; scan != 0; scan &= scan - 1) {
    int v = std::countr_zero(scan);
    bron_kerbosch_is(nonadj, r | bit(v), p & nonadj[v], x & nonadj[v], out);
    p &= ~bit(v);
    x |= bit(v);
  }
}

}  // namespace

std::vector<NodeSet> enumerate_maximal_independent_sets(const Graph& g, int cap) {
  detail::require_cap(g, cap, "enumerate_maximal_independent_sets");
  int n = g.node_count();
  if (n == 0) return {};
  Mask full = (Mask{1} << n) - 1;
  auto adj = adjacency_masks(g);
  std::vector<Mask> nonadj(n);
  for (int v = 0; v < n; ++v) nonadj[v] = full & ~adj[v] & ~bit(v);
  std::vector<Mask> sets;
  bron_kerbosch_is(nonadj, 0, full, 0, sets);
  std::vector<NodeSet> out;
  out.reserve(sets.size());
  for (Mask s : sets) out.push_back(NodeSet::from_mask(s));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_k_dominating_independent(const Graph& g, const NodeSet& s, int k) {
  for (int v : s) {
    if (v >= g.node_count()) throw std::invalid_argument("node set exceeds graph");
    for (int w : g.neighbors(v))
      if (s.contains(w)) return false;
  }
  for (int v = 0; v < g.node_count(); ++v) {
    if (s.contains(v)) continue;
    int hits = 0;
    for (int w : g.neighbors(v))
      if (s.contains(w)) ++hits;
    if (hits < k) return false;
  }
  return true;
}

namespace {

struct WeightedMisSearch {
  const std::vector<Mask>& adj;
  const std::span<const double>& w;
  double best = -1.0;
  Mask best_set = 0;

  void expand(Mask pool, Mask chosen, double weight) {
    if (pool == 0) {
      if (weight > best + 1e-12) {
        best = weight;
        best_set = chosen;
      }
      return;
    }
    double bound = weight;
    for (Mask scan = pool; scan != 0; scan &= scan - 1) bound += w[std::countr_zero(scan)];
    if (bound <= best + 1e-12) return;
    int v = std::countr_zero(pool);
    expand(pool & ~(adj[v] | bit(v)), chosen | bit(v), weight + w[v]);
    expand(pool & ~bit(v), chosen, weight);
  }
};

}  // namespace

WeightedIndependentSet weighted_max_independent_set(const Graph& g,
                                                    std::span<const double> weights,
                                                    int cap) {
  if (g.node_count() < 1)
    throw std::invalid_argument("weighted_max_independent_set: empty graph");
  detail::require_cap(g, cap, "weighted_max_independent_set");
  if (static_cast<int>(weights.size()) != g.node_count())
    throw std::invalid_argument("weighted_max_independent_set: weight length mismatch");
  for (double x : weights)
    if (!(x > 0.0)) throw std::invalid_argument("weighted_max_independent_set: weights must be positive");
  auto adj = adjacency_masks(g);
  WeightedMisSearch search{adj, weights, -1.0, 0};
  search.expand((Mask{1} << g.node_count()) - 1, 0, 0.0);
  return {search.best, NodeSet::from_mask(search.best_set)};
}

}  // namespace netgame
