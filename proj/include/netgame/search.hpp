#pragma once

#include <optional>
#include <span>
#include <vector>

#include "netgame/graph.hpp"
#include "netgame/types.hpp"

namespace netgame {

struct MaxIndependentSet {
  int alpha = 0;
  NodeSet witness;  // lexicographically smallest maximum independent set
};

// Exact independence number by branch and bound (greedy clique-cover bound).
// The witness is the lexicographically smallest maximum independent set.
MaxIndependentSet independence_number(const Graph& g, int cap = kDefaultEnumerationCap);

// The maximum independent set when exactly one of size alpha exists,
// determined by enumerating maximum independent sets; nullopt otherwise.
std::optional<NodeSet> unique_max_independent_set(const Graph& g,
                                                  int cap = kDefaultEnumerationCap);

// Exact clique number by branch and bound (greedy coloring bound).
int clique_number(const Graph& g, int cap = kDefaultEnumerationCap);

// All maximal independent sets (Bron-Kerbosch with pivoting on the
// non-adjacency structure), sorted canonically.
std::vector<NodeSet> enumerate_maximal_independent_sets(const Graph& g,
                                                        int cap = kDefaultEnumerationCap);

// True iff s is independent and every node outside s has >= k neighbors in s.
bool is_k_dominating_independent(const Graph& g, const NodeSet& s, int k);

struct WeightedIndependentSet {
  double weight = 0.0;
  NodeSet witness;  // lexicographically smallest maximizer
};

// Exact maximum-weight independent set; weights must be positive.
WeightedIndependentSet weighted_max_independent_set(const Graph& g,
                                                    std::span<const double> weights,
                                                    int cap = kDefaultEnumerationCap);

}  // namespace netgame
