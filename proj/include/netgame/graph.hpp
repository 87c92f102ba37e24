#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netgame/types.hpp"

namespace netgame {

// Parse failure for the edge-list / JSON graph formats. Carries the offending
// line (1-based, 0 when not line-oriented) so diagnostics stay actionable.
class GraphParseError : public std::runtime_error {
 public:
  GraphParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Undirected simple graph on nodes {0..n-1}. Immutable after construction;
// the edge list and per-node neighbor sets are kept consistent.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : Graph(n, {}) {}
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }
  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }
  int min_degree() const;
  int max_degree() const;

  Graph complement() const;
  // Induced subgraph on `keep`; local index i corresponds to keep.values()[i].
  Graph induced(const NodeSet& keep) const;
  bool is_connected() const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;       // normalized u < v, sorted
  std::vector<std::vector<int>> adjacency_;      // sorted neighbor lists
};

struct Component {
  Graph graph;
  std::vector<int> original_nodes;  // original_nodes[local] = node in the parent graph
};

// Partition into connected components, ordered by smallest original node.
std::vector<Component> connected_components(const Graph& g);

// Edge-list format: first significant line "n m", then m lines "u v" with
// nodes in [0, n). '#' starts a comment; blank lines are skipped. Malformed
// lines, out-of-range indices, self-loops and duplicate edges are rejected
// with distinct diagnostics.
Graph parse_edge_list(std::string_view text);

// JSON form: {"n": int, "edges": [[u,v],...]}, optional "weights": [w_0,...].
struct GraphDocument {
  Graph graph;
  std::optional<std::vector<double>> weights;
};
GraphDocument parse_graph_json(const std::string& text);

// Reads a graph file, dispatching on the leading character ('{' selects JSON).
GraphDocument load_graph_file(const std::string& path);

}  // namespace netgame
