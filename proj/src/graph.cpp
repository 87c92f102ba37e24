#include "netgame/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace netgame {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("Graph: negative node count");
  adjacency_.resize(n_);
  std::set<std::pair<int, int>> seen;
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u == v) throw std::invalid_argument("Graph: self-loop at node " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::invalid_argument("Graph: edge endpoint out of range");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw std::invalid_argument("Graph: duplicate edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
  }
  for (auto [u, v] : seen) {
    edges_.push_back({u, v});
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const {
  const auto& nbrs = adjacency_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : degree(0);
  for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

Graph Graph::complement() const {
  std::vector<std::pair<int, int>> comp;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!has_edge(u, v)) comp.push_back({u, v});
  return Graph(n_, comp);
}

Graph Graph::induced(const NodeSet& keep) const {
  std::vector<int> local(n_, -1);
  const auto& nodes = keep.values();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] >= n_) throw std::invalid_argument("induced: node out of range");
    local[nodes[i]] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : edges_)
    if (local[u] >= 0 && local[v] >= 0) edges.push_back({local[u], local[v]});
  return Graph(static_cast<int>(nodes.size()), edges);
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adjacency_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n_;
}

std::vector<Component> connected_components(const Graph& g) {
  int n = g.node_count();
  std::vector<int> label(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v))
        if (label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  std::vector<Component> out(next);
  std::vector<std::vector<int>> nodes(next);
  for (int v = 0; v < n; ++v) nodes[label[v]].push_back(v);
  for (int c = 0; c < next; ++c) {
    out[c].original_nodes = nodes[c];
    out[c].graph = g.induced(NodeSet(nodes[c]));
  }
  return out;
}

namespace {

// Strips a '#' comment and surrounding whitespace; empty result means skip.
std::string significant(const std::string& raw) {
  std::string line = raw.substr(0, raw.find('#'));
  auto begin = line.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  auto end = line.find_last_not_of(" \t\r\n");
  return line.substr(begin, end - begin + 1);
}

bool parse_ints(const std::string& line, int count, std::vector<long long>& out) {
  std::istringstream in(line);
  out.clear();
  long long x;
  while (in >> x) out.push_back(x);
  if (!in.eof()) return false;  // trailing non-numeric junk
  return static_cast<int>(out.size()) == count;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;

  long long n = -1, m = -1;
  int header_line = 0;
  std::vector<long long> nums;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = significant(raw);
    if (line.empty()) continue;
    if (!parse_ints(line, 2, nums))
      throw GraphParseError(lineno, "malformed header, expected \"n m\"");
    n = nums[0];
    m = nums[1];
    header_line = lineno;
    break;
  }
  if (n < 0 || m < 0) {
    if (header_line == 0) throw GraphParseError(0, "empty document, expected \"n m\" header");
    throw GraphParseError(header_line, "malformed header, counts must be nonnegative");
  }

  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  while (static_cast<long long>(edges.size()) < m && std::getline(in, raw)) {
    ++lineno;
    std::string line = significant(raw);
    if (line.empty()) continue;
    if (!parse_ints(line, 2, nums))
      throw GraphParseError(lineno, "malformed edge line, expected \"u v\"");
    long long u = nums[0], v = nums[1];
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw GraphParseError(lineno, "node index out of range [0, " + std::to_string(n) + ")");
    if (u == v) throw GraphParseError(lineno, "self-loop at node " + std::to_string(u));
    int a = static_cast<int>(std::min(u, v)), b = static_cast<int>(std::max(u, v));
    if (!seen.insert({a, b}).second)
      throw GraphParseError(lineno,
                            "duplicate edge (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    edges.push_back({a, b});
  }
  if (static_cast<long long>(edges.size()) < m)
    throw GraphParseError(lineno, "expected " + std::to_string(m) + " edges, got " +
                                      std::to_string(edges.size()));
  while (std::getline(in, raw)) {
    ++lineno;
    if (!significant(raw).empty())
      throw GraphParseError(lineno, "unexpected content after " + std::to_string(m) + " edges");
  }
  return Graph(static_cast<int>(n), edges);
}

GraphDocument parse_graph_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GraphParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
    throw GraphParseError(0, "JSON graph requires integer field \"n\"");
  long long n = doc["n"].get<long long>();
  if (n < 0) throw GraphParseError(0, "\"n\" must be nonnegative");

  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw GraphParseError(0, "\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        throw GraphParseError(0, "malformed edge entry, expected [u, v]");
      long long u = e[0].get<long long>(), v = e[1].get<long long>();
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw GraphParseError(0, "node index out of range [0, " + std::to_string(n) + ")");
      if (u == v) throw GraphParseError(0, "self-loop at node " + std::to_string(u));
      int a = static_cast<int>(std::min(u, v)), b = static_cast<int>(std::max(u, v));
      if (!seen.insert({a, b}).second)
        throw GraphParseError(0,
                              "duplicate edge (" + std::to_string(a) + ", " + std::to_string(b) + ")");
      edges.push_back({a, b});
    }
  }

  GraphDocument out{Graph(static_cast<int>(n), edges), std::nullopt};
  if (doc.contains("weights")) {
    if (!doc["weights"].is_array() || static_cast<long long>(doc["weights"].size()) != n)
      throw GraphParseError(0, "\"weights\" must be an array of length n");
    std::vector<double> w;
    for (const auto& x : doc["weights"]) {
      if (!x.is_number()) throw GraphParseError(0, "weights must be numeric");
      w.push_back(x.get<double>());
    }
    out.weights = std::move(w);
  }
  return out;
}

GraphDocument load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphParseError(0, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_graph_json(text);
  return GraphDocument{parse_edge_list(text), std::nullopt};
}

}  // namespace netgame
