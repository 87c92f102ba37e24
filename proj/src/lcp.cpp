#include "netgame/lcp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "mask_search.hpp"
#include "netgame/search.hpp"

namespace netgame {

LcpInstance build_lcp(Graph g, double delta) {
  if (!(delta > 0.0) || delta > 1.0)
    throw std::invalid_argument("build_lcp: delta must lie in (0, 1]");
  return LcpInstance{std::move(g), delta};
}

std::string Violation::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::nonnegativity: out << "nonnegativity"; break;
    case Kind::feasibility: out << "feasibility"; break;
    case Kind::complementarity: out << "complementarity"; break;
  }
  out << " violated at node " << node << " by " << amount;
  return out.str();
}

std::vector<double> closed_neighborhood_sums(const Graph& g, double delta,
                                             std::span<const double> x) {
  std::vector<double> c(x.begin(), x.end());
  for (int v = 0; v < g.node_count(); ++v) {
    double nbr = 0.0;
    for (int w : g.neighbors(v)) nbr += x[w];
    c[v] += delta * nbr;
  }
  return c;
}

VerifyResult verify_solution(const LcpInstance& inst, std::span<const double> x, double tol) {
  const Graph& g = inst.graph;
  if (static_cast<int>(x.size()) != g.node_count())
    throw std::invalid_argument("verify_solution: dimension mismatch");
  auto sums = closed_neighborhood_sums(g, inst.delta, x);
  Violation worst;
  double worst_amount = 0.0;
  auto consider = [&](Violation::Kind kind, int node, double amount) {
    if (amount > worst_amount) {
      worst_amount = amount;
      worst = Violation{kind, node, amount};
    }
  };
  for (int v = 0; v < g.node_count(); ++v) {
    if (x[v] < -tol) consider(Violation::Kind::nonnegativity, v, -x[v]);
    if (sums[v] < 1.0 - tol) consider(Violation::Kind::feasibility, v, 1.0 - sums[v]);
    double slack = std::abs(x[v] * (sums[v] - 1.0));
    if (slack > tol) consider(Violation::Kind::complementarity, v, slack);
  }
  if (worst_amount > 0.0) return {false, worst};
  return {true, std::nullopt};
}

double LcpSolution::l1() const { return std::accumulate(x.begin(), x.end(), 0.0); }
double IcsSolution::l1() const { return std::accumulate(x.begin(), x.end(), 0.0); }

namespace {

// Gaussian elimination with partial pivoting on the dense restriction of
// I + delta*A to the support. Returns false when a pivot collapses, which is
// how singular supports (e.g. delta = 1 on a clique) surface.
bool solve_dense(std::vector<double>& a, std::vector<double>& b, int k) {
  for (int col = 0; col < k; ++col) {
    int pivot = col;
    for (int row = col + 1; row < k; ++row)
      if (std::abs(a[row * k + col]) > std::abs(a[pivot * k + col])) pivot = row;
    double head = a[pivot * k + col];
    if (std::abs(head) < 1e-12) return false;
    if (pivot != col) {
      for (int j = col; j < k; ++j) std::swap(a[pivot * k + j], a[col * k + j]);
      std::swap(b[pivot], b[col]);
    }
    for (int row = col + 1; row < k; ++row) {
      double factor = a[row * k + col] / a[col * k + col];
      if (factor == 0.0) continue;
      for (int j = col; j < k; ++j) a[row * k + j] -= factor * a[col * k + j];
      b[row] -= factor * b[col];
    }
  }
  for (int row = k - 1; row >= 0; --row) {
    double acc = b[row];
    for (int j = row + 1; j < k; ++j) acc -= a[row * k + j] * b[j];
    b[row] = acc / a[row * k + row];
  }
  return true;
}

std::optional<LcpSolution> solve_on_mask(const LcpInstance& inst,
                                         const std::vector<detail::Mask>& adj,
                                         detail::Mask support, double tol, bool* singular,
                                         std::vector<int>& nodes, std::vector<double>& a,
                                         std::vector<double>& b) {
  if (singular) *singular = false;
  const Graph& g = inst.graph;
  nodes.clear();
  for (detail::Mask scan = support; scan != 0; scan &= scan - 1)
    nodes.push_back(std::countr_zero(scan));
  int k = static_cast<int>(nodes.size());
  if (k == 0) return std::nullopt;

  a.assign(static_cast<std::size_t>(k) * k, 0.0);
  b.assign(k, 1.0);
  for (int i = 0; i < k; ++i) {
    a[i * k + i] = 1.0;
    for (int j = 0; j < k; ++j)
      if (i != j && (adj[nodes[i]] & detail::bit(nodes[j]))) a[i * k + j] = inst.delta;
  }
  if (!solve_dense(a, b, k)) {
    if (singular) *singular = true;
    return std::nullopt;
  }
  for (double v : b)
    if (!(v > tol)) return std::nullopt;  // not strictly positive on the support

  LcpSolution sol;
  sol.x.assign(g.node_count(), 0.0);
  for (int i = 0; i < k; ++i) sol.x[nodes[i]] = b[i];
  // off-support feasibility
  for (int v = 0; v < g.node_count(); ++v) {
    if (support & detail::bit(v)) continue;
    double seen = 0.0;
    for (int w : g.neighbors(v))
      if (support & detail::bit(w)) seen += sol.x[w];
    if (inst.delta * seen < 1.0 - tol) return std::nullopt;
  }
  if (!verify_solution(inst, sol.x, tol).ok) return std::nullopt;
  sol.support = NodeSet::from_mask(support);
  return sol;
}

}  // namespace

std::optional<LcpSolution> solve_on_support(const LcpInstance& inst, const NodeSet& s,
                                            double tol, bool* singular) {
  for (int v : s)
    if (v >= inst.graph.node_count())
      throw std::invalid_argument("solve_on_support: node out of range");
  if (inst.graph.node_count() > 63)
    throw CapExceededError("solve_on_support: graph too large for mask representation");
  auto adj = detail::adjacency_masks(inst.graph);
  std::vector<int> nodes;
  std::vector<double> a, b;
  return solve_on_mask(inst, adj, s.to_mask(), tol, singular, nodes, a, b);
}

EnumerationResult enumerate_solutions(const LcpInstance& inst, double tol, int cap) {
  detail::require_cap(inst.graph, cap, "enumerate_solutions");
  int n = inst.graph.node_count();
  auto adj = detail::adjacency_masks(inst.graph);
  EnumerationResult out;
  std::vector<int> nodes;
  std::vector<double> a, b;
  for (detail::Mask support = 1; support < (detail::Mask{1} << n); ++support) {
    bool singular = false;
    auto sol = solve_on_mask(inst, adj, support, tol, &singular, nodes, a, b);
    if (singular) ++out.singular_supports;
    if (sol) out.solutions.push_back(std::move(*sol));
  }
  std::sort(out.solutions.begin(), out.solutions.end(),
            [](const LcpSolution& p, const LcpSolution& q) {
              if (p.support != q.support) return p.support < q.support;
              return p.x < q.x;
            });
  // value-proximity dedup; supports are already unique, this guards borderline
  // duplicates where an extra coordinate sits at the tolerance edge
  std::vector<LcpSolution> kept;
  for (auto& sol : out.solutions) {
    bool dup = false;
    for (const auto& prev : kept) {
      double dist = 0.0;
      for (int v = 0; v < n; ++v) dist = std::max(dist, std::abs(sol.x[v] - prev.x[v]));
      if (dist <= 10.0 * tol) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(std::move(sol));
  }
  out.solutions = std::move(kept);
  return out;
}

std::pair<Graph, std::vector<double>> restrict_solution(const LcpInstance& inst,
                                                        const LcpSolution& sol, int node,
                                                        double tol) {
  const Graph& g = inst.graph;
  if (node < 0 || node >= g.node_count())
    throw std::invalid_argument("restrict_solution: node out of range");
  if (std::abs(sol.x[node]) > tol)
    throw std::invalid_argument("restrict_solution: coordinate is not zero");
  std::vector<int> keep;
  std::vector<double> x;
  for (int v = 0; v < g.node_count(); ++v) {
    if (v == node) continue;
    keep.push_back(v);
    x.push_back(sol.x[v]);
  }
  Graph sub = g.induced(NodeSet(keep));
  auto check = verify_solution(LcpInstance{sub, inst.delta}, x, tol);
  if (!check.ok)
    throw std::logic_error("restrict_solution: restriction does not solve the smaller problem (" +
                           check.worst->describe() + ")");
  return {std::move(sub), std::move(x)};
}

namespace {

// Largest clique containing `seed` within `allowed`; ties resolved toward the
// lexicographically smallest set by the include-first search order.
detail::Mask max_clique_with_seed(const std::vector<detail::Mask>& adj, int seed,
                                  detail::Mask allowed) {
  detail::CliqueSearch search{adj};
  search.expand(allowed & adj[seed], detail::bit(seed), 1);
  return search.best_set;
}

std::vector<double> assemble_ics(const Graph& g, double delta,
                                 const std::vector<detail::Mask>& cliques) {
  std::vector<double> x(g.node_count(), 0.0);
  for (detail::Mask c : cliques) {
    int size = std::popcount(c);
    double value = 1.0 / (1.0 + (size - 1) * delta);
    for (detail::Mask scan = c; scan != 0; scan &= scan - 1)
      x[std::countr_zero(scan)] = value;
  }
  return x;
}

}  // namespace

std::optional<IcsSolution> construct_ics(const Graph& g, double delta, const NodeSet& mis,
                                         double tol, int cap) {
  if (!(delta > 0.0) || delta > 1.0)
    throw std::invalid_argument("construct_ics: delta must lie in (0, 1]");
  detail::require_cap(g, cap, "construct_ics");
  for (int v : mis)
    if (v >= g.node_count()) throw std::invalid_argument("construct_ics: node out of range");
  auto adj = detail::adjacency_masks(g);
  detail::Mask mis_mask = mis.to_mask();
  for (int v : mis)
    if (adj[v] & mis_mask) throw std::invalid_argument("construct_ics: set is not independent");
  if (mis.size() != independence_number(g, cap).alpha)
    throw std::invalid_argument("construct_ics: set is not a maximum independent set");

  // Grow one clique per mis node inside its private neighborhood, keeping new
  // cliques off nodes adjacent to cliques already placed so the family stays
  // independent by construction.
  std::vector<int> seeds(mis.begin(), mis.end());
  std::vector<detail::Mask> cliques;
  detail::Mask placed_closed = 0;
  for (int seed : seeds) {
    detail::Mask candidates = detail::bit(seed);
    for (int w : g.neighbors(seed)) {
      if ((adj[w] & mis_mask) == detail::bit(seed)) candidates |= detail::bit(w);
    }
    candidates &= ~placed_closed;
    detail::Mask clique = max_clique_with_seed(adj, seed, candidates);
    cliques.push_back(clique);
    placed_closed |= clique;
    for (detail::Mask scan = clique; scan != 0; scan &= scan - 1)
      placed_closed |= adj[std::countr_zero(scan)];
  }

  LcpInstance inst{g, delta};
  detail::Mask seed_mask = mis_mask;
  while (true) {
    auto x = assemble_ics(g, delta, cliques);
    auto check = verify_solution(inst, x, tol);
    if (check.ok) {
      IcsSolution out;
      out.x = std::move(x);
      for (detail::Mask c : cliques) out.cliques.push_back(NodeSet::from_mask(c));
      std::sort(out.cliques.begin(), out.cliques.end());
      return out;
    }
    // Shrink on violation: the violated constraint names a node; drop from an
    // adjacent (or owning) clique its largest non-seed member, preferring one
    // that is not the violated node's neighbor so the node's view improves.
    int bad = check.worst->node;
    int owner = -1;
    for (std::size_t c = 0; c < cliques.size(); ++c) {
      detail::Mask reach = cliques[c];
      for (detail::Mask scan = cliques[c]; scan != 0; scan &= scan - 1)
        reach |= adj[std::countr_zero(scan)];
      if (reach & detail::bit(bad)) owner = static_cast<int>(c);
    }
    if (owner < 0) return std::nullopt;  // violation not attributable; give up
    detail::Mask shrinkable = cliques[owner] & ~seed_mask;
    if (shrinkable == 0) return std::nullopt;  // already a singleton
    detail::Mask preferred = shrinkable & ~adj[bad];
    detail::Mask pool = preferred != 0 ? preferred : shrinkable;
    int drop = 63 - std::countl_zero(pool);
    cliques[owner] &= ~detail::bit(drop);
  }
}

}  // namespace netgame
