#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "netgame/graph.hpp"
#include "netgame/types.hpp"

namespace netgame {

// The complementarity problem "find x >= 0 with (I + delta*A)x >= 1 and
// x_i ((I + delta*A)x - 1)_i = 0", whose solutions are the normalized
// equilibria of the game on `graph`. The matrix is never materialized.
struct LcpInstance {
  Graph graph;
  double delta = 1.0;
};

// Validates delta in (0, 1].
LcpInstance build_lcp(Graph g, double delta);

struct Violation {
  enum class Kind { nonnegativity, feasibility, complementarity };
  Kind kind = Kind::nonnegativity;
  int node = -1;
  double amount = 0.0;  // magnitude of the worst violation
  std::string describe() const;
};

struct VerifyResult {
  bool ok = false;
  std::optional<Violation> worst;  // worst violated constraint when !ok
};

// Checks x >= -tol, (I+dA)x >= 1-tol and |x_i ((I+dA)x - 1)_i| <= tol per
// node; reports the single worst violation.
VerifyResult verify_solution(const LcpInstance& inst, std::span<const double> x, double tol);

// (I + delta*A) x, the discounted closed-neighborhood sums.
std::vector<double> closed_neighborhood_sums(const Graph& g, double delta,
                                             std::span<const double> x);

struct LcpSolution {
  std::vector<double> x;
  NodeSet support;
  double l1() const;
};

// Solves the linear system restricted to support s and keeps the result only
// when the system is nonsingular, x is strictly positive on s (above tol) and
// every off-support constraint holds. `singular`, when given, reports whether
// the restricted system was (numerically) singular.
std::optional<LcpSolution> solve_on_support(const LcpInstance& inst, const NodeSet& s,
                                            double tol = kDefaultTol,
                                            bool* singular = nullptr);

struct EnumerationResult {
  std::vector<LcpSolution> solutions;  // canonical order: by support, then value
  int singular_supports = 0;           // skipped singular restricted systems
};

// Exhaustive support enumeration over all nonempty supports; the empty
// support never solves on a nonempty graph. Deduplicates by realized support
// and by value proximity (inf-norm <= 10*tol).
EnumerationResult enumerate_solutions(const LcpInstance& inst, double tol = kDefaultTol,
                                      int cap = kDefaultEnumerationCap);

// Drops a zero coordinate: returns the induced graph without node i and the
// solution vector with coordinate i removed. The restriction is verified on
// the smaller instance and a logic_error is thrown if it fails to hold.
std::pair<Graph, std::vector<double>> restrict_solution(const LcpInstance& inst,
                                                        const LcpSolution& sol, int node,
                                                        double tol = kDefaultTol);

// A solution supported on pairwise independent cliques, constant
// 1/(1 + (|C|-1) delta) on each clique C.
struct IcsSolution {
  std::vector<NodeSet> cliques;
  std::vector<double> x;
  double l1() const;
};

// Grows one clique per node of the given maximum independent set, inside that
// node's private neighborhood (neighbors whose only mis-neighbor it is) and
// away from cliques already placed; assembles the closed-form vector and
// verifies it, shrinking cliques on violation, down to singletons. Returns
// nothing when no assignment verifies.
std::optional<IcsSolution> construct_ics(const Graph& g, double delta, const NodeSet& mis,
                                         double tol = kDefaultTol,
                                         int cap = kDefaultEnumerationCap);

}  // namespace netgame
