#pragma once

#include <string>
#include <vector>

#include "netgame/graph.hpp"
#include "netgame/types.hpp"

namespace netgame {

enum class TreeKind { line, star, starlike, general_tree, not_a_tree };

std::string to_string(TreeKind kind);

// A maximal center-free path. endpoint_a/endpoint_b are the path ends (centers
// or leaves); interior holds the non-center nodes on the path, leaves
// included. Adjacent centers yield a branch with an empty interior.
struct Branch {
  int endpoint_a = -1;
  int endpoint_b = -1;
  NodeSet interior;
};

struct TreeStructure {
  TreeKind kind = TreeKind::not_a_tree;
  NodeSet centers;               // nodes of degree >= 3
  std::vector<Branch> branches;  // empty-interior center-to-center branches included

  // m: every branch counts, including empty-interior center-to-center ones.
  int branch_count() const { return static_cast<int>(branches.size()); }
  // Alternative convention that omits empty-interior branches.
  int listed_branch_count() const;
  // r: branches whose interior has odd size.
  int odd_branch_count() const;
  // m_j: branches at `center` that terminate at a leaf.
  int leaf_branch_count(int center) const;
  bool all_branches_odd() const;
};

// Total classification: not_a_tree for disconnected or cyclic graphs, line
// when no node has degree >= 3, star/starlike for one center, general_tree
// otherwise. For lines the whole path is reported as a single branch record
// with no center endpoints.
TreeStructure tree_structure(const Graph& g);

}  // namespace netgame
