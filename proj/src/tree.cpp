#include "netgame/tree.hpp"

#include <algorithm>

namespace netgame {

std::string to_string(TreeKind kind) {
  switch (kind) {
    case TreeKind::line: return "line";
    case TreeKind::star: return "star";
    case TreeKind::starlike: return "starlike";
    case TreeKind::general_tree: return "general_tree";
    case TreeKind::not_a_tree: return "not_a_tree";
  }
  return "unknown";
}

int TreeStructure::listed_branch_count() const {
  int m = 0;
  for (const auto& b : branches)
    if (!b.interior.empty()) ++m;
  return m;
}

int TreeStructure::odd_branch_count() const {
  int r = 0;
  for (const auto& b : branches)
    if (b.interior.size() % 2 == 1) ++r;
  return r;
}

int TreeStructure::leaf_branch_count(int center) const {
  int count = 0;
  for (const auto& b : branches) {
    bool a_is_center = centers.contains(b.endpoint_a);
    bool b_is_center = centers.contains(b.endpoint_b);
    if (a_is_center && b_is_center) continue;
    if ((a_is_center && b.endpoint_a == center) || (b_is_center && b.endpoint_b == center))
      ++count;
  }
  return count;
}

bool TreeStructure::all_branches_odd() const {
  for (const auto& b : branches)
    if (b.interior.size() % 2 == 0) return false;
  return !branches.empty();
}

namespace {

// Walks away from `from` through `start` along degree-<=2 non-center nodes.
// Returns the branch ending at the first center met or at a leaf.
Branch walk_branch(const Graph& g, const NodeSet& centers, int from, int start) {
  Branch branch;
  branch.endpoint_a = from;
  std::vector<int> interior;
  int prev = from, cur = start;
  while (!centers.contains(cur)) {
    interior.push_back(cur);
    int next = -1;
    for (int w : g.neighbors(cur))
      if (w != prev) next = w;
    if (next < 0) break;  // leaf
    prev = cur;
    cur = next;
  }
  branch.endpoint_b = cur;
  branch.interior = NodeSet(interior);
  return branch;
}

}  // namespace

TreeStructure tree_structure(const Graph& g) {
  TreeStructure out;
  int n = g.node_count();
  if (n == 0 || !g.is_connected() || g.edge_count() != n - 1) {
    out.kind = TreeKind::not_a_tree;
    return out;
  }

  std::vector<int> center_nodes;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) >= 3) center_nodes.push_back(v);
  out.centers = NodeSet(center_nodes);

  if (out.centers.empty()) {
    out.kind = TreeKind::line;
    // the whole path, reported for information; endpoints are the path ends
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    Branch whole;
    int end_a = 0, end_b = n - 1;
    std::vector<int> ends;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) <= 1) ends.push_back(v);
    if (ends.size() >= 2) {
      end_a = ends[0];
      end_b = ends[1];
    } else if (ends.size() == 1) {
      end_a = end_b = ends[0];
    }
    whole.endpoint_a = end_a;
    whole.endpoint_b = end_b;
    whole.interior = NodeSet(all);
    out.branches.push_back(whole);
    return out;
  }

  for (int c : out.centers) {
    for (int u : g.neighbors(c)) {
      if (out.centers.contains(u)) {
        // adjacent centers: one empty-interior branch, recorded once
        if (c < u) out.branches.push_back(Branch{c, u, NodeSet{}});
        continue;
      }
      Branch b = walk_branch(g, out.centers, c, u);
      // a center-to-center path is discovered from both ends; keep one copy
      if (out.centers.contains(b.endpoint_b) && b.endpoint_a > b.endpoint_b) continue;
      out.branches.push_back(std::move(b));
    }
  }
  std::sort(out.branches.begin(), out.branches.end(), [](const Branch& a, const Branch& b) {
    return std::tie(a.endpoint_a, a.endpoint_b, a.interior) <
           std::tie(b.endpoint_a, b.endpoint_b, b.interior);
  });

  if (out.centers.size() == 1) {
    bool all_single = true;
    for (const auto& b : out.branches)
      if (b.interior.size() != 1) all_single = false;
    out.kind = all_single ? TreeKind::star : TreeKind::starlike;
  } else {
    out.kind = TreeKind::general_tree;
  }
  return out;
}

}  // namespace netgame
