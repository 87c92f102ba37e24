#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace netgame {

// Exact-search and enumeration routines refuse inputs above this many nodes
// unless the caller raises the cap explicitly.
inline constexpr int kDefaultEnumerationCap = 20;

// Default tolerance for nonnegativity / feasibility / complementarity checks.
inline constexpr double kDefaultTol = 1e-9;

// Thrown when an exact search or enumeration would exceed the configured cap.
class CapExceededError : public std::runtime_error {
 public:
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

// Sorted, duplicate-free set of node indices.
class NodeSet {
 public:
  NodeSet() = default;
  NodeSet(std::initializer_list<int> nodes) : NodeSet(std::vector<int>(nodes)) {}
  explicit NodeSet(std::vector<int> nodes) : members_(std::move(nodes)) {
    for (int v : members_) {
      if (v < 0) throw std::invalid_argument("NodeSet: negative node index");
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  static NodeSet from_mask(std::uint64_t mask) {
    std::vector<int> nodes;
    for (int v = 0; mask != 0; ++v, mask >>= 1) {
      if (mask & 1u) nodes.push_back(v);
    }
    return NodeSet(std::move(nodes));
  }

  std::uint64_t to_mask() const {
    std::uint64_t mask = 0;
    for (int v : members_) {
      if (v >= 64) throw std::invalid_argument("NodeSet: node index exceeds mask width");
      mask |= std::uint64_t{1} << v;
    }
    return mask;
  }

  bool contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }

  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  const std::vector<int>& values() const { return members_; }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const NodeSet& a, const NodeSet& b) {
    return a.members_ == b.members_;
  }
  // Lexicographic order on the sorted member lists; used for canonical output.
  friend bool operator<(const NodeSet& a, const NodeSet& b) {
    return a.members_ < b.members_;
  }

 private:
  std::vector<int> members_;
};

}  // namespace netgame
