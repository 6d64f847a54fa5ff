#pragma once

#include <array>
#include <map>
#include <vector>

#include "locdet/network.hpp"

namespace locdet {

/// A triangle-extension sequence grown from the K_2 on `roots`. Each member
/// joins with exactly two edges to vertices already present, so the edge
/// count is 2|V| - 3 at every step. The last member is the leaf.
struct Branch {
  struct Member {
    NodeId id = -1;
    std::array<NodeId, 2> parents{-1, -1};
  };

  std::array<NodeId, 2> roots{-1, -1};
  std::vector<Member> members;  // extension order

  static Branch k2(NodeId r1, NodeId r2);

  bool contains(NodeId v) const;
  NodeId leaf() const;  // throws if no extension happened yet
  int vertex_count() const { return 2 + static_cast<int>(members.size()); }
  int edge_count() const { return 1 + 2 * static_cast<int>(members.size()); }

  /// Level of each vertex: roots are 0, otherwise 1 + max(parent levels).
  std::map<NodeId, int> levels() const;

  /// All vertices (roots then members in extension order).
  std::vector<NodeId> vertices() const;
};

/// Appends vertex `v` with parents {r1, r2}. Throws if v is already present
/// or a parent is not.
Branch extend(const Branch& branch, NodeId v, NodeId r1, NodeId r2);

/// The branch as a distance-constraint graph: the root edge plus two parent
/// edges per member. Labels are the branch's vertex ids.
ConstraintGraph branch_graph(const Branch& branch);

/// Branch graph plus a fresh vertex q joined to the leaf and both roots.
/// Throws if q is already in the branch or the branch has no leaf.
ConstraintGraph attach_closer(const Branch& branch, NodeId q);

}  // namespace locdet
