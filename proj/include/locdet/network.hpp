#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "locdet/geometry.hpp"

namespace locdet {

using NodeId = int;

/// Unit-disk radio network. Node ids are dense 0..S-1; adjacency is derived
/// from positions and never stored externally. Immutable after construction.
struct NetworkGraph {
  std::vector<Position> positions;  // indexed by NodeId
  std::vector<bool> beacon;         // indexed by NodeId
  double radius = 0.0;
  std::vector<std::vector<NodeId>> adj;  // sorted neighbor lists

  int size() const { return static_cast<int>(positions.size()); }
  bool has_edge(NodeId u, NodeId v) const;
  double dist(NodeId u, NodeId v) const {
    return distance(positions[u], positions[v]);
  }
  std::vector<NodeId> beacon_ids() const;
  int beacon_count() const;
};

/// Builds the radio graph: edge (i, j) iff euclidean distance <= radius.
/// Throws std::invalid_argument on <2 nodes, non-finite coordinates,
/// non-positive radius, or a beacon id out of range.
NetworkGraph build_network(std::vector<Position> positions,
                           const std::vector<NodeId>& beacons, double radius);

/// Copy of `net` with the beacon set replaced.
NetworkGraph with_beacons(const NetworkGraph& net,
                          const std::vector<NodeId>& beacons);

/// Distance-constraint graph used by the rigidity kernel and the oracle.
/// Vertices are dense 0..n-1 internally; `labels` maps them back to the
/// caller's ids (identity for graphs derived from a NetworkGraph).
struct ConstraintGraph {
  struct Edge {
    int u = 0;
    int v = 0;
    double length = 0.0;
  };
  std::vector<NodeId> labels;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> adj;  // derived, sorted

  int n() const { return static_cast<int>(labels.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  bool has_edge(int u, int v) const;
};

/// Builds a ConstraintGraph from an explicit vertex count and edge list
/// (labels 0..n-1). Rejects self-loops and duplicate edges.
ConstraintGraph make_constraint_graph(
    int n, const std::vector<std::pair<int, int>>& edges);

/// Radio edges plus every beacon-beacon pair: beacon locations are known, so
/// their mutual distances constrain the framework even without a radio link.
ConstraintGraph to_constraint_graph(const NetworkGraph& net);

}  // namespace locdet
