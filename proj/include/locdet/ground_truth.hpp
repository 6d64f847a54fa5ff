#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "locdet/network.hpp"
#include "locdet/rigidity.hpp"

namespace locdet {

/// Maximal subgraphs that stay rigid after deleting any single edge.
/// Vertices may sit in several components (components pairwise share at most
/// one vertex). Returned as graph labels plus edge indices into g.edges.
std::vector<RigidComponent> redundantly_rigid_components(
    const ConstraintGraph& g);

struct PathWitness {
  std::array<NodeId, 3> beacons{-1, -1, -1};
  std::vector<std::vector<NodeId>> paths;  // from node to each beacon
};

/// Vertex-disjoint paths from `node` to three distinct members of `beacons`,
/// found by unit-vertex-capacity max-flow into a super-sink. Throws when
/// fewer than 3 beacons are supplied.
std::optional<PathWitness> three_disjoint_paths_to_beacons(
    const ConstraintGraph& g, int node, const std::vector<int>& beacons);

struct NodeWitness {
  int component = -1;  // index into the component list
  PathWitness paths;
};

struct LocalizabilitySet {
  std::vector<NodeId> localizable;  // sorted; beacons included
  bool degenerate = false;  // < 3 beacons, or all beacons on one line
  std::vector<RigidComponent> components;
  std::map<NodeId, NodeWitness> witnesses;  // non-beacon members only

  bool contains(NodeId v) const;
};

/// Centralized reference for node localizability on the constraint graph:
/// a node is in the set when it belongs to a redundantly rigid component
/// with three vertex-disjoint paths to three distinct beacons inside that
/// component. Beacons are always included. With fewer than 3 beacons or all
/// beacons collinear the set is just the beacons, flagged degenerate.
LocalizabilitySet rr3p_localizable_set(const NetworkGraph& net);

/// Scale guard for oracle runs (near-quadratic pebble decompositions).
inline constexpr int kOracleMaxNodes = 400;

}  // namespace locdet
