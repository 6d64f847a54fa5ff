#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locdet/network.hpp"

namespace locdet {

/// Vertex subset violating the hereditary sparsity bound |E[X]| <= 2|X| - 3.
struct SubsetWitness {
  std::vector<NodeId> vertex_set;  // reported as graph labels
  int edge_count = 0;
};

struct LamanResult {
  bool sparse = false;
  std::optional<SubsetWitness> witness;
};

inline constexpr int kBruteForceVertexCap = 16;

/// Enumerates every X with 2 <= |X| <= |V|-1 and checks |E[X]| <= 2|X| - 3.
/// Refuses graphs with more than kBruteForceVertexCap vertices.
LamanResult laman_sparse_bruteforce(const ConstraintGraph& g);

/// |E| == 2|V| - 3 together with hereditary sparsity (enumeration up to the
/// cap, pebble game beyond it).
bool is_minimally_rigid(const ConstraintGraph& g);

/// |E| == 2|V| - 2 with every proper subset sparse, i.e. the edge set is a
/// single circuit of the (2,3) sparsity matroid.
bool is_m_circuit(const ConstraintGraph& g);

struct PebbleResult {
  bool rigid = false;
  bool redundant = false;  // rigid after deleting any single edge
  int rank = 0;
};

/// (2,3)-pebble game: rank, rigidity, and redundant rigidity.
PebbleResult pebble_game_rigid(const ConstraintGraph& g);

/// Rank of the (2,3) sparsity matroid via the pebble game.
int rigidity_rank(const ConstraintGraph& g);

/// Independent rank oracle: greedy basis construction where each
/// independence test enumerates vertex subsets. Capped at
/// kBruteForceVertexCap vertices; never touches the pebble game.
int bruteforce_rank(const ConstraintGraph& g);
bool bruteforce_rigid(const ConstraintGraph& g);

/// No vertex cut of size < k disconnects g. Subset enumeration for k <= 3,
/// vertex-capacity max-flow beyond. Throws if |V| < k + 1.
bool vertex_connectivity_at_least(const ConstraintGraph& g, int k);

/// Exact vertex connectivity (|V|-1 for complete graphs, 0 when disconnected).
int vertex_connectivity(const ConstraintGraph& g);

/// 3-connected and redundantly rigid; K_2 and K_3 count as globally rigid
/// (unique realization up to congruence).
bool is_globally_rigid(const ConstraintGraph& g);

enum class EdgeCountClass { kUnder, kMinimal, kCircuit, kOver };

struct RigidityVerdict {
  bool sparsity_ok = false;
  EdgeCountClass edge_count_class = EdgeCountClass::kUnder;
  bool rigid = false;
  bool redundantly_rigid = false;
  int connectivity = 0;
  bool globally_rigid = false;
};

RigidityVerdict analyze_rigidity(const ConstraintGraph& g);

std::string to_string(EdgeCountClass c);

/// Maximal rigid subgraphs as an edge partition. Each entry lists the
/// component's vertices (dense indices) and the indices of its edges in
/// g.edges. Components pairwise share at most one vertex.
struct RigidComponent {
  std::vector<int> vertices;
  std::vector<int> edge_indices;
};
std::vector<RigidComponent> rigid_components(const ConstraintGraph& g);

}  // namespace locdet
