#pragma once

#include <array>
#include <string>
#include <vector>

#include "locdet/network.hpp"

namespace locdet {

enum class ProtocolKind { kTe, kIte, kTp, kWe };

ProtocolKind protocol_from_string(const std::string& s);
std::string to_string(ProtocolKind k);

enum class NodeState { kFlexible, kRigid, kLocalizable };
std::string to_string(NodeState s);

enum class MsgKind { kState, kQuery, kConfirm };

/// Branch tuple as carried on the wire: state plus parent and root ids.
struct BranchTuple {
  NodeState state = NodeState::kFlexible;
  std::array<NodeId, 2> parents{-1, -1};
  std::array<NodeId, 2> roots{-1, -1};
  int level = 0;  // extension depth: 1 + max(parent levels), roots are 0

  bool has_roots() const { return roots[0] >= 0; }
};

/// A neighbor's advertised tuple: the candidate-parent record a node keeps
/// per sender. `beacon` senders carry their position; non-beacons carry a
/// position only once localizable. Root coordinates ride along with the
/// tuple so that collinearity tests work many hops from the roots.
struct ParentCandidate {
  NodeId id = -1;
  bool beacon = false;
  BranchTuple b;
  Position position{};
  bool has_position = false;
  std::array<Position, 2> root_positions{};

  bool is_parent_of(NodeId child_parent0, NodeId child_parent1) const {
    return id == child_parent0 || id == child_parent1;
  }
};

struct Message {
  MsgKind kind = MsgKind::kState;
  NodeId sender = -1;
  NodeId target = -1;  // -1: broadcast to radio neighbors
  ParentCandidate pc;  // kState payload
  // kQuery / kConfirm payload: the two foreign-block ids being bridged,
  // their block's roots, and the asking node's own roots.
  std::array<NodeId, 2> foreign{-1, -1};
  std::array<NodeId, 2> foreign_roots{-1, -1};
  std::array<NodeId, 2> asker_roots{-1, -1};
  // Wheel announcements (kState): members to mark localizable.
  std::vector<NodeId> wheel_members;
};

struct Transition {
  int round = 0;
  NodeId node = -1;
  NodeState from = NodeState::kFlexible;
  NodeState to = NodeState::kFlexible;
};

struct RunTrace {
  ProtocolKind protocol = ProtocolKind::kTe;
  int rounds_executed = 0;
  bool converged = false;
  std::vector<int> state_broadcasts;  // per node, kState only
  int query_total = 0;
  int confirm_total = 0;
  std::vector<Transition> transitions;
  std::vector<NodeState> final_states;
  std::vector<BranchTuple> final_tuples;  // committed parents/roots (TE)

  int localizable_count() const;  // beacons included
};

inline constexpr int kDefaultBudgetPerNode = 10;

/// Synchronous deterministic rounds: every round-r broadcast is delivered to
/// all radio neighbors at round r+1 and handlers run in ascending NodeId
/// order. Stops once no state change and no new message occur for two
/// consecutive rounds, or at `budget` rounds (converged=false then).
/// budget <= 0 selects 10 * S.
RunTrace run(const NetworkGraph& net, ProtocolKind protocol, int budget = 0);

/// First round after which no transitions occur (0 for an empty log).
int convergence_round(const RunTrace& trace);

}  // namespace locdet
