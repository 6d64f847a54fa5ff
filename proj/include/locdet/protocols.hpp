#pragma once

#include <memory>
#include <vector>

#include "locdet/sim.hpp"

namespace locdet {

/// What the runtime grants one node: its own id, its radio neighborhood,
/// beacon locations (beacons flood their coordinates, so every node may
/// resolve them), and link knowledge restricted to the 2-hop view exchanged
/// during setup. Ground-truth positions back the location a node announces
/// once localizable; computing coordinates is out of scope.
class NodeContext {
 public:
  NodeContext(const NetworkGraph& net, NodeId self)
      : net_(&net), self_(self) {}

  NodeId self() const { return self_; }
  bool is_beacon(NodeId v) const { return net_->beacon[v]; }
  const std::vector<NodeId>& neighbors() const { return net_->adj[self_]; }
  Position beacon_position(NodeId v) const { return net_->positions[v]; }
  Position own_position() const { return net_->positions[self_]; }
  /// Radio link between two of this node's neighbors (2-hop setup view).
  bool radio_linked(NodeId u, NodeId v) const { return net_->has_edge(u, v); }
  Position true_position(NodeId v) const { return net_->positions[v]; }

 private:
  const NetworkGraph* net_;
  NodeId self_;
};

/// Collects a node's per-round effects for the engine.
struct RoundEffects {
  std::vector<Message>* outbox = nullptr;
  std::vector<Transition>* transitions = nullptr;
  int round = 0;
  NodeId self = -1;

  void send(Message m) {
    m.sender = self;
    outbox->push_back(std::move(m));
  }
  void log(NodeState from, NodeState to) {
    transitions->push_back({round, self, from, to});
  }
};

class NodeHandler {
 public:
  virtual ~NodeHandler() = default;
  virtual void init(const NodeContext& ctx, RoundEffects& fx) = 0;
  virtual void on_round(const NodeContext& ctx,
                        const std::vector<Message>& inbox,
                        RoundEffects& fx) = 0;
  virtual NodeState state() const = 0;
  /// Committed branch tuple, when the protocol keeps one (TE).
  virtual BranchTuple tuple() const { return {}; }
};

std::unique_ptr<NodeHandler> make_handler(ProtocolKind kind,
                                          const NodeContext& ctx);

/// Largest network an ITE run accepts; its per-node branch sets grow
/// combinatorially, so it stays a small-scale reference implementation.
inline constexpr int kIteMaxNodes = 100;

}  // namespace locdet
