#include <map>

#include "locdet/geometry.hpp"
#include "proto_common.hpp"

namespace locdet {

namespace {

// Trilateration: a node is determined once it has three localizable radio
// neighbors whose positions are not all on one line.
class TpNode : public NodeHandler {
 public:
  void init(const NodeContext& ctx, RoundEffects& fx) override {
    if (ctx.is_beacon(ctx.self())) {
      state_ = NodeState::kLocalizable;
      Message m;
      m.pc = detail::beacon_candidate(ctx);
      fx.send(std::move(m));
    }
  }

  void on_round(const NodeContext& ctx, const std::vector<Message>& inbox,
                RoundEffects& fx) override {
    for (const Message& m : inbox) {
      if (m.kind != MsgKind::kState) continue;
      if (m.pc.b.state == NodeState::kLocalizable && m.pc.has_position)
        anchors_[m.pc.id] = m.pc.position;
    }
    if (state_ != NodeState::kFlexible || anchors_.size() < 3) return;
    std::vector<Position> pts;
    pts.reserve(anchors_.size());
    for (const auto& [id, pos] : anchors_) pts.push_back(pos);
    if (all_collinear(pts)) return;
    state_ = NodeState::kLocalizable;
    fx.log(NodeState::kFlexible, NodeState::kLocalizable);
    Message m;
    m.pc.id = ctx.self();
    m.pc.b.state = NodeState::kLocalizable;
    m.pc.position = ctx.true_position(ctx.self());
    m.pc.has_position = true;
    fx.send(std::move(m));
  }

  NodeState state() const override { return state_; }

 private:
  NodeState state_ = NodeState::kFlexible;
  std::map<NodeId, Position> anchors_;
};

}  // namespace

std::unique_ptr<NodeHandler> make_tp_node() { return std::make_unique<TpNode>(); }

}  // namespace locdet
