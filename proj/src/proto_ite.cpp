#include <set>

#include "locdet/geometry.hpp"
#include "proto_common.hpp"

namespace locdet {

namespace {

using detail::CandidateStore;
using detail::pair_contains;
using detail::same_roots;
using detail::sorted_pair;

// Undirected triangle extension: the node keeps a whole set of branches, one
// per admissible (parents, roots) combination, and announces each of them.
// Reference implementation; memory grows with the neighborhood, so runs are
// gated to small networks.
class IteNode : public NodeHandler {
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
    if (ctx.is_beacon(ctx.self())) return;
    std::vector<int> fresh;
    for (const Message& m : inbox)
      if (m.kind == MsgKind::kState) fresh.push_back(cands_.upsert(m.pc));

    const std::size_t first_new_branch = branches_.size();
    const auto& all = cands_.entries();
    for (int fi : fresh) {
      const auto& incoming = all[fi];
      for (int j = 0; j < static_cast<int>(all.size()); ++j) {
        if (all[j].id == incoming.id) continue;
        try_cases(incoming, all[j]);
        try_cases(all[j], incoming);
      }
    }

    // Detection triggered by this round's messages, over all branches.
    for (int fi : fresh) detect_against(ctx, all[fi], 0);
    // Branches created this round check every remembered candidate.
    for (const auto& pc : all)
      detect_against(ctx, pc, first_new_branch);

    update_state(fx);
    announce(ctx, fx);
  }

  NodeState state() const override { return state_; }

 private:
  struct BranchRec {
    std::array<NodeId, 2> parents{-1, -1};
    std::array<NodeId, 2> roots{-1, -1};
    NodeState bstate = NodeState::kRigid;
    NodeState announced = NodeState::kFlexible;  // highest state broadcast
  };

  void try_cases(const ParentCandidate& pi, const ParentCandidate& pj) {
    if (pi.beacon) {
      if (pj.beacon) {
        add_branch({pi.id, pj.id}, {pi.id, pj.id});
      } else if (pj.b.has_roots() && pair_contains(pj.b.roots, pi.id)) {
        add_branch({pi.id, pj.id}, pj.b.roots);
      }
      return;
    }
    if (!pi.b.has_roots()) return;
    if (pj.b.state == NodeState::kLocalizable &&
        pair_contains(pi.b.roots, pj.id)) {
      add_branch({pi.id, pj.id}, pi.b.roots);
    } else if (pj.b.has_roots() && same_roots(pi.b.roots, pj.b.roots)) {
      add_branch({pi.id, pj.id}, pi.b.roots);
    }
  }

  void add_branch(std::array<NodeId, 2> parents, std::array<NodeId, 2> roots) {
    BranchRec rec;
    rec.parents = sorted_pair(parents[0], parents[1]);
    rec.roots = sorted_pair(roots[0], roots[1]);
    const auto key = std::make_pair(rec.parents, rec.roots);
    if (!branch_keys_.insert(key).second) return;
    branches_.push_back(rec);
  }

  // Applies the detection rules of one candidate to branches[from..].
  void detect_against(const NodeContext& ctx, const ParentCandidate& pn,
                      std::size_t from) {
    for (std::size_t i = from; i < branches_.size(); ++i) {
      auto& br = branches_[i];
      if (br.bstate == NodeState::kLocalizable) continue;
      if (pn.beacon) {
        if (!pair_contains(br.roots, pn.id) &&
            !is_collinear(ctx.beacon_position(br.roots[0]),
                          ctx.beacon_position(br.roots[1]), pn.position))
          br.bstate = NodeState::kLocalizable;
      } else if (pn.b.state == NodeState::kLocalizable &&
                 pair_contains(pn.b.parents, ctx.self()) &&
                 same_roots(br.roots, pn.b.roots)) {
        br.bstate = NodeState::kLocalizable;
      }
    }
  }

  void update_state(RoundEffects& fx) {
    NodeState target = NodeState::kFlexible;
    for (const auto& br : branches_)
      target = std::max(target, br.bstate);
    while (state_ < target) {
      const NodeState next =
          static_cast<NodeState>(static_cast<int>(state_) + 1);
      fx.log(state_, next);
      state_ = next;
    }
  }

  void announce(const NodeContext& ctx, RoundEffects& fx) {
    for (auto& br : branches_) {
      if (br.announced >= br.bstate) continue;
      br.announced = br.bstate;
      Message m;
      m.pc.id = ctx.self();
      m.pc.beacon = false;
      m.pc.b.state = br.bstate;
      m.pc.b.parents = br.parents;
      m.pc.b.roots = br.roots;
      fx.send(std::move(m));
    }
  }

  NodeState state_ = NodeState::kFlexible;
  CandidateStore cands_;
  std::vector<BranchRec> branches_;
  std::set<std::pair<std::array<NodeId, 2>, std::array<NodeId, 2>>> branch_keys_;
};

}  // namespace

std::unique_ptr<NodeHandler> make_ite_node() {
  return std::make_unique<IteNode>();
}

}  // namespace locdet
