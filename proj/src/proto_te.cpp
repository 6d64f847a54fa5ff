#include <set>

#include "locdet/geometry.hpp"
#include "proto_common.hpp"

namespace locdet {

namespace {

using detail::CandidateStore;
using detail::pair_contains;
using detail::same_roots;

// Directed triangle extension with dual-v detection. A node commits to one
// parent pair: two anchors (nodes of determined location, beacons included)
// seed a fresh block, otherwise one parent must be a parent of the other.
// Each node broadcasts at most twice (rigid, then localizable). Blocks that
// stall against each other are bridged by a QUERY/CONFIRM handshake with a
// parent. Root coordinates travel inside the tuples.
class TeNode : public NodeHandler {
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
    std::vector<int> fresh;
    for (const Message& m : inbox) {
      switch (m.kind) {
        case MsgKind::kState:
          fresh.push_back(cands_.upsert(m.pc));
          break;
        case MsgKind::kQuery:
          handle_query(ctx, m, fx);
          break;
        case MsgKind::kConfirm:
          mark_localizable(ctx, fx);
          break;
      }
    }
    if (!fresh.empty()) answer_pending(ctx, fx);
    if (ctx.is_beacon(ctx.self())) return;
    if (state_ == NodeState::kFlexible) {
      if (try_extension(ctx, fresh, fx)) detect_full(ctx, fx);
    } else if (state_ == NodeState::kRigid) {
      detect_incremental(ctx, fresh, fx);
    }
  }

  NodeState state() const override { return state_; }
  BranchTuple tuple() const override { return myp_; }

 private:
  // A neighbor whose location is determined: a beacon, or a localizable
  // node announcing its position. Two such neighbors form a K_2 with known
  // edge length and can root a new block.
  static bool anchor(const ParentCandidate& p) {
    return p.beacon ||
           (p.b.state == NodeState::kLocalizable && p.has_position);
  }

  bool try_extension(const NodeContext& ctx, const std::vector<int>& fresh,
                     RoundEffects& fx) {
    const auto& all = cands_.entries();
    // Anchor pairs take precedence over chain pairs arriving the same
    // round: fresh roots put this node one hop from its block's anchors.
    for (int pass = 0; pass < 2; ++pass) {
      for (int fi : fresh) {
        const auto& incoming = all[fi];
        for (int j = 0; j < static_cast<int>(all.size()); ++j) {
          if (all[j].id == incoming.id) continue;
          const bool anchors = anchor(incoming) && anchor(all[j]);
          if (pass == 0 && !anchors) continue;
          if (try_pair(incoming, all[j]) || try_pair(all[j], incoming)) {
            state_ = NodeState::kRigid;
            myp_.state = NodeState::kRigid;
            fx.log(NodeState::kFlexible, NodeState::kRigid);
            broadcast_myp(ctx, fx);
            return true;
          }
        }
      }
    }
    return false;
  }

  // Procedure case ladder for one ordered candidate pair. On a match the
  // parents and roots are fixed for good.
  bool try_pair(const ParentCandidate& pi, const ParentCandidate& pj) {
    if (anchor(pi)) {
      if (anchor(pj)) return adopt_roots(pi, pj);
      if (pi.beacon && pj.b.has_roots() && pair_contains(pj.b.parents, pi.id))
        return adopt_inherited({pi.id, pj.id}, pj);
      // fall through: an anchor can still be a plain parent below
    }
    if (!pi.b.has_roots() || pi.beacon) return false;
    if (pj.b.state == NodeState::kLocalizable &&
        pair_contains(pi.b.parents, pj.id))
      return adopt_inherited({pi.id, pj.id}, pi);
    if (pair_contains(pj.b.parents, pi.id) ||
        pair_contains(pi.b.parents, pj.id))
      return adopt_inherited({pi.id, pj.id}, pi);
    return false;
  }

  bool adopt_roots(const ParentCandidate& a, const ParentCandidate& b) {
    myp_.parents = {a.id, b.id};
    myp_.level = 1;
    if (a.id < b.id) {
      myp_.roots = {a.id, b.id};
      root_pos_ = {a.position, b.position};
    } else {
      myp_.roots = {b.id, a.id};
      root_pos_ = {b.position, a.position};
    }
    return true;
  }

  bool adopt_inherited(std::array<NodeId, 2> parents,
                       const ParentCandidate& source) {
    myp_.parents = parents;
    myp_.roots = source.b.roots;  // already sorted on the wire
    myp_.level = source.b.level + 1;
    root_pos_ = source.root_positions;
    return true;
  }

  void detect_full(const NodeContext& ctx, RoundEffects& fx) {
    const int n = static_cast<int>(cands_.entries().size());
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    detect_incremental(ctx, all, fx);
  }

  void detect_incremental(const NodeContext& ctx, const std::vector<int>& fresh,
                          RoundEffects& fx) {
    const auto& all = cands_.entries();
    for (int fi : fresh) {
      if (state_ != NodeState::kRigid) return;
      const auto& pn = all[fi];
      // A determined neighbor anchors the whole branch when it is provably
      // not part of it: beacons never extend, a node committed to different
      // roots belongs to a different block, and a same-block node at a
      // strictly deeper level cannot be an ancestor (levels strictly grow
      // along parent edges).
      const bool outside_branch =
          pn.beacon ||
          (pn.b.has_roots() && (!same_roots(pn.b.roots, myp_.roots) ||
                                pn.b.level > myp_.level));
      if (pn.has_position && outside_branch &&
          !pair_contains(myp_.roots, pn.id) &&
          !pair_contains(myp_.parents, pn.id)) {
        if (!is_collinear(root_pos_[0], root_pos_[1], pn.position)) {
          mark_localizable(ctx, fx);
          continue;
        }
      }
      if (pn.beacon) continue;
      if (pn.b.state == NodeState::kLocalizable &&
          pair_contains(pn.b.parents, ctx.self())) {
        mark_localizable(ctx, fx);
        continue;
      }
      if (pn.b.has_roots() && !same_roots(pn.b.roots, myp_.roots))
        try_dual_v(pn, fx);
    }
  }

  // Dual-v detection: `pn` belongs to a foreign block. Look for a stored
  // neighbor forming a parent/child pair with it, then ask our own parents
  // whether they reach either end of that pair.
  void try_dual_v(const ParentCandidate& pn, RoundEffects& fx) {
    std::array<Position, 4> root_pos = {root_pos_[0], root_pos_[1],
                                        pn.root_positions[0],
                                        pn.root_positions[1]};
    if (all_collinear(root_pos)) return;
    for (const auto& pi : cands_.entries()) {
      if (pi.id == pn.id || pi.beacon || !pi.b.has_roots()) continue;
      if (!same_roots(pi.b.roots, pn.b.roots)) continue;
      if (!pair_contains(pi.b.parents, pn.id) &&
          !pair_contains(pn.b.parents, pi.id))
        continue;
      const auto key = detail::sorted_pair(pn.id, pi.id);
      if (!queried_.insert({key[0], key[1]}).second) continue;
      Message q;
      q.kind = MsgKind::kQuery;
      q.foreign = {pn.id, pi.id};
      q.foreign_roots = pn.b.roots;
      q.asker_roots = myp_.roots;
      fx.send(std::move(q));
    }
  }

  void handle_query(const NodeContext& ctx, const Message& m,
                    RoundEffects& fx) {
    // Only a member of the asker's own block may close the bridge: the
    // overlap pattern needs the asker-confirmer link inside one block.
    if (state_ == NodeState::kFlexible || !myp_.has_roots() ||
        !same_roots(myp_.roots, m.asker_roots))
      return;
    if (cands_.contains(m.foreign[0]) || cands_.contains(m.foreign[1])) {
      confirm(ctx, m.sender, m.foreign, fx);
      return;
    }
    // Keep the question open: the bridge node may come into earshot later.
    pending_.push_back({m.sender, m.foreign});
  }

  void answer_pending(const NodeContext& ctx, RoundEffects& fx) {
    for (std::size_t i = 0; i < pending_.size();) {
      const auto& [asker, foreign] = pending_[i];
      if (cands_.contains(foreign[0]) || cands_.contains(foreign[1])) {
        confirm(ctx, asker, foreign, fx);
        pending_[i] = pending_.back();
        pending_.pop_back();
      } else {
        ++i;
      }
    }
  }

  void confirm(const NodeContext& ctx, NodeId asker,
               const std::array<NodeId, 2>& foreign, RoundEffects& fx) {
    Message c;
    c.kind = MsgKind::kConfirm;
    c.target = asker;
    c.foreign = foreign;
    fx.send(std::move(c));
    mark_localizable(ctx, fx);  // both bridge nodes are determined
  }

  void mark_localizable(const NodeContext& ctx, RoundEffects& fx) {
    if (state_ != NodeState::kRigid) return;
    state_ = NodeState::kLocalizable;
    myp_.state = NodeState::kLocalizable;
    fx.log(NodeState::kRigid, NodeState::kLocalizable);
    broadcast_myp(ctx, fx);
  }

  void broadcast_myp(const NodeContext& ctx, RoundEffects& fx) {
    Message m;
    m.pc.id = ctx.self();
    m.pc.beacon = false;
    m.pc.b = myp_;
    m.pc.root_positions = root_pos_;
    if (myp_.state == NodeState::kLocalizable) {
      m.pc.position = ctx.true_position(ctx.self());
      m.pc.has_position = true;
    }
    fx.send(std::move(m));
  }

  NodeState state_ = NodeState::kFlexible;
  BranchTuple myp_;
  std::array<Position, 2> root_pos_{};
  CandidateStore cands_;
  std::set<std::pair<NodeId, NodeId>> queried_;
  std::vector<std::pair<NodeId, std::array<NodeId, 2>>> pending_;
};

}  // namespace

std::unique_ptr<NodeHandler> make_te_node() { return std::make_unique<TeNode>(); }

}  // namespace locdet
