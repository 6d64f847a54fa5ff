#include <algorithm>
#include <map>

#include "locdet/geometry.hpp"
#include "proto_common.hpp"

namespace locdet {

namespace {

// Wheel extension. A node is the hub of a wheel when some cycle runs through
// its neighbors (rim); once a wheel holds three non-collinear localizable
// members, every member is determined. Each node hunts for such a wheel
// around itself using its 2-hop view and announces the rim on success.
class WeNode : public NodeHandler {
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
      if (m.pc.b.state == NodeState::kLocalizable && m.pc.has_position) {
        anchors_[m.pc.id] = m.pc.position;
        dirty_ = true;
      }
      if (state_ == NodeState::kFlexible && !m.wheel_members.empty() &&
          std::find(m.wheel_members.begin(), m.wheel_members.end(),
                    ctx.self()) != m.wheel_members.end()) {
        become_localizable(ctx, fx, /*rim=*/{});
      }
    }
    if (state_ != NodeState::kFlexible || !dirty_) return;
    dirty_ = false;
    if (anchors_.size() < 3) return;
    const auto rim = find_wheel_rim(ctx);
    if (!rim.empty()) become_localizable(ctx, fx, rim);
  }

  NodeState state() const override { return state_; }

 private:
  void become_localizable(const NodeContext& ctx, RoundEffects& fx,
                          const std::vector<NodeId>& rim) {
    state_ = NodeState::kLocalizable;
    fx.log(NodeState::kFlexible, NodeState::kLocalizable);
    Message m;
    m.pc.id = ctx.self();
    m.pc.b.state = NodeState::kLocalizable;
    m.pc.position = ctx.true_position(ctx.self());
    m.pc.has_position = true;
    m.wheel_members = rim;
    fx.send(std::move(m));
  }

  // --- rim search over the neighborhood graph (dense indices) ---

  std::vector<NodeId> find_wheel_rim(const NodeContext& ctx) {
    const auto& nbrs = ctx.neighbors();
    const int m = static_cast<int>(nbrs.size());
    if (m < 3) return {};
    std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (ctx.radio_linked(nbrs[i], nbrs[j])) adj[i][j] = adj[j][i] = 1;
    std::vector<int> loc;
    for (int i = 0; i < m; ++i)
      if (anchors_.count(nbrs[i])) loc.push_back(i);
    if (loc.size() < 3) return {};

    int budget = 200;  // candidate triples per search
    const int L = static_cast<int>(loc.size());
    for (int ia = 0; ia < L && budget > 0; ++ia)
      for (int ib = ia + 1; ib < L && budget > 0; ++ib)
        for (int ic = ib + 1; ic < L && budget > 0; --budget, ++ic) {
          auto cycle = cycle_through(adj, m, loc[ia], loc[ib], loc[ic]);
          if (cycle.empty()) continue;
          // The wheel's localizable members must not sit on one line.
          std::vector<Position> pts;
          for (int v : cycle)
            if (auto it = anchors_.find(nbrs[v]); it != anchors_.end())
              pts.push_back(it->second);
          if (all_collinear(pts)) continue;
          std::vector<NodeId> rim;
          rim.reserve(cycle.size());
          for (int v : cycle) rim.push_back(nbrs[v]);
          return rim;
        }
    return {};
  }

  static std::vector<int> bfs_path(const std::vector<std::vector<char>>& adj,
                                   int m, int s, int t,
                                   const std::vector<char>& banned) {
    std::vector<int> prev(m, -2);
    std::vector<int> queue{s};
    prev[s] = -1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int u = queue[qi];
      if (u == t) break;
      for (int v = 0; v < m; ++v) {
        if (!adj[u][v] || prev[v] != -2 || (banned[v] && v != t)) continue;
        prev[v] = u;
        queue.push_back(v);
      }
    }
    if (prev[t] == -2) return {};
    std::vector<int> path;
    for (int v = t; v != -1; v = prev[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
  }

  static bool valid_cycle(const std::vector<std::vector<char>>& adj,
                          const std::vector<int>& cyc) {
    if (cyc.size() < 3) return false;
    std::vector<int> sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      return false;
    for (std::size_t i = 0; i < cyc.size(); ++i)
      if (!adj[cyc[i]][cyc[(i + 1) % cyc.size()]]) return false;
    return true;
  }

  // A simple cycle visiting a, b, and c: greedy disjoint segments first,
  // exhaustive DFS as a fallback on small neighborhoods.
  static std::vector<int> cycle_through(
      const std::vector<std::vector<char>>& adj, int m, int a, int b, int c) {
    for (const auto [x, y, z] :
         {std::array<int, 3>{a, b, c}, std::array<int, 3>{a, c, b}}) {
      std::vector<char> banned(m, 0);
      banned[z] = 1;
      auto p1 = bfs_path(adj, m, x, y, banned);
      if (p1.empty()) continue;
      banned.assign(m, 0);
      for (int v : p1) banned[v] = 1;
      banned[y] = 0;
      auto p2 = bfs_path(adj, m, y, z, banned);
      if (p2.empty()) continue;
      banned.assign(m, 0);
      for (int v : p1) banned[v] = 1;
      for (int v : p2) banned[v] = 1;
      banned[z] = 0;
      auto p3 = bfs_path(adj, m, z, x, banned);
      if (p3.empty()) continue;
      std::vector<int> cyc(p1.begin(), p1.end() - 1);
      cyc.insert(cyc.end(), p2.begin(), p2.end() - 1);
      cyc.insert(cyc.end(), p3.begin(), p3.end() - 1);
      if (valid_cycle(adj, cyc)) return cyc;
    }
    if (m <= 11) return dfs_cycle(adj, m, a, b, c);
    return {};
  }

  static std::vector<int> dfs_cycle(const std::vector<std::vector<char>>& adj,
                                    int m, int a, int b, int c) {
    std::vector<int> path{a};
    std::vector<char> used(m, 0);
    used[a] = 1;
    int steps = 50000;
    std::vector<int> found;
    dfs_cycle_rec(adj, m, a, b, c, path, used, steps, found);
    return found;
  }

  static void dfs_cycle_rec(const std::vector<std::vector<char>>& adj, int m,
                            int a, int b, int c, std::vector<int>& path,
                            std::vector<char>& used, int& steps,
                            std::vector<int>& found) {
    if (!found.empty() || steps-- <= 0) return;
    const int u = path.back();
    if (path.size() >= 3 && adj[u][a]) {
      if (used[b] && used[c]) {
        found = path;
        return;
      }
    }
    for (int v = 0; v < m && found.empty(); ++v) {
      if (!adj[u][v] || used[v]) continue;
      used[v] = 1;
      path.push_back(v);
      dfs_cycle_rec(adj, m, a, b, c, path, used, steps, found);
      path.pop_back();
      used[v] = 0;
    }
  }

  NodeState state_ = NodeState::kFlexible;
  bool dirty_ = false;
  std::map<NodeId, Position> anchors_;
};

}  // namespace

std::unique_ptr<NodeHandler> make_we_node() { return std::make_unique<WeNode>(); }

std::unique_ptr<NodeHandler> make_te_node();
std::unique_ptr<NodeHandler> make_ite_node();
std::unique_ptr<NodeHandler> make_tp_node();

std::unique_ptr<NodeHandler> make_handler(ProtocolKind kind,
                                          const NodeContext&) {
  switch (kind) {
    case ProtocolKind::kTe: return make_te_node();
    case ProtocolKind::kIte: return make_ite_node();
    case ProtocolKind::kTp: return make_tp_node();
    case ProtocolKind::kWe: return make_we_node();
  }
  throw std::invalid_argument("make_handler: bad protocol");
}

}  // namespace locdet
