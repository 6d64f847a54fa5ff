#include "locdet/rigidity.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "locdet/maxflow.hpp"

namespace locdet {

namespace {

// ---------------------------------------------------------------------------
// (2,3)-pebble game. Every vertex starts with two pebbles; inserting an
// independent edge requires four pebbles on its endpoints (gathered by
// reversing directed paths) and consumes one. Edges that cannot gather four
// pebbles are dependent: they close a circuit of the sparsity matroid.
// ---------------------------------------------------------------------------
class PebbleGame {
 public:
  explicit PebbleGame(int n)
      : n_(n), pebbles_(n, 2), out_(n), mark_(n, 0), parent_(n, -1) {}

  // Accepts and orients the edge when independent.
  bool insert(int u, int v) {
    if (!gather(u, v)) return false;
    pebbles_[u] -= 1;
    out_[u].push_back(v);
    ++rank_;
    return true;
  }

  // True when (u, v) is already spanned (dependent). Pebble moves performed
  // by the probe keep the game state equivalent.
  bool spans(int u, int v) { return !gather(u, v); }

  int rank() const { return rank_; }

 private:
  bool gather(int u, int v) {
    while (pebbles_[u] + pebbles_[v] < 4) {
      if (!take_pebble(u, v) && !take_pebble(v, u)) return false;
    }
    return true;
  }

  // DFS from `root` for a vertex holding a free pebble; `other` is off
  // limits. On success the path is reversed and the pebble moved to root.
  bool take_pebble(int root, int other) {
    ++stamp_;
    mark_[root] = stamp_;
    mark_[other] = stamp_;
    stack_.clear();
    stack_.push_back(root);
    int found = -1;
    while (!stack_.empty() && found < 0) {
      const int x = stack_.back();
      stack_.pop_back();
      for (int y : out_[x]) {
        if (mark_[y] == stamp_) continue;
        mark_[y] = stamp_;
        parent_[y] = x;
        if (pebbles_[y] > 0) {
          found = y;
          break;
        }
        stack_.push_back(y);
      }
    }
    if (found < 0) return false;
    pebbles_[found] -= 1;
    pebbles_[root] += 1;
    for (int y = found; y != root;) {
      const int x = parent_[y];
      auto& ox = out_[x];
      ox.erase(std::find(ox.begin(), ox.end(), y));
      out_[y].push_back(x);
      y = x;
    }
    return true;
  }

  int n_;
  std::vector<int> pebbles_;
  std::vector<std::vector<int>> out_;
  std::vector<int> mark_;
  std::vector<int> parent_;
  std::vector<int> stack_;
  int stamp_ = 0;
  int rank_ = 0;
};

int pebble_rank_excluding(const ConstraintGraph& g, int skip_edge) {
  PebbleGame game(g.n());
  for (int i = 0; i < g.edge_count(); ++i) {
    if (i == skip_edge) continue;
    game.insert(g.edges[i].u, g.edges[i].v);
  }
  return game.rank();
}

// Edge counts of induced subgraphs for subset enumeration, via adjacency
// bitmasks. Only valid up to kBruteForceVertexCap vertices.
std::vector<std::uint32_t> adjacency_masks(const ConstraintGraph& g) {
  std::vector<std::uint32_t> masks(g.n(), 0);
  for (const auto& e : g.edges) {
    masks[e.u] |= 1u << e.v;
    masks[e.v] |= 1u << e.u;
  }
  return masks;
}

int induced_edge_count(const std::vector<std::uint32_t>& masks,
                       std::uint32_t subset) {
  int twice = 0;
  std::uint32_t rest = subset;
  while (rest) {
    const int v = std::countr_zero(rest);
    rest &= rest - 1;
    twice += std::popcount(masks[v] & subset);
  }
  return twice / 2;
}

void require_brute_size(const ConstraintGraph& g, const char* who) {
  if (g.n() > kBruteForceVertexCap)
    throw std::invalid_argument(std::string(who) +
                                ": graph too large for enumeration");
}

bool connected_after_removal(const ConstraintGraph& g,
                             const std::vector<char>& removed) {
  const int n = g.n();
  int start = -1, remaining = 0;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) {
      ++remaining;
      if (start < 0) start = v;
    }
  if (remaining <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : g.adj[u]) {
      if (removed[v] || seen[v]) continue;
      seen[v] = 1;
      ++reached;
      stack.push_back(v);
    }
  }
  return reached == remaining;
}

bool is_connected(const ConstraintGraph& g) {
  return connected_after_removal(g, std::vector<char>(g.n(), 0));
}

// Vertex connectivity between a fixed non-adjacent pair via unit vertex
// capacities (both endpoints uncapped).
int pair_vertex_cut(const ConstraintGraph& g, int s, int t, int limit) {
  const int n = g.n();
  FlowNetwork net(2 * n);  // v_in = v, v_out = v + n
  for (int v = 0; v < n; ++v)
    net.add_edge(v, v + n, (v == s || v == t) ? limit + 1 : 1);
  for (const auto& e : g.edges) {
    net.add_edge(e.u + n, e.v, 1);
    net.add_edge(e.v + n, e.u, 1);
  }
  return net.max_flow(s + n, t, limit);
}

}  // namespace

LamanResult laman_sparse_bruteforce(const ConstraintGraph& g) {
  require_brute_size(g, "laman_sparse_bruteforce");
  const int n = g.n();
  const auto masks = adjacency_masks(g);
  const std::uint32_t full = (n >= 32) ? 0xffffffffu : ((1u << n) - 1);
  for (std::uint32_t subset = 1; subset <= full; ++subset) {
    const int k = std::popcount(subset);
    if (k < 2 || k > n - 1) continue;
    const int e = induced_edge_count(masks, subset);
    if (e > 2 * k - 3) {
      SubsetWitness w;
      for (int v = 0; v < n; ++v)
        if (subset & (1u << v)) w.vertex_set.push_back(g.labels[v]);
      w.edge_count = e;
      return {false, w};
    }
  }
  return {true, std::nullopt};
}

bool is_minimally_rigid(const ConstraintGraph& g) {
  const int n = g.n();
  if (n < 2) throw std::invalid_argument("is_minimally_rigid: need >= 2 vertices");
  if (g.edge_count() != 2 * n - 3) return false;
  if (n <= kBruteForceVertexCap) return laman_sparse_bruteforce(g).sparse;
  // Beyond enumeration reach: minimally rigid iff all edges independent.
  return rigidity_rank(g) == 2 * n - 3;
}

bool is_m_circuit(const ConstraintGraph& g) {
  const int n = g.n();
  if (n < 4) return false;
  if (g.edge_count() != 2 * n - 2) return false;
  if (n <= kBruteForceVertexCap) {
    // Direct subset enumeration of the definition.
    const auto masks = adjacency_masks(g);
    const std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t subset = 1; subset <= full; ++subset) {
      const int k = std::popcount(subset);
      if (k < 2 || k > n - 1) continue;
      if (induced_edge_count(masks, subset) > 2 * k - 3) return false;
    }
    return true;
  }
  // The whole edge set must be one circuit: dropping any edge leaves an
  // independent set.
  for (int i = 0; i < g.edge_count(); ++i)
    if (pebble_rank_excluding(g, i) != 2 * n - 3) return false;
  return true;
}

int rigidity_rank(const ConstraintGraph& g) {
  return pebble_rank_excluding(g, -1);
}

PebbleResult pebble_game_rigid(const ConstraintGraph& g) {
  const int n = g.n();
  if (n < 2) throw std::invalid_argument("pebble_game_rigid: need >= 2 vertices");
  PebbleResult res;
  PebbleGame game(n);
  std::vector<char> independent(g.edge_count(), 0);
  for (int i = 0; i < g.edge_count(); ++i)
    independent[i] = game.insert(g.edges[i].u, g.edges[i].v) ? 1 : 0;
  res.rank = game.rank();
  res.rigid = (res.rank == 2 * n - 3);
  if (res.rigid) {
    res.redundant = true;
    for (int i = 0; i < g.edge_count() && res.redundant; ++i) {
      if (!independent[i]) continue;  // dependent edges are in a circuit
      if (pebble_rank_excluding(g, i) != 2 * n - 3) res.redundant = false;
    }
  }
  return res;
}

int bruteforce_rank(const ConstraintGraph& g) {
  require_brute_size(g, "bruteforce_rank");
  const int n = g.n();
  // Greedy basis of the (2,3) sparsity matroid; independence of a candidate
  // set is decided by enumerating every vertex subset.
  std::vector<std::uint32_t> masks(n, 0);
  auto independent_with = [&](int u, int v) {
    masks[u] |= 1u << v;
    masks[v] |= 1u << u;
    const std::uint32_t full = (1u << n) - 1;
    bool ok = true;
    for (std::uint32_t subset = 1; subset <= full && ok; ++subset) {
      const int k = std::popcount(subset);
      if (k < 2) continue;
      if (induced_edge_count(masks, subset) > 2 * k - 3) ok = false;
    }
    if (!ok) {
      masks[u] &= ~(1u << v);
      masks[v] &= ~(1u << u);
    }
    return ok;
  };
  int rank = 0;
  for (const auto& e : g.edges)
    if (independent_with(e.u, e.v)) ++rank;
  return rank;
}

bool bruteforce_rigid(const ConstraintGraph& g) {
  const int n = g.n();
  if (n < 2) throw std::invalid_argument("bruteforce_rigid: need >= 2 vertices");
  return bruteforce_rank(g) == 2 * n - 3;
}

bool vertex_connectivity_at_least(const ConstraintGraph& g, int k) {
  const int n = g.n();
  if (k <= 0) return true;
  if (n < k + 1)
    throw std::invalid_argument("vertex_connectivity_at_least: graph smaller than k+1");
  if (k <= 3) {
    // Remove every subset of fewer than k vertices.
    std::vector<char> removed(n, 0);
    if (!is_connected(g)) return false;
    if (k == 1) return true;
    for (int a = 0; a < n; ++a) {
      removed.assign(n, 0);
      removed[a] = 1;
      if (!connected_after_removal(g, removed)) return false;
    }
    if (k == 2) return true;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        removed.assign(n, 0);
        removed[a] = 1;
        removed[b] = 1;
        if (!connected_after_removal(g, removed)) return false;
      }
    return true;
  }
  // Menger over non-adjacent pairs; pairs touching a fixed k-subset suffice.
  if (!is_connected(g)) return false;
  for (int s = 0; s < std::min(n, k); ++s)
    for (int t = 0; t < n; ++t) {
      if (t == s || g.has_edge(s, t)) continue;
      if (pair_vertex_cut(g, s, t, k) < k) return false;
    }
  return true;
}

int vertex_connectivity(const ConstraintGraph& g) {
  const int n = g.n();
  if (n < 2) return 0;
  int k = 0;
  while (k < n - 1 && vertex_connectivity_at_least(g, k + 1)) ++k;
  return k;
}

bool is_globally_rigid(const ConstraintGraph& g) {
  const int n = g.n();
  if (n < 2) return false;
  if (n <= 3) {
    // Complete graphs on 2 or 3 vertices have a unique realization up to
    // congruence.
    return g.edge_count() == n * (n - 1) / 2;
  }
  if (!vertex_connectivity_at_least(g, 3)) return false;
  const auto peb = pebble_game_rigid(g);
  return peb.rigid && peb.redundant;
}

RigidityVerdict analyze_rigidity(const ConstraintGraph& g) {
  RigidityVerdict v;
  const int n = g.n();
  const int e = g.edge_count();
  if (e < 2 * n - 3)
    v.edge_count_class = EdgeCountClass::kUnder;
  else if (e == 2 * n - 3)
    v.edge_count_class = EdgeCountClass::kMinimal;
  else if (e == 2 * n - 2)
    v.edge_count_class = EdgeCountClass::kCircuit;
  else
    v.edge_count_class = EdgeCountClass::kOver;
  if (n <= kBruteForceVertexCap)
    v.sparsity_ok = laman_sparse_bruteforce(g).sparse;
  else
    v.sparsity_ok = (rigidity_rank(g) == e);
  if (n >= 2) {
    const auto peb = pebble_game_rigid(g);
    v.rigid = peb.rigid;
    v.redundantly_rigid = peb.rigid && peb.redundant;
    v.connectivity = vertex_connectivity(g);
    v.globally_rigid = is_globally_rigid(g);
  }
  return v;
}

std::string to_string(EdgeCountClass c) {
  switch (c) {
    case EdgeCountClass::kUnder: return "under";
    case EdgeCountClass::kMinimal: return "minimal";
    case EdgeCountClass::kCircuit: return "circuit";
    case EdgeCountClass::kOver: return "over";
  }
  return "?";
}

std::vector<RigidComponent> rigid_components(const ConstraintGraph& g) {
  const int n = g.n();
  std::vector<RigidComponent> out;
  if (n == 0 || g.edges.empty()) return out;

  // Pairs (a, b) already spanned by the played game lie in a common rigid
  // body. A vertex w belongs to the body of edge (u, v) exactly when both
  // (w, u) and (w, v) are spanned: the three pairwise bodies then overlap in
  // three distinct vertices and their union is rigid.
  PebbleGame game(n);
  for (const auto& e : g.edges) game.insert(e.u, e.v);
  std::vector<std::vector<char>> locked(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a) locked[a][a] = 1;
  for (const auto& e : g.edges) locked[e.u][e.v] = locked[e.v][e.u] = 1;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (locked[a][b]) continue;
      if (game.spans(a, b)) locked[a][b] = locked[b][a] = 1;
    }

  std::map<std::vector<int>, int> comp_of_set;
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges[i];
    std::vector<int> verts;
    for (int w = 0; w < n; ++w)
      if (locked[w][e.u] && locked[w][e.v]) verts.push_back(w);
    auto [it, inserted] = comp_of_set.try_emplace(
        std::move(verts), static_cast<int>(out.size()));
    if (inserted) out.push_back({it->first, {}});
    out[it->second].edge_indices.push_back(i);
  }
  return out;
}

}  // namespace locdet
