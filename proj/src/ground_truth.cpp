#include "locdet/ground_truth.hpp"

#include <algorithm>
#include <stdexcept>

#include "locdet/maxflow.hpp"

namespace locdet {

namespace {

ConstraintGraph subgraph_from_edges(const ConstraintGraph& g,
                                    const std::vector<int>& edge_indices,
                                    std::vector<int>* vertex_map_out) {
  std::vector<int> verts;
  for (int ei : edge_indices) {
    verts.push_back(g.edges[ei].u);
    verts.push_back(g.edges[ei].v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  auto dense = [&](int v) {
    return static_cast<int>(
        std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  ConstraintGraph sub;
  sub.labels.resize(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i)
    sub.labels[i] = g.labels[verts[i]];
  sub.adj.assign(verts.size(), {});
  for (int ei : edge_indices) {
    const auto& e = g.edges[ei];
    sub.edges.push_back({dense(e.u), dense(e.v), e.length});
    sub.adj[dense(e.u)].push_back(dense(e.v));
    sub.adj[dense(e.v)].push_back(dense(e.u));
  }
  for (auto& a : sub.adj) std::sort(a.begin(), a.end());
  if (vertex_map_out) *vertex_map_out = verts;
  return sub;
}

// Recursive peel: split into maximal rigid subgraphs, drop edges whose
// removal breaks rigidity (they cannot belong to any redundantly rigid
// subgraph), repeat on what is left. A component survives once every one of
// its edges is redundant.
void peel(const ConstraintGraph& g, const std::vector<int>& edge_indices,
          std::vector<RigidComponent>& out) {
  if (edge_indices.size() < 6) return;  // K_4 is the smallest candidate
  std::vector<int> verts_map;
  const ConstraintGraph sub = subgraph_from_edges(g, edge_indices, &verts_map);
  for (const auto& comp : rigid_components(sub)) {
    if (comp.vertices.size() < 4) continue;
    if (comp.edge_indices.size() < 6) continue;
    const ConstraintGraph body =
        subgraph_from_edges(sub, comp.edge_indices, nullptr);
    const int target_rank = 2 * body.n() - 3;
    std::vector<int> redundant;  // indices into g.edges
    bool all_redundant = true;
    for (std::size_t k = 0; k < comp.edge_indices.size(); ++k) {
      ConstraintGraph probe = body;
      probe.edges.erase(probe.edges.begin() + static_cast<long>(k));
      if (rigidity_rank(probe) == target_rank)
        redundant.push_back(edge_indices[comp.edge_indices[k]]);
      else
        all_redundant = false;
    }
    if (all_redundant) {
      RigidComponent rc;
      for (int v : comp.vertices) rc.vertices.push_back(verts_map[v]);
      for (int ei : comp.edge_indices) rc.edge_indices.push_back(edge_indices[ei]);
      out.push_back(std::move(rc));
    } else {
      peel(g, redundant, out);
    }
  }
}

}  // namespace

std::vector<RigidComponent> redundantly_rigid_components(
    const ConstraintGraph& g) {
  if (g.n() > kOracleMaxNodes)
    throw std::invalid_argument(
        "redundantly_rigid_components: graph exceeds oracle scale cap");
  std::vector<RigidComponent> out;
  if (g.n() < 4) return out;
  std::vector<int> all(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) all[i] = i;
  peel(g, all, out);
  // Map component vertex lists to labels? Keep dense vertex ids of g; the
  // caller resolves labels. Sort for stable output.
  for (auto& c : out) {
    std::sort(c.vertices.begin(), c.vertices.end());
    std::sort(c.edge_indices.begin(), c.edge_indices.end());
  }
  std::sort(out.begin(), out.end(),
            [](const RigidComponent& a, const RigidComponent& b) {
              return a.vertices < b.vertices;
            });
  return out;
}

std::optional<PathWitness> three_disjoint_paths_to_beacons(
    const ConstraintGraph& g, int node, const std::vector<int>& beacons) {
  if (beacons.size() < 3)
    throw std::invalid_argument(
        "three_disjoint_paths_to_beacons: need >= 3 beacons");
  const int n = g.n();
  std::vector<char> is_beacon(n, 0);
  for (int b : beacons) is_beacon[b] = 1;
  if (is_beacon[node])
    throw std::invalid_argument(
        "three_disjoint_paths_to_beacons: node must not be a beacon");

  // v_in = v, v_out = v + n; source is node_out, sink is 2n. The source's
  // own split arc gets capacity 0 so no flow can re-enter it.
  FlowNetwork net(2 * n + 1);
  const int sink = 2 * n;
  for (int v = 0; v < n; ++v) net.add_edge(v, v + n, v == node ? 0 : 1);
  std::vector<std::pair<int, std::pair<int, int>>> arc_edges;
  for (const auto& e : g.edges) {
    arc_edges.push_back({net.add_edge(e.u + n, e.v, 1), {e.u, e.v}});
    arc_edges.push_back({net.add_edge(e.v + n, e.u, 1), {e.v, e.u}});
  }
  for (int b : beacons) net.add_edge(b + n, sink, 1);

  if (net.max_flow(node + n, sink, 3) < 3) return std::nullopt;

  // Walk the three unit flows out of `node` to recover the paths. Every
  // vertex except the source passes at most one unit, so successor lists are
  // single-valued along genuine paths; a visited guard drops any residual
  // flow cycle.
  std::vector<std::vector<int>> succ(n);
  for (const auto& [eid, uv] : arc_edges)
    if (net.flow_on(eid) > 0) succ[uv.first].push_back(uv.second);
  PathWitness w;
  int found = 0;
  std::vector<char> visited(n, 0);
  for (int s : succ[node]) {
    if (found == 3) break;
    std::vector<NodeId> path{g.labels[node]};
    int cur = s;
    bool ok = true;
    while (true) {
      if (visited[cur]) {
        ok = false;
        break;
      }
      visited[cur] = 1;
      path.push_back(g.labels[cur]);
      if (succ[cur].empty()) {
        ok = is_beacon[cur];
        break;
      }
      const int nxt = succ[cur].back();
      succ[cur].pop_back();
      cur = nxt;
    }
    if (!ok) continue;
    w.beacons[found] = path.back();
    w.paths.push_back(std::move(path));
    ++found;
  }
  if (found != 3) return std::nullopt;
  return w;
}

bool LocalizabilitySet::contains(NodeId v) const {
  return std::binary_search(localizable.begin(), localizable.end(), v);
}

LocalizabilitySet rr3p_localizable_set(const NetworkGraph& net) {
  if (net.size() > kOracleMaxNodes)
    throw std::invalid_argument("rr3p_localizable_set: network exceeds cap");
  LocalizabilitySet out;
  const auto beacons = net.beacon_ids();
  out.localizable = beacons;
  if (beacons.size() < 3) {
    out.degenerate = true;
    return out;
  }
  std::vector<Position> bpos;
  for (NodeId b : beacons) bpos.push_back(net.positions[b]);
  if (all_collinear(bpos)) {
    out.degenerate = true;
    return out;
  }

  const ConstraintGraph cg = to_constraint_graph(net);
  out.components = redundantly_rigid_components(cg);
  for (std::size_t ci = 0; ci < out.components.size(); ++ci) {
    const auto& comp = out.components[ci];
    std::vector<int> comp_map;
    const ConstraintGraph sub =
        subgraph_from_edges(cg, comp.edge_indices, &comp_map);
    std::vector<int> sub_beacons;
    for (int i = 0; i < sub.n(); ++i)
      if (net.beacon[sub.labels[i]]) sub_beacons.push_back(i);
    if (sub_beacons.size() < 3) continue;
    for (int i = 0; i < sub.n(); ++i) {
      const NodeId label = sub.labels[i];
      if (net.beacon[label] || out.witnesses.count(label)) continue;
      auto witness = three_disjoint_paths_to_beacons(sub, i, sub_beacons);
      if (!witness) continue;
      out.witnesses.emplace(label,
                            NodeWitness{static_cast<int>(ci), *witness});
      out.localizable.push_back(label);
    }
  }
  std::sort(out.localizable.begin(), out.localizable.end());
  return out;
}

}  // namespace locdet
