#include "locdet/network.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace locdet {

bool NetworkGraph::has_edge(NodeId u, NodeId v) const {
  const auto& a = adj[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<NodeId> NetworkGraph::beacon_ids() const {
  std::vector<NodeId> out;
  for (NodeId i = 0; i < size(); ++i)
    if (beacon[i]) out.push_back(i);
  return out;
}

int NetworkGraph::beacon_count() const {
  return static_cast<int>(std::count(beacon.begin(), beacon.end(), true));
}

NetworkGraph build_network(std::vector<Position> positions,
                           const std::vector<NodeId>& beacons, double radius) {
  const int n = static_cast<int>(positions.size());
  if (n < 2) throw std::invalid_argument("build_network: need >= 2 nodes");
  if (!(radius > 0.0))
    throw std::invalid_argument("build_network: radius must be > 0");
  for (const auto& p : positions)
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw std::invalid_argument("build_network: non-finite coordinate");

  NetworkGraph net;
  net.positions = std::move(positions);
  net.beacon.assign(n, false);
  for (NodeId b : beacons) {
    if (b < 0 || b >= n)
      throw std::invalid_argument("build_network: beacon id out of range");
    net.beacon[b] = true;
  }
  net.radius = radius;
  net.adj.assign(n, {});
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (net.dist(i, j) <= radius) {
        net.adj[i].push_back(j);
        net.adj[j].push_back(i);
      }
  return net;
}

NetworkGraph with_beacons(const NetworkGraph& net,
                          const std::vector<NodeId>& beacons) {
  NetworkGraph out = net;
  out.beacon.assign(net.size(), false);
  for (NodeId b : beacons) {
    if (b < 0 || b >= net.size())
      throw std::invalid_argument("with_beacons: beacon id out of range");
    out.beacon[b] = true;
  }
  return out;
}

bool ConstraintGraph::has_edge(int u, int v) const {
  const auto& a = adj[u];
  return std::binary_search(a.begin(), a.end(), v);
}

namespace {

void finalize_adjacency(ConstraintGraph& g) {
  g.adj.assign(g.n(), {});
  for (const auto& e : g.edges) {
    g.adj[e.u].push_back(e.v);
    g.adj[e.v].push_back(e.u);
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
}

}  // namespace

ConstraintGraph make_constraint_graph(
    int n, const std::vector<std::pair<int, int>>& edges) {
  ConstraintGraph g;
  g.labels.resize(n);
  for (int i = 0; i < n; ++i) g.labels[i] = i;
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u == v)
      throw std::invalid_argument("make_constraint_graph: self-loop");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("make_constraint_graph: vertex out of range");
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second)
      throw std::invalid_argument("make_constraint_graph: duplicate edge");
    g.edges.push_back({u, v, 0.0});
  }
  finalize_adjacency(g);
  return g;
}

ConstraintGraph to_constraint_graph(const NetworkGraph& net) {
  ConstraintGraph g;
  const int n = net.size();
  g.labels.resize(n);
  for (int i = 0; i < n; ++i) g.labels[i] = i;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v : net.adj[u])
      if (u < v) g.edges.push_back({u, v, net.dist(u, v)});
  // Beacon-beacon pairs not already linked by radio.
  const auto beacons = net.beacon_ids();
  for (std::size_t i = 0; i < beacons.size(); ++i)
    for (std::size_t j = i + 1; j < beacons.size(); ++j) {
      const NodeId u = beacons[i], v = beacons[j];
      if (!net.has_edge(u, v)) g.edges.push_back({u, v, net.dist(u, v)});
    }
  finalize_adjacency(g);
  return g;
}

}  // namespace locdet
