#include "locdet/branch.hpp"

#include <algorithm>
#include <stdexcept>

namespace locdet {

Branch Branch::k2(NodeId r1, NodeId r2) {
  if (r1 == r2) throw std::invalid_argument("Branch::k2: roots must differ");
  Branch b;
  b.roots = {r1, r2};
  return b;
}

bool Branch::contains(NodeId v) const {
  if (v == roots[0] || v == roots[1]) return true;
  return std::any_of(members.begin(), members.end(),
                     [v](const Member& m) { return m.id == v; });
}

NodeId Branch::leaf() const {
  if (members.empty())
    throw std::logic_error("Branch::leaf: no member added yet");
  return members.back().id;
}

std::map<NodeId, int> Branch::levels() const {
  std::map<NodeId, int> lv;
  lv[roots[0]] = 0;
  lv[roots[1]] = 0;
  for (const auto& m : members)
    lv[m.id] = 1 + std::max(lv.at(m.parents[0]), lv.at(m.parents[1]));
  return lv;
}

std::vector<NodeId> Branch::vertices() const {
  std::vector<NodeId> out{roots[0], roots[1]};
  for (const auto& m : members) out.push_back(m.id);
  return out;
}

Branch extend(const Branch& branch, NodeId v, NodeId r1, NodeId r2) {
  if (r1 == r2) throw std::invalid_argument("extend: parents must differ");
  if (branch.contains(v))
    throw std::invalid_argument("extend: vertex already in branch");
  if (!branch.contains(r1) || !branch.contains(r2))
    throw std::invalid_argument("extend: parent not in branch");
  Branch out = branch;
  out.members.push_back({v, {r1, r2}});
  return out;
}

namespace {

ConstraintGraph from_labeled_edges(
    std::vector<NodeId> labels,
    const std::vector<std::pair<NodeId, NodeId>>& edges) {
  std::sort(labels.begin(), labels.end());
  auto index_of = [&](NodeId id) {
    return static_cast<int>(
        std::lower_bound(labels.begin(), labels.end(), id) - labels.begin());
  };
  std::vector<std::pair<int, int>> dense;
  dense.reserve(edges.size());
  for (auto [u, v] : edges) dense.emplace_back(index_of(u), index_of(v));
  ConstraintGraph g =
      make_constraint_graph(static_cast<int>(labels.size()), dense);
  g.labels = labels;
  return g;
}

}  // namespace

ConstraintGraph branch_graph(const Branch& branch) {
  std::vector<std::pair<NodeId, NodeId>> edges{{branch.roots[0],
                                                branch.roots[1]}};
  for (const auto& m : branch.members) {
    edges.emplace_back(m.id, m.parents[0]);
    edges.emplace_back(m.id, m.parents[1]);
  }
  return from_labeled_edges(branch.vertices(), edges);
}

ConstraintGraph attach_closer(const Branch& branch, NodeId q) {
  if (branch.contains(q))
    throw std::invalid_argument("attach_closer: q already in branch");
  const NodeId v = branch.leaf();
  std::vector<std::pair<NodeId, NodeId>> edges{{branch.roots[0],
                                                branch.roots[1]}};
  for (const auto& m : branch.members) {
    edges.emplace_back(m.id, m.parents[0]);
    edges.emplace_back(m.id, m.parents[1]);
  }
  edges.emplace_back(q, v);
  edges.emplace_back(q, branch.roots[0]);
  edges.emplace_back(q, branch.roots[1]);
  auto labels = branch.vertices();
  labels.push_back(q);
  return from_labeled_edges(std::move(labels), edges);
}

}  // namespace locdet
