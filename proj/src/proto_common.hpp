#pragma once

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "locdet/protocols.hpp"

namespace locdet::detail {

inline std::array<NodeId, 2> sorted_pair(NodeId a, NodeId b) {
  return a < b ? std::array<NodeId, 2>{a, b} : std::array<NodeId, 2>{b, a};
}

inline bool same_roots(const std::array<NodeId, 2>& a,
                       const std::array<NodeId, 2>& b) {
  return sorted_pair(a[0], a[1]) == sorted_pair(b[0], b[1]);
}

inline bool pair_contains(const std::array<NodeId, 2>& p, NodeId v) {
  return p[0] == v || p[1] == v;
}

/// Per-sender candidate store (one entry per sender, replacement on update),
/// kept in first-arrival order for deterministic pair scans.
class CandidateStore {
 public:
  // Returns the slot index of the (possibly replaced) entry.
  int upsert(const ParentCandidate& pc) {
    auto it = index_.find(pc.id);
    if (it != index_.end()) {
      entries_[it->second] = pc;
      return it->second;
    }
    const int slot = static_cast<int>(entries_.size());
    entries_.push_back(pc);
    index_.emplace(pc.id, slot);
    return slot;
  }

  bool contains(NodeId id) const { return index_.count(id) > 0; }
  const std::vector<ParentCandidate>& entries() const { return entries_; }

 private:
  std::vector<ParentCandidate> entries_;
  std::unordered_map<NodeId, int> index_;
};

/// A beacon's initial advertisement.
inline ParentCandidate beacon_candidate(const NodeContext& ctx) {
  ParentCandidate pc;
  pc.id = ctx.self();
  pc.beacon = true;
  pc.b.state = NodeState::kLocalizable;
  pc.position = ctx.own_position();
  pc.has_position = true;
  return pc;
}

}  // namespace locdet::detail
