#pragma once

#include <vector>

namespace locdet {

/// Small integer max-flow (BFS augmentation). Flows in this project are
/// tiny (vertex-disjoint path counts), so simplicity beats speed.
class FlowNetwork {
 public:
  explicit FlowNetwork(int n) : head_(n, -1) {}

  int node_count() const { return static_cast<int>(head_.size()); }
  int add_node();
  /// Returns the edge index; the reverse edge is index ^ 1.
  int add_edge(int u, int v, int cap);
  /// Augments until `limit` is reached or no path exists.
  int max_flow(int s, int t, int limit);
  int flow_on(int edge_index) const;
  int to_of(int edge_index) const { return to_[edge_index]; }

 private:
  bool augment(int s, int t);
  std::vector<int> head_;
  std::vector<int> to_, next_, cap_;
  std::vector<int> initial_cap_;
};

}  // namespace locdet
