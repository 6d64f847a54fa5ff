#include "locdet/maxflow.hpp"

#include <queue>

namespace locdet {

int FlowNetwork::add_node() {
  head_.push_back(-1);
  return static_cast<int>(head_.size()) - 1;
}

int FlowNetwork::add_edge(int u, int v, int cap) {
  const int id = static_cast<int>(to_.size());
  to_.push_back(v);
  next_.push_back(head_[u]);
  cap_.push_back(cap);
  initial_cap_.push_back(cap);
  head_[u] = id;
  to_.push_back(u);
  next_.push_back(head_[v]);
  cap_.push_back(0);
  initial_cap_.push_back(0);
  head_[v] = id + 1;
  return id;
}

bool FlowNetwork::augment(int s, int t) {
  std::vector<int> pred_edge(head_.size(), -1);
  std::vector<char> seen(head_.size(), 0);
  std::queue<int> q;
  q.push(s);
  seen[s] = 1;
  while (!q.empty() && !seen[t]) {
    const int u = q.front();
    q.pop();
    for (int e = head_[u]; e != -1; e = next_[e]) {
      const int v = to_[e];
      if (cap_[e] > 0 && !seen[v]) {
        seen[v] = 1;
        pred_edge[v] = e;
        q.push(v);
      }
    }
  }
  if (!seen[t]) return false;
  for (int v = t; v != s;) {
    const int e = pred_edge[v];
    cap_[e] -= 1;
    cap_[e ^ 1] += 1;
    v = to_[e ^ 1];
  }
  return true;
}

int FlowNetwork::max_flow(int s, int t, int limit) {
  int flow = 0;
  while (flow < limit && augment(s, t)) ++flow;
  return flow;
}

int FlowNetwork::flow_on(int edge_index) const {
  return initial_cap_[edge_index] - cap_[edge_index];
}

}  // namespace locdet
