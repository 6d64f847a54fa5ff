#include "locdet/sim.hpp"

#include <algorithm>
#include <stdexcept>

#include "locdet/protocols.hpp"

namespace locdet {

ProtocolKind protocol_from_string(const std::string& s) {
  if (s == "te") return ProtocolKind::kTe;
  if (s == "ite") return ProtocolKind::kIte;
  if (s == "tp") return ProtocolKind::kTp;
  if (s == "we") return ProtocolKind::kWe;
  throw std::invalid_argument("unknown protocol: " + s);
}

std::string to_string(ProtocolKind k) {
  switch (k) {
    case ProtocolKind::kTe: return "te";
    case ProtocolKind::kIte: return "ite";
    case ProtocolKind::kTp: return "tp";
    case ProtocolKind::kWe: return "we";
  }
  return "?";
}

std::string to_string(NodeState s) {
  switch (s) {
    case NodeState::kFlexible: return "flexible";
    case NodeState::kRigid: return "rigid";
    case NodeState::kLocalizable: return "localizable";
  }
  return "?";
}

int RunTrace::localizable_count() const {
  return static_cast<int>(std::count(final_states.begin(), final_states.end(),
                                     NodeState::kLocalizable));
}

RunTrace run(const NetworkGraph& net, ProtocolKind protocol, int budget) {
  const int s = net.size();
  if (protocol == ProtocolKind::kIte && s > kIteMaxNodes)
    throw std::invalid_argument("run: ite is gated to networks with <= " +
                                std::to_string(kIteMaxNodes) + " nodes");
  if (budget <= 0) budget = kDefaultBudgetPerNode * s;

  RunTrace trace;
  trace.protocol = protocol;
  trace.state_broadcasts.assign(s, 0);

  std::vector<NodeContext> ctx;
  ctx.reserve(s);
  std::vector<std::unique_ptr<NodeHandler>> handlers;
  handlers.reserve(s);
  for (NodeId v = 0; v < s; ++v) {
    ctx.emplace_back(net, v);
    handlers.push_back(make_handler(protocol, ctx.back()));
  }

  std::vector<Message> pending;
  auto account = [&](std::size_t from_index) {
    for (std::size_t i = from_index; i < pending.size(); ++i) {
      switch (pending[i].kind) {
        case MsgKind::kState: trace.state_broadcasts[pending[i].sender] += 1; break;
        case MsgKind::kQuery: trace.query_total += 1; break;
        case MsgKind::kConfirm: trace.confirm_total += 1; break;
      }
    }
  };

  for (NodeId v = 0; v < s; ++v) {
    RoundEffects fx{&pending, &trace.transitions, 0, v};
    const std::size_t before = pending.size();
    handlers[v]->init(ctx[v], fx);
    account(before);
  }

  int quiet = 0;
  trace.rounds_executed = budget;
  std::vector<std::vector<Message>> inbox(s);
  for (int round = 1; round <= budget; ++round) {
    for (auto& box : inbox) box.clear();
    for (const Message& m : pending) {
      if (m.target >= 0) {
        if (net.has_edge(m.sender, m.target)) inbox[m.target].push_back(m);
      } else {
        for (NodeId v : net.adj[m.sender]) inbox[v].push_back(m);
      }
    }
    pending.clear();

    const std::size_t transitions_before = trace.transitions.size();
    for (NodeId v = 0; v < s; ++v) {
      if (inbox[v].empty()) continue;
      RoundEffects fx{&pending, &trace.transitions, round, v};
      const std::size_t before = pending.size();
      handlers[v]->on_round(ctx[v], inbox[v], fx);
      account(before);
    }

    const bool any_transition = trace.transitions.size() > transitions_before;
    if (!any_transition && pending.empty())
      ++quiet;
    else
      quiet = 0;
    if (quiet >= 2) {
      trace.converged = true;
      trace.rounds_executed = round;
      break;
    }
  }

  trace.final_states.reserve(s);
  trace.final_tuples.reserve(s);
  for (NodeId v = 0; v < s; ++v) {
    trace.final_states.push_back(handlers[v]->state());
    trace.final_tuples.push_back(handlers[v]->tuple());
  }
  return trace;
}

int convergence_round(const RunTrace& trace) {
  if (!trace.converged) return trace.rounds_executed;
  int last = 0;
  for (const auto& t : trace.transitions) last = std::max(last, t.round);
  return last;
}

}  // namespace locdet
