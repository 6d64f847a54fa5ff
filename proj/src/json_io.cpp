#include "locdet/json_io.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

namespace locdet {

using nlohmann::json;

json network_to_json(const NetworkGraph& net) {
  json nodes = json::array();
  for (NodeId v = 0; v < net.size(); ++v)
    nodes.push_back({{"id", v},
                     {"x", net.positions[v].x},
                     {"y", net.positions[v].y},
                     {"beacon", static_cast<bool>(net.beacon[v])}});
  return json{{"radius", net.radius}, {"nodes", std::move(nodes)}};
}

NetworkGraph network_from_json(const json& doc) {
  const double radius = doc.at("radius").get<double>();
  const auto& nodes = doc.at("nodes");
  std::vector<Position> positions(nodes.size());
  std::vector<NodeId> beacons;
  std::set<NodeId> seen;
  for (const auto& n : nodes) {
    const NodeId id = n.at("id").get<NodeId>();
    if (id < 0 || id >= static_cast<NodeId>(nodes.size()))
      throw std::invalid_argument("network_from_json: ids must be dense 0..S-1");
    if (!seen.insert(id).second)
      throw std::invalid_argument("network_from_json: duplicate id");
    positions[id] = {n.at("x").get<double>(), n.at("y").get<double>()};
    if (n.value("beacon", false)) beacons.push_back(id);
  }
  return build_network(std::move(positions), beacons, radius);
}

NetworkGraph load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json doc;
  in >> doc;
  return network_from_json(doc);
}

void save_network(const NetworkGraph& net, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << network_to_json(net).dump(2) << "\n";
}

json trace_to_json(const RunTrace& trace) {
  json transitions = json::array();
  for (const auto& t : trace.transitions)
    transitions.push_back({{"round", t.round},
                           {"node", t.node},
                           {"from", to_string(t.from)},
                           {"to", to_string(t.to)}});
  json states = json::array();
  for (auto s : trace.final_states) states.push_back(to_string(s));
  return json{{"protocol", to_string(trace.protocol)},
              {"rounds", trace.rounds_executed},
              {"converged", trace.converged},
              {"state_broadcasts", trace.state_broadcasts},
              {"query_total", trace.query_total},
              {"confirm_total", trace.confirm_total},
              {"transitions", std::move(transitions)},
              {"final_states", std::move(states)}};
}

namespace {

NodeState state_from_string(const std::string& s) {
  if (s == "flexible") return NodeState::kFlexible;
  if (s == "rigid") return NodeState::kRigid;
  if (s == "localizable") return NodeState::kLocalizable;
  throw std::invalid_argument("unknown state: " + s);
}

}  // namespace

RunTrace trace_from_json(const json& doc) {
  RunTrace t;
  t.protocol = protocol_from_string(doc.at("protocol").get<std::string>());
  t.rounds_executed = doc.at("rounds").get<int>();
  t.converged = doc.at("converged").get<bool>();
  t.state_broadcasts = doc.at("state_broadcasts").get<std::vector<int>>();
  t.query_total = doc.value("query_total", 0);
  t.confirm_total = doc.value("confirm_total", 0);
  for (const auto& tr : doc.at("transitions"))
    t.transitions.push_back({tr.at("round").get<int>(),
                             tr.at("node").get<NodeId>(),
                             state_from_string(tr.at("from").get<std::string>()),
                             state_from_string(tr.at("to").get<std::string>())});
  for (const auto& s : doc.at("final_states"))
    t.final_states.push_back(state_from_string(s.get<std::string>()));
  return t;
}

json config_to_json(const ExperimentConfig& c) {
  json hole = nullptr;
  if (c.hole.kind == HoleSpec::Kind::kDisc)
    hole = json{{"kind", "disc"}, {"cx", c.hole.x0}, {"cy", c.hole.y0}, {"r", c.hole.r}};
  else if (c.hole.kind == HoleSpec::Kind::kRect)
    hole = json{{"kind", "rect"}, {"x0", c.hole.x0}, {"y0", c.hole.y0},
                {"x1", c.hole.x1}, {"y1", c.hole.y1}};
  std::string mode = c.beacon_mode == BeaconMode::kRandom   ? "random"
                     : c.beacon_mode == BeaconMode::kSkewed ? "skewed"
                                                            : "explicit";
  return json{{"s", c.s},
              {"grid", c.grid},
              {"d0", c.d0},
              {"n", c.n},
              {"b", c.b},
              {"radius_factor", c.radius_factor},
              {"beacon_mode", mode},
              {"corner_fraction", c.corner_fraction},
              {"explicit_beacons", c.explicit_beacons},
              {"hole", hole},
              {"seed", c.seed}};
}

ExperimentConfig config_from_json(const json& doc) {
  ExperimentConfig c;
  c.s = doc.value("s", c.s);
  c.grid = doc.value("grid", c.grid);
  c.d0 = doc.value("d0", c.d0);
  c.n = doc.value("n", c.n);
  c.b = doc.value("b", c.b);
  c.radius_factor = doc.value("radius_factor", c.radius_factor);
  const std::string mode = doc.value("beacon_mode", std::string("random"));
  if (mode == "random")
    c.beacon_mode = BeaconMode::kRandom;
  else if (mode == "skewed")
    c.beacon_mode = BeaconMode::kSkewed;
  else if (mode == "explicit")
    c.beacon_mode = BeaconMode::kExplicit;
  else
    throw std::invalid_argument("unknown beacon_mode: " + mode);
  c.corner_fraction = doc.value("corner_fraction", c.corner_fraction);
  c.explicit_beacons =
      doc.value("explicit_beacons", std::vector<NodeId>{});
  if (doc.contains("hole") && !doc.at("hole").is_null()) {
    const auto& h = doc.at("hole");
    const std::string kind = h.at("kind").get<std::string>();
    if (kind == "disc") {
      c.hole.kind = HoleSpec::Kind::kDisc;
      c.hole.x0 = h.at("cx").get<double>();
      c.hole.y0 = h.at("cy").get<double>();
      c.hole.r = h.at("r").get<double>();
    } else if (kind == "rect") {
      c.hole.kind = HoleSpec::Kind::kRect;
      c.hole.x0 = h.at("x0").get<double>();
      c.hole.y0 = h.at("y0").get<double>();
      c.hole.x1 = h.at("x1").get<double>();
      c.hole.y1 = h.at("y1").get<double>();
    } else {
      throw std::invalid_argument("unknown hole kind: " + kind);
    }
  }
  c.seed = doc.value("seed", c.seed);
  return c;
}

}  // namespace locdet
