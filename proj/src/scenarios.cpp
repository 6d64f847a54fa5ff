#include "locdet/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "locdet/protocols.hpp"

namespace locdet {

namespace {

constexpr double kRadius = 60.0;

NetworkGraph net_from(const std::vector<Position>& pos,
                      const std::vector<NodeId>& beacons,
                      double radius = kRadius) {
  return build_network(pos, beacons, radius);
}

// Two beacons fanning out into a zigzag chain: consecutive and next-but-one
// chain nodes are in range, nothing further. A third beacon waits at the far
// end, so the whole chain resolves only by extension.
ScenarioFixture make_chain() {
  ScenarioFixture f;
  f.name = "chain";
  std::vector<Position> pos = {
      {25, 45},   // 0 beacon r1
      {25, -45},  // 1 beacon r2
      {40, 0},   {65, 40},  {90, 0},  {115, 40},
      {140, 0},  {165, 40}, {190, 0},  // 2..8 chain, leaf 8
      {235, -20},                      // 9 beacon q at the tail
      {50, -55},                       // 10 hangs off the chain head
  };
  f.net = net_from(pos, {0, 1, 9});
  f.labels = {"r1", "r2", "x1", "x2", "x3", "x4",
              "x5", "x6", "x7", "q",  "w"};
  return f;
}

// Testbed layout 1: beacons 1 and 2 launch the chain, beacon A sits next to
// node 9 only; B and C branch off near the roots and never meet A.
ScenarioFixture make_exp1() {
  ScenarioFixture f;
  f.name = "exp1";
  std::vector<Position> pos = {
      {25, 45},    // 0 = "1" beacon
      {25, -45},   // 1 = "2" beacon
      {40, 0},     // 2 = "3"
      {65, 40},    // 3 = "4"
      {90, 0},     // 4 = "5"
      {115, 40},   // 5 = "6"
      {140, 0},    // 6 = "7"
      {165, 40},   // 7 = "8"
      {190, 0},    // 8 = "9"
      {235, -20},  // 9 = "A" beacon
      {0, -50},    // 10 = "B"
      {20, 0},     // 11 = "C"
  };
  f.net = net_from(pos, {0, 1, 9});
  f.labels = {"1", "2", "3", "4", "5", "6", "7", "8", "9", "A", "B", "C"};
  return f;
}

// Testbed layout 2: two groups, each grown from its own beacon pair, meeting
// in the dual-v overlap E/D against 5/7. Node 8 is a leaf child of 7.
ScenarioFixture make_exp2() {
  ScenarioFixture f;
  f.name = "exp2";
  std::vector<Position> pos = {
      {25, 45},     // 0 = "1" beacon (left)
      {25, -45},    // 1 = "2" beacon (left)
      {40, 0},      // 2 = "3"
      {65, 40},     // 3 = "4"
      {90, 0},      // 4 = "5"
      {115, 40},    // 5 = "6"
      {140, 0},     // 6 = "7"
      {165, 40},    // 7 = "8"
      {170, -120},  // 8 = "A" beacon (right)
      {85, -130},   // 9 = "F" beacon (right)
      {130, -110},  // 10 = "B"
      {110, -80},   // 11 = "C"
      {145, -55},   // 12 = "D"
      {118, -25},   // 13 = "E"
  };
  f.net = net_from(pos, {0, 1, 8, 9});
  f.labels = {"1", "2", "3", "4", "5", "6", "7",
              "8", "A", "F", "B", "C", "D", "E"};
  return f;
}

// Two triangle blocks whose leaves overlap in a dual-v pattern; both sides
// can bridge, so every member of both blocks resolves.
ScenarioFixture make_dual_v() {
  ScenarioFixture f;
  f.name = "dual_v";
  std::vector<Position> pos = {
      {25, 45},    // 0 beacon, left roots
      {25, -45},   // 1 beacon
      {40, 0},     // 2
      {65, 40},    // 3
      {90, 0},     // 4
      {115, 40},   // 5 left leaf
      {185, -55},  // 6 beacon, right roots
      {195, -70},  // 7 beacon
      {175, -42},  // 8
      {185, -5},   // 9
      {138, -1},   // 10
      {140, 20},   // 11 right leaf
  };
  f.net = net_from(pos, {0, 1, 6, 7});
  return f;
}

// A beacon cluster detectable by plain trilateration, then a zigzag corridor
// across a coverage gap; A, B, C sit mid-corridor with too few determined
// neighbors for trilateration or wheels.
ScenarioFixture make_gap() {
  ScenarioFixture f;
  f.name = "gap";
  std::vector<Position> pos = {
      {25, 45},    // 0 beacon k1
      {25, -45},   // 1 beacon k2
      {-50, 0},    // 2 beacon k3
      {5, 0},      // 3 u0, trilateration seed
      {40, 0},     // 4 u1
      {65, 40},    // 5
      {90, 0},     // 6 = A
      {115, 40},   // 7 = B
      {140, 0},    // 8 = C
      {165, 40},   // 9
      {190, 0},    // 10 leaf
      {235, -20},  // 11 beacon q
  };
  f.net = net_from(pos, {0, 1, 2, 11});
  f.labels = {"k1", "k2", "k3", "u0", "u1", "x1",
              "A",  "B",  "C",  "x2", "x3", "q"};
  return f;
}

// Same skeleton with the corridor flattened along the deployment edge; the
// last two relay nodes before the corner beacon play the border pair A, B.
ScenarioFixture make_border() {
  ScenarioFixture f;
  f.name = "border";
  std::vector<Position> pos = {
      {25, 45},   // 0 beacon r1
      {25, -45},  // 1 beacon r2
      {-50, 0},   // 2 beacon r3
      {5, 0},     // 3 i1, trilateration seed
      {40, 0},    // 4 i2
      {65, 25},   // 5
      {90, 0},    // 6
      {115, 25},  // 7 = A
      {140, 0},   // 8 = B
      {165, 25},  // 9 leaf
      {210, 45},  // 10 beacon q3 in the corner
  };
  f.net = net_from(pos, {0, 1, 2, 10});
  f.labels = {"r1", "r2", "r3", "i1", "i2", "x1", "x2", "A", "B", "x3", "q3"};
  return f;
}

// Triangulated ring: every node links to its one- and two-step ring
// neighbors. No neighborhood contains a cycle, so no wheel exists, and no
// node ever sees three determined neighbors.
ScenarioFixture make_gc_ring() {
  ScenarioFixture f;
  f.name = "gc_ring";
  const int m = 16;
  const double big_r = 70.0;
  std::vector<Position> pos;
  for (int i = 0; i < m; ++i) {
    const double a = 2.0 * M_PI * i / m;
    pos.push_back({big_r * std::cos(a), big_r * std::sin(a)});
  }
  f.net = net_from(pos, {0, 1, 8});
  return f;
}

// Dense deployment with four beacons only: a close pair near the center and
// two singletons off in distinct regions.
ScenarioFixture make_sparse4(std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.s = 400;
  cfg.grid = 20;
  cfg.n = 2.0;
  cfg.b = 0.01;  // placeholder, replaced below
  cfg.seed = seed;
  NetworkGraph net = generate(cfg);

  const double side = cfg.side();
  auto nearest = [&](double x, double y) {
    NodeId best = 0;
    double best_d = 1e300;
    for (NodeId v = 0; v < net.size(); ++v) {
      const double d = distance(net.positions[v], {x, y});
      if (d < best_d) {
        best_d = d;
        best = v;
      }
    }
    return best;
  };
  const NodeId center = nearest(side / 2, side / 2);
  if (net.adj[center].size() < 2)
    throw std::runtime_error("sparse4: center node too isolated");
  const NodeId b1 = net.adj[center][0];
  const NodeId b2 = net.adj[center][1];
  const NodeId b3 = nearest(side * 0.85, side * 0.85);
  const NodeId b4 = nearest(side * 0.15, side * 0.85);
  ScenarioFixture f;
  f.name = "sparse4";
  f.net = with_beacons(net, {b1, b2, b3, b4});
  return f;
}

ScenarioFixture make_hole(const std::string& name, double n, double b,
                          std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.s = 400;
  cfg.grid = 20;
  cfg.n = n;
  cfg.b = b;
  cfg.seed = seed;
  cfg.beacon_mode =
      name == "hole_T2" ? BeaconMode::kSkewed : BeaconMode::kRandom;
  const double side = cfg.side();
  cfg.hole.kind = HoleSpec::Kind::kDisc;
  cfg.hole.x0 = side / 2;
  cfg.hole.y0 = side / 2;
  cfg.hole.r = side / 6.0;
  ScenarioFixture f;
  f.name = name;
  f.net = generate(cfg);
  f.hole = cfg.hole;
  f.denominator_s = cfg.s;
  return f;
}

}  // namespace

std::vector<std::string> scenario_names() {
  return {"gap",     "border",  "gc_ring", "dual_v",  "chain", "sparse4",
          "hole_T0", "hole_T1", "hole_T2", "exp1",    "exp2"};
}

ScenarioFixture make_scenario(const std::string& name, std::uint64_t seed) {
  if (name == "gap") return make_gap();
  if (name == "border") return make_border();
  if (name == "gc_ring") return make_gc_ring();
  if (name == "dual_v") return make_dual_v();
  if (name == "chain") return make_chain();
  if (name == "sparse4") return make_sparse4(seed);
  if (name == "hole_T0") return make_hole(name, 3.2, 0.1, seed);
  if (name == "hole_T1") return make_hole(name, 2.4, 0.05, seed);
  if (name == "hole_T2") return make_hole(name, 2.4, 0.05, seed);
  if (name == "exp1") return make_exp1();
  if (name == "exp2") return make_exp2();
  throw std::invalid_argument("unknown scenario: " + name);
}

ScenarioReport run_scenario(const std::string& name, std::uint64_t seed,
                            bool with_oracle) {
  ScenarioReport out;
  out.fixture = make_scenario(name, seed);
  if (with_oracle) out.oracle = rr3p_localizable_set(out.fixture.net);
  for (ProtocolKind p : {ProtocolKind::kTe, ProtocolKind::kIte,
                         ProtocolKind::kTp, ProtocolKind::kWe}) {
    if (p == ProtocolKind::kIte && out.fixture.net.size() > kIteMaxNodes)
      continue;
    RunTrace trace = run(out.fixture.net, p);
    RunReport report =
        make_report(out.fixture.net, trace, 1.0,
                    with_oracle ? &out.oracle : nullptr,
                    out.fixture.denominator_s);
    out.all_sound = out.all_sound && report.soundness_ok;
    out.protocols.push_back(to_string(p));
    out.reports.push_back(std::move(report));
    out.traces.push_back(std::move(trace));
  }
  return out;
}

}  // namespace locdet
