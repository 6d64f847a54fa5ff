#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "locdet/branch.hpp"
#include "locdet/ground_truth.hpp"
#include "locdet/json_io.hpp"
#include "locdet/netgen.hpp"
#include "locdet/report.hpp"
#include "locdet/rigidity.hpp"
#include "locdet/scenarios.hpp"
#include "locdet/sim.hpp"
#include "locdet/svg.hpp"

namespace py = pybind11;
using namespace locdet;

PYBIND11_MODULE(locdet, m) {
  m.doc() = "Localizability detection toolkit: unit-disk network model, "
            "combinatorial rigidity kernel, distributed detection protocols, "
            "and the centralized ground-truth oracle";

  py::class_<Position>(m, "Position")
      .def(py::init<>())
      .def(py::init([](double x, double y) { return Position{x, y}; }),
           py::arg("x"), py::arg("y"))
      .def_readwrite("x", &Position::x)
      .def_readwrite("y", &Position::y)
      .def("__repr__", [](const Position& p) {
        return "Position(" + std::to_string(p.x) + ", " + std::to_string(p.y) +
               ")";
      });

  m.def("distance", &distance);
  m.def("is_collinear", &is_collinear, py::arg("a"), py::arg("b"),
        py::arg("c"), py::arg("tol") = kCollinearTol);

  py::class_<NetworkGraph>(m, "NetworkGraph")
      .def_property_readonly("size", &NetworkGraph::size)
      .def_readonly("radius", &NetworkGraph::radius)
      .def_readonly("positions", &NetworkGraph::positions)
      .def("beacons", &NetworkGraph::beacon_ids)
      .def("neighbors",
           [](const NetworkGraph& g, NodeId v) { return g.adj.at(v); })
      .def("has_edge", &NetworkGraph::has_edge)
      .def("to_json",
           [](const NetworkGraph& g) { return network_to_json(g).dump(); });

  m.def(
      "build_network",
      [](const std::vector<std::pair<double, double>>& positions,
         const std::vector<NodeId>& beacons, double radius) {
        std::vector<Position> pos;
        pos.reserve(positions.size());
        for (auto [x, y] : positions) pos.push_back({x, y});
        return build_network(std::move(pos), beacons, radius);
      },
      py::arg("positions"), py::arg("beacons"), py::arg("radius"));
  m.def("load_network", &load_network);
  m.def("save_network", &save_network);

  py::class_<ConstraintGraph>(m, "ConstraintGraph")
      .def_property_readonly("n", &ConstraintGraph::n)
      .def_property_readonly("edge_count", &ConstraintGraph::edge_count)
      .def_readonly("labels", &ConstraintGraph::labels)
      .def("edges", [](const ConstraintGraph& g) {
        std::vector<std::pair<int, int>> out;
        for (const auto& e : g.edges) out.emplace_back(e.u, e.v);
        return out;
      });

  m.def("make_constraint_graph", &make_constraint_graph, py::arg("n"),
        py::arg("edges"));
  m.def("to_constraint_graph", &to_constraint_graph);

  py::class_<Branch>(m, "Branch")
      .def_static("k2", &Branch::k2)
      .def_property_readonly("roots",
                             [](const Branch& b) { return b.roots; })
      .def("leaf", &Branch::leaf)
      .def("vertices", &Branch::vertices)
      .def("levels", &Branch::levels)
      .def_property_readonly("vertex_count", &Branch::vertex_count)
      .def_property_readonly("edge_count", &Branch::edge_count);
  m.def("extend", &extend);
  m.def("branch_graph", &branch_graph);
  m.def("attach_closer", &attach_closer);

  py::class_<PebbleResult>(m, "PebbleResult")
      .def_readonly("rigid", &PebbleResult::rigid)
      .def_readonly("redundant", &PebbleResult::redundant)
      .def_readonly("rank", &PebbleResult::rank);
  m.def("pebble_game_rigid", &pebble_game_rigid);
  m.def("is_minimally_rigid", &is_minimally_rigid);
  m.def("is_m_circuit", &is_m_circuit);
  m.def("is_globally_rigid", &is_globally_rigid);
  m.def("vertex_connectivity_at_least", &vertex_connectivity_at_least);
  m.def("laman_sparse", [](const ConstraintGraph& g) {
    return laman_sparse_bruteforce(g).sparse;
  });

  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("s", &ExperimentConfig::s)
      .def_readwrite("grid", &ExperimentConfig::grid)
      .def_readwrite("d0", &ExperimentConfig::d0)
      .def_readwrite("n", &ExperimentConfig::n)
      .def_readwrite("b", &ExperimentConfig::b)
      .def_readwrite("radius_factor", &ExperimentConfig::radius_factor)
      .def_readwrite("seed", &ExperimentConfig::seed);
  m.def("generate", &generate);

  py::enum_<NodeState>(m, "NodeState")
      .value("flexible", NodeState::kFlexible)
      .value("rigid", NodeState::kRigid)
      .value("localizable", NodeState::kLocalizable);

  py::class_<RunTrace>(m, "RunTrace")
      .def_readonly("rounds", &RunTrace::rounds_executed)
      .def_readonly("converged", &RunTrace::converged)
      .def_readonly("state_broadcasts", &RunTrace::state_broadcasts)
      .def_readonly("query_total", &RunTrace::query_total)
      .def_readonly("confirm_total", &RunTrace::confirm_total)
      .def_readonly("final_states", &RunTrace::final_states)
      .def_property_readonly("localizable_count",
                             &RunTrace::localizable_count)
      .def("transitions", [](const RunTrace& t) {
        std::vector<std::tuple<int, NodeId, std::string, std::string>> out;
        for (const auto& tr : t.transitions)
          out.emplace_back(tr.round, tr.node, to_string(tr.from),
                           to_string(tr.to));
        return out;
      });

  m.def(
      "run",
      [](const NetworkGraph& net, const std::string& protocol, int budget) {
        return run(net, protocol_from_string(protocol), budget);
      },
      py::arg("net"), py::arg("protocol"), py::arg("budget") = 0);
  m.def("convergence_round", &convergence_round);
  m.def("energy_report", &energy_report);

  py::class_<LocalizabilitySet>(m, "LocalizabilitySet")
      .def_readonly("localizable", &LocalizabilitySet::localizable)
      .def_readonly("degenerate", &LocalizabilitySet::degenerate)
      .def("contains", &LocalizabilitySet::contains);
  m.def("rr3p_localizable_set", &rr3p_localizable_set);

  m.def("scenario_names", &scenario_names);
  m.def(
      "run_scenario",
      [](const std::string& name, std::uint64_t seed) {
        const auto result = run_scenario(name, seed);
        py::dict out;
        out["name"] = name;
        out["size"] = result.fixture.net.size();
        out["rr3p_size"] = result.oracle.localizable.size();
        out["all_sound"] = result.all_sound;
        py::dict per;
        for (std::size_t i = 0; i < result.protocols.size(); ++i) {
          py::dict r;
          r["c"] = result.reports[i].c;
          r["l"] = result.reports[i].l;
          r["rounds"] = result.reports[i].rounds;
          r["sound"] = result.reports[i].soundness_ok;
          per[py::str(result.protocols[i])] = r;
        }
        out["protocols"] = per;
        return out;
      },
      py::arg("name"), py::arg("seed") = 1);

  m.def("state_map_svg",
        [](const NetworkGraph& net, const std::vector<NodeState>& states) {
          return state_map_svg(net, states);
        });
}
