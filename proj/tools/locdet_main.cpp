#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "locdet/json_io.hpp"
#include "locdet/report.hpp"
#include "locdet/scenarios.hpp"
#include "locdet/svg.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::vector<double> parse_values(const std::string& spec) {
  // "0.02:0.2:0.02" (lo:hi:step) or "0.05,0.1,0.2"
  std::vector<double> out;
  if (spec.find(':') != std::string::npos) {
    double lo, hi, step;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 ||
        step <= 0)
      throw std::invalid_argument("bad range: " + spec);
    for (double v = lo; v <= hi + 1e-9; v += step) out.push_back(v);
    return out;
  }
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  if (out.empty()) throw std::invalid_argument("bad value list: " + spec);
  return out;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << body;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Localizability detection toolkit: network generation, "
               "protocol simulation, ground-truth oracle, experiment sweeps"};
  app.require_subcommand(1);

  // --- generate ---
  auto* gen = app.add_subcommand("generate", "Generate a network file");
  locdet::ExperimentConfig cfg;
  std::string gen_out = "net.json";
  std::string gen_beacon_mode = "random";
  std::string gen_hole;
  std::vector<int> gen_explicit;
  gen->add_option("--s", cfg.s, "node count");
  gen->add_option("--grid", cfg.grid, "cells per side");
  gen->add_option("--d0", cfg.d0, "distance unit (m)");
  gen->add_option("--n", cfg.n, "network density factor");
  gen->add_option("--b", cfg.b, "beacon density");
  gen->add_option("--radius-factor", cfg.radius_factor, "radio radius / d0");
  gen->add_option("--beacon-mode", gen_beacon_mode, "random|skewed|explicit");
  gen->add_option("--corner-fraction", cfg.corner_fraction,
                  "beacon share inside corners (skewed mode)");
  gen->add_option("--beacons", gen_explicit, "explicit beacon ids");
  gen->add_option("--hole", gen_hole,
                  "disc:cx,cy,r or rect:x0,y0,x1,y1");
  gen->add_option("--seed", cfg.seed, "generator seed");
  gen->add_option("--out", gen_out, "output network JSON");

  // --- run ---
  auto* runc = app.add_subcommand("run", "Run one protocol on a network");
  std::string run_protocol = "te", run_net, run_trace_out, run_svg_out;
  int run_budget = 0;
  double run_t_seconds = 1.0;
  bool run_no_oracle = false;
  runc->add_option("--protocol", run_protocol, "te|ite|tp|we")->required();
  runc->add_option("--net", run_net, "network JSON file")->required();
  runc->add_option("--budget", run_budget, "max rounds (default 10*S)");
  runc->add_option("--trace", run_trace_out, "write trace JSON here");
  runc->add_option("--svg", run_svg_out, "write state map SVG here");
  runc->add_option("--t-seconds", run_t_seconds, "seconds per round");
  runc->add_flag("--no-oracle", run_no_oracle, "skip the ground-truth check");

  // --- sweep ---
  auto* sweepc = app.add_subcommand("sweep", "Mean L over a (B, N) grid");
  std::string sw_protocol = "te", sw_b = "0.1", sw_n = "3.2",
              sw_out = "sweep";
  int sw_seeds = 30, sw_s = 400, sw_threads = 0;
  sweepc->add_option("--protocol", sw_protocol, "te|ite|tp|we")->required();
  sweepc->add_option("--b", sw_b, "beacon densities (list or lo:hi:step)");
  sweepc->add_option("--n", sw_n, "network densities (list or lo:hi:step)");
  sweepc->add_option("--seeds", sw_seeds, "seeds per cell (1..k)");
  sweepc->add_option("--s", sw_s, "node count");
  sweepc->add_option("--threads", sw_threads, "worker threads (0 = auto)");
  sweepc->add_option("--out", sw_out, "output CSV prefix");

  // --- scenario ---
  auto* scenc = app.add_subcommand("scenario", "Run a built-in scenario");
  std::string scen_name, scen_dir;
  std::uint64_t scen_seed = 1;
  scenc->add_option("name", scen_name, "scenario name")->required();
  scenc->add_option("--seed", scen_seed, "seed for generated scenarios");
  scenc->add_option("--out", scen_dir, "directory for traces and SVGs");

  // --- oracle ---
  auto* oraclec = app.add_subcommand("oracle", "Ground-truth RR3P set");
  std::string or_net, or_out;
  oraclec->add_option("--net", or_net, "network JSON file")->required();
  oraclec->add_option("--out", or_out, "write result JSON here");

  // --- render ---
  auto* renderc = app.add_subcommand("render", "State map SVG from a trace");
  std::string rd_trace, rd_out = "map.svg";
  renderc->add_option("--trace", rd_trace, "trace JSON (with network)")
      ->required();
  renderc->add_option("--out", rd_out, "output SVG path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      if (gen_beacon_mode == "random")
        cfg.beacon_mode = locdet::BeaconMode::kRandom;
      else if (gen_beacon_mode == "skewed")
        cfg.beacon_mode = locdet::BeaconMode::kSkewed;
      else if (gen_beacon_mode == "explicit")
        cfg.beacon_mode = locdet::BeaconMode::kExplicit;
      else
        throw std::invalid_argument("bad --beacon-mode");
      for (int b : gen_explicit) cfg.explicit_beacons.push_back(b);
      if (!gen_hole.empty()) {
        double a, b, c, d;
        if (std::sscanf(gen_hole.c_str(), "disc:%lf,%lf,%lf", &a, &b, &c) == 3) {
          cfg.hole = {locdet::HoleSpec::Kind::kDisc, a, b, 0, 0, c};
        } else if (std::sscanf(gen_hole.c_str(), "rect:%lf,%lf,%lf,%lf", &a,
                               &b, &c, &d) == 4) {
          cfg.hole = {locdet::HoleSpec::Kind::kRect, a, b, c, d, 0};
        } else {
          throw std::invalid_argument("bad --hole spec");
        }
      }
      const auto net = locdet::generate(cfg);
      locdet::save_network(net, gen_out);
      std::cout << "wrote " << gen_out << " (" << net.size() << " nodes, "
                << net.beacon_count() << " beacons)\n";
      return 0;
    }

    if (*runc) {
      const auto net = locdet::load_network(run_net);
      const auto kind = locdet::protocol_from_string(run_protocol);
      const auto trace = locdet::run(net, kind, run_budget);
      std::optional<locdet::LocalizabilitySet> oracle;
      if (!run_no_oracle && net.size() <= locdet::kOracleMaxNodes)
        oracle = locdet::rr3p_localizable_set(net);
      const auto report = locdet::make_report(
          net, trace, run_t_seconds, oracle ? &*oracle : nullptr);
      std::cout << locdet::report_to_json(report).dump(2) << "\n";
      if (!run_trace_out.empty()) {
        json doc = locdet::trace_to_json(trace);
        doc["network"] = locdet::network_to_json(net);
        write_file(run_trace_out, doc.dump(2) + "\n");
      }
      if (!run_svg_out.empty())
        locdet::render_state_map(net, trace.final_states, run_svg_out);
      return report.soundness_checked && !report.soundness_ok ? 2 : 0;
    }

    if (*sweepc) {
      locdet::ExperimentConfig base;
      base.s = sw_s;
      base.grid = static_cast<int>(std::lround(std::sqrt(double(sw_s))));
      const auto b_values = parse_values(sw_b);
      const auto n_values = parse_values(sw_n);
      std::vector<std::uint64_t> seeds;
      for (int i = 1; i <= sw_seeds; ++i) seeds.push_back(i);
      const auto kind = locdet::protocol_from_string(sw_protocol);
      const auto cells =
          locdet::sweep(base, kind, b_values, n_values, seeds, sw_threads);
      write_file(sw_out + "_mean.csv",
                 locdet::sweep_mean_csv(cells, b_values, n_values));
      write_file(sw_out + "_stats.csv", locdet::sweep_stats_csv(cells));
      std::cout << locdet::sweep_mean_csv(cells, b_values, n_values);
      return 0;
    }

    if (*scenc) {
      const auto result = locdet::run_scenario(scen_name, scen_seed);
      json summary = json::array();
      for (std::size_t i = 0; i < result.reports.size(); ++i)
        summary.push_back(locdet::report_to_json(result.reports[i]));
      std::cout << "scenario " << scen_name << " ("
                << result.fixture.net.size() << " nodes, rr3p set "
                << result.oracle.localizable.size() << ")\n";
      for (std::size_t i = 0; i < result.reports.size(); ++i) {
        const auto& r = result.reports[i];
        std::cout << "  " << r.protocol << ": C=" << r.c << " L=" << r.l
                  << " rounds=" << r.rounds
                  << (r.soundness_ok ? "" : "  SOUNDNESS VIOLATION") << "\n";
      }
      if (!scen_dir.empty()) {
        fs::create_directories(scen_dir);
        write_file(scen_dir + "/summary.json", summary.dump(2) + "\n");
        for (std::size_t i = 0; i < result.traces.size(); ++i) {
          json doc = locdet::trace_to_json(result.traces[i]);
          doc["network"] = locdet::network_to_json(result.fixture.net);
          write_file(scen_dir + "/" + result.protocols[i] + "_trace.json",
                     doc.dump(2) + "\n");
          locdet::render_state_map(
              result.fixture.net, result.traces[i].final_states,
              scen_dir + "/" + result.protocols[i] + ".svg",
              result.fixture.hole ? &*result.fixture.hole : nullptr);
        }
      }
      return result.all_sound ? 0 : 2;
    }

    if (*oraclec) {
      const auto net = locdet::load_network(or_net);
      const auto set = locdet::rr3p_localizable_set(net);
      json doc{{"localizable", set.localizable},
               {"degenerate", set.degenerate},
               {"count", set.localizable.size()},
               {"component_count", set.components.size()}};
      std::cout << doc.dump(2) << "\n";
      if (!or_out.empty()) write_file(or_out, doc.dump(2) + "\n");
      return 0;
    }

    if (*renderc) {
      std::ifstream in(rd_trace);
      if (!in) throw std::runtime_error("cannot open " + rd_trace);
      json doc;
      in >> doc;
      const auto trace = locdet::trace_from_json(doc);
      const auto net = locdet::network_from_json(doc.at("network"));
      locdet::render_state_map(net, trace.final_states, rd_out);
      std::cout << "wrote " << rd_out << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
