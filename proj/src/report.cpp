#include "locdet/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

namespace locdet {

double energy_report(const RunTrace& trace, double t_seconds) {
  if (!(t_seconds > 0.0))
    throw std::invalid_argument("energy_report: t_seconds must be > 0");
  return 0.06 * trace.rounds_executed * t_seconds;
}

RunReport make_report(const NetworkGraph& net, const RunTrace& trace,
                      double t_seconds, const LocalizabilitySet* oracle,
                      int denominator_s) {
  RunReport r;
  r.protocol = to_string(trace.protocol);
  r.s = denominator_s > 0 ? denominator_s : net.size();
  r.c = trace.localizable_count();
  r.l = static_cast<double>(r.c) / r.s;
  r.rounds = trace.rounds_executed;
  r.converged = trace.converged;
  r.broadcasts_total = std::accumulate(trace.state_broadcasts.begin(),
                                       trace.state_broadcasts.end(), 0L);
  r.query_total = trace.query_total;
  r.confirm_total = trace.confirm_total;
  r.t_seconds = t_seconds;
  r.energy_joules = energy_report(trace, t_seconds);
  if (oracle) {
    r.soundness_checked = true;
    r.rr3p_size = static_cast<int>(oracle->localizable.size());
    for (NodeId v = 0; v < net.size(); ++v) {
      if (trace.final_states[v] != NodeState::kLocalizable) continue;
      if (!oracle->contains(v)) {
        r.soundness_ok = false;
        r.unsound_nodes.push_back(v);
      }
    }
  }
  return r;
}

nlohmann::json report_to_json(const RunReport& r) {
  return nlohmann::json{{"protocol", r.protocol},
                        {"s", r.s},
                        {"c", r.c},
                        {"l", r.l},
                        {"rr3p_size", r.rr3p_size},
                        {"rounds", r.rounds},
                        {"converged", r.converged},
                        {"broadcasts_total", r.broadcasts_total},
                        {"query_total", r.query_total},
                        {"confirm_total", r.confirm_total},
                        {"t_seconds", r.t_seconds},
                        {"energy_joules", r.energy_joules},
                        {"soundness_checked", r.soundness_checked},
                        {"soundness_ok", r.soundness_ok},
                        {"unsound_nodes", r.unsound_nodes}};
}

std::vector<SweepCell> sweep(const ExperimentConfig& base,
                             ProtocolKind protocol,
                             const std::vector<double>& b_values,
                             const std::vector<double>& n_values,
                             const std::vector<std::uint64_t>& seeds,
                             int threads) {
  struct Job {
    std::size_t cell;
    double b, n;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  const std::size_t cell_count = b_values.size() * n_values.size();
  for (std::size_t bi = 0; bi < b_values.size(); ++bi)
    for (std::size_t ni = 0; ni < n_values.size(); ++ni)
      for (auto seed : seeds)
        jobs.push_back({bi * n_values.size() + ni, b_values[bi], n_values[ni],
                        seed});

  std::vector<std::vector<double>> ls(cell_count);
  for (auto& v : ls) v.resize(seeds.size());
  std::vector<std::size_t> slot(cell_count, 0);
  // Precompute per-job slot so parallel workers write disjoint entries.
  std::vector<std::size_t> job_slot(jobs.size());
  for (std::size_t j = 0; j < jobs.size(); ++j)
    job_slot[j] = slot[jobs[j].cell]++;

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t j = next.fetch_add(1);
      if (j >= jobs.size()) return;
      ExperimentConfig cfg = base;
      cfg.b = jobs[j].b;
      cfg.n = jobs[j].n;
      cfg.seed = jobs[j].seed;
      const NetworkGraph net = generate(cfg);
      const RunTrace trace = run(net, protocol);
      ls[jobs[j].cell][job_slot[j]] =
          static_cast<double>(trace.localizable_count()) / cfg.s;
    }
  };
  if (threads <= 0)
    threads = static_cast<int>(
        std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::vector<SweepCell> cells(cell_count);
  for (std::size_t bi = 0; bi < b_values.size(); ++bi)
    for (std::size_t ni = 0; ni < n_values.size(); ++ni) {
      const std::size_t c = bi * n_values.size() + ni;
      const auto& v = ls[c];
      cells[c].b = b_values[bi];
      cells[c].n = n_values[ni];
      cells[c].mean_l = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
      cells[c].min_l = *std::min_element(v.begin(), v.end());
      cells[c].max_l = *std::max_element(v.begin(), v.end());
    }
  return cells;
}

std::string sweep_mean_csv(const std::vector<SweepCell>& cells,
                           const std::vector<double>& b_values,
                           const std::vector<double>& n_values) {
  std::ostringstream out;
  out << "B\\N";
  for (double n : n_values) out << "," << n;
  out << "\n";
  for (std::size_t bi = 0; bi < b_values.size(); ++bi) {
    out << b_values[bi];
    for (std::size_t ni = 0; ni < n_values.size(); ++ni) {
      const auto& c = cells[bi * n_values.size() + ni];
      out << "," << std::fixed;
      out.precision(3);
      out << c.mean_l;
      out.unsetf(std::ios_base::fixed);
    }
    out << "\n";
  }
  return out.str();
}

std::string sweep_stats_csv(const std::vector<SweepCell>& cells) {
  std::ostringstream out;
  out << "b,n,mean_l,min_l,max_l\n";
  for (const auto& c : cells) {
    out << c.b << "," << c.n << ",";
    out << std::fixed;
    out.precision(3);
    out << c.mean_l << "," << c.min_l << "," << c.max_l << "\n";
    out.unsetf(std::ios_base::fixed);
  }
  return out.str();
}

}  // namespace locdet
