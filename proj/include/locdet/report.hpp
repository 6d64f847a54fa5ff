#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locdet/ground_truth.hpp"
#include "locdet/netgen.hpp"
#include "locdet/sim.hpp"

#include "json.hpp"

namespace locdet {

/// Energy estimate in joules for a finished run: 0.06 * P * T with P the
/// executed round count and T the configured seconds per round.
double energy_report(const RunTrace& trace, double t_seconds);

struct RunReport {
  std::string protocol;
  int s = 0;               // denominator of L (configured network size)
  int c = 0;               // localizable nodes in the final state, beacons included
  double l = 0.0;          // C / S
  int rr3p_size = -1;      // -1 when the oracle was skipped
  int rounds = 0;
  bool converged = false;
  long broadcasts_total = 0;
  int query_total = 0;
  int confirm_total = 0;
  double t_seconds = 1.0;
  double energy_joules = 0.0;
  bool soundness_checked = false;
  bool soundness_ok = true;
  std::vector<NodeId> unsound_nodes;  // protocol-localizable but oracle-rejected
};

/// Consolidates one trace into a report. `oracle` enables the soundness
/// check; `denominator_s` overrides S (hole runs keep the configured node
/// count in the denominator even after removals).
RunReport make_report(const NetworkGraph& net, const RunTrace& trace,
                      double t_seconds = 1.0,
                      const LocalizabilitySet* oracle = nullptr,
                      int denominator_s = -1);

nlohmann::json report_to_json(const RunReport& report);

struct SweepCell {
  double b = 0.0;
  double n = 0.0;
  double mean_l = 0.0;
  double min_l = 0.0;
  double max_l = 0.0;
};

/// Mean/min/max of L per (B, N) over the seed list. Cells run in parallel;
/// results are deterministic in (base, protocol, values, seeds).
std::vector<SweepCell> sweep(const ExperimentConfig& base,
                             ProtocolKind protocol,
                             const std::vector<double>& b_values,
                             const std::vector<double>& n_values,
                             const std::vector<std::uint64_t>& seeds,
                             int threads = 0);

/// B rows by N columns of mean L, the layout of the density-sweep tables.
std::string sweep_mean_csv(const std::vector<SweepCell>& cells,
                           const std::vector<double>& b_values,
                           const std::vector<double>& n_values);
/// Long format: one row per cell with mean, min, max.
std::string sweep_stats_csv(const std::vector<SweepCell>& cells);

}  // namespace locdet
