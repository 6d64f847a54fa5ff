#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "locdet/network.hpp"

namespace locdet {

/// Deterministic generator state. Raw engine output is mapped to doubles by
/// hand so sequences do not depend on the standard library's distribution
/// implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next();
  double uniform();  // [0, 1)
  double uniform(double lo, double hi);
  std::uint64_t below(std::uint64_t n);  // [0, n)
  /// k distinct values from [0, n), in selection order.
  std::vector<int> sample(int n, int k);

 private:
  std::uint64_t state_;
};

enum class BeaconMode { kRandom, kSkewed, kExplicit };

struct HoleSpec {
  enum class Kind { kNone, kDisc, kRect };
  Kind kind = Kind::kNone;
  // Disc: center (x0, y0), radius r. Rect: corners (x0, y0)-(x1, y1).
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0, r = 0;
};

struct ExperimentConfig {
  int s = 400;             // node count; one per cell when s == grid^2
  int grid = 20;           // cells per side
  double d0 = 10.0;        // distance unit, meters
  double n = 3.2;          // network density factor (cell side = d0 * n)
  double b = 0.1;          // beacon density; beacon count = round(b * s)
  double radius_factor = 6.0;  // radio radius = radius_factor * d0
  BeaconMode beacon_mode = BeaconMode::kRandom;
  double corner_fraction = 0.8;  // skewed mode only
  std::vector<NodeId> explicit_beacons;
  HoleSpec hole;
  std::uint64_t seed = 1;

  double side() const;
  double radius() const { return radius_factor * d0; }
  int beacon_count() const;
};

/// One node per cell when s == grid^2 and no hole is requested; uniform
/// placement over the same-density square otherwise. Deterministic in
/// (config, seed). Throws when fewer than 2 beacons would exist or the hole
/// leaves fewer than 2 of them.
NetworkGraph generate(const ExperimentConfig& config);

/// Re-deploys `count` beacons with `corner_fraction` of them inside corner
/// regions (two opposite corners, each a quarter-side square). With
/// count == 2 the pair is resampled until both share a radio neighbor.
NetworkGraph place_beacons_skewed(const NetworkGraph& net, int count,
                                  double corner_fraction, std::uint64_t seed);

/// Removes the nodes inside `region`, re-densifies ids, rebuilds adjacency.
/// Throws when fewer than 3 nodes remain.
NetworkGraph inject_hole(const NetworkGraph& net, const HoleSpec& region);

bool inside_hole(const HoleSpec& region, const Position& p);

}  // namespace locdet
