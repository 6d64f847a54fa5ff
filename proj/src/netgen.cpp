#include "locdet/netgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace locdet {

std::uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

std::uint64_t Rng::below(std::uint64_t n) { return n ? next() % n : 0; }

std::vector<int> Rng::sample(int n, int k) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> out;
  out.reserve(k);
  for (int i = 0; i < k && !pool.empty(); ++i) {
    const auto j = below(pool.size());
    out.push_back(pool[j]);
    pool.erase(pool.begin() + static_cast<long>(j));
  }
  return out;
}

double ExperimentConfig::side() const {
  if (s == grid * grid) return grid * d0 * n;
  return std::sqrt(static_cast<double>(s)) * d0 * n;
}

int ExperimentConfig::beacon_count() const {
  return static_cast<int>(std::llround(b * s));
}

bool inside_hole(const HoleSpec& region, const Position& p) {
  switch (region.kind) {
    case HoleSpec::Kind::kNone:
      return false;
    case HoleSpec::Kind::kDisc: {
      const double dx = p.x - region.x0, dy = p.y - region.y0;
      return dx * dx + dy * dy <= region.r * region.r;
    }
    case HoleSpec::Kind::kRect:
      return p.x >= region.x0 && p.x <= region.x1 && p.y >= region.y0 &&
             p.y <= region.y1;
  }
  return false;
}

namespace {

bool share_radio_neighbor(const NetworkGraph& net, NodeId a, NodeId b) {
  const auto& na = net.adj[a];
  const auto& nb = net.adj[b];
  std::size_t i = 0, j = 0;
  while (i < na.size() && j < nb.size()) {
    if (na[i] == nb[j]) return true;
    if (na[i] < nb[j])
      ++i;
    else
      ++j;
  }
  return false;
}

std::vector<NodeId> sample_beacons_uniform(const NetworkGraph& net, int count,
                                           Rng& rng) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    auto picked = rng.sample(net.size(), count);
    std::vector<NodeId> ids(picked.begin(), picked.end());
    if (count == 2 && !share_radio_neighbor(net, ids[0], ids[1])) continue;
    return ids;
  }
  throw std::runtime_error(
      "beacon sampling: no beacon pair with a common radio neighbor found");
}

std::vector<NodeId> sample_beacons_skewed(const NetworkGraph& net, int count,
                                          double corner_fraction, Rng& rng) {
  double lo_x = 1e300, lo_y = 1e300, hi_x = -1e300, hi_y = -1e300;
  for (const auto& p : net.positions) {
    lo_x = std::min(lo_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_x = std::max(hi_x, p.x);
    hi_y = std::max(hi_y, p.y);
  }
  const double cw = (hi_x - lo_x) / 4.0, ch = (hi_y - lo_y) / 4.0;
  auto in_corner = [&](const Position& p) {
    const bool low = p.x <= lo_x + cw && p.y <= lo_y + ch;
    const bool high = p.x >= hi_x - cw && p.y >= hi_y - ch;
    return low || high;
  };
  std::vector<int> corner_nodes;
  for (NodeId v = 0; v < net.size(); ++v)
    if (in_corner(net.positions[v])) corner_nodes.push_back(v);

  const int want_corner = static_cast<int>(std::llround(corner_fraction * count));
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<NodeId> ids;
    const int from_corner =
        std::min(want_corner, static_cast<int>(corner_nodes.size()));
    for (int idx : rng.sample(static_cast<int>(corner_nodes.size()), from_corner))
      ids.push_back(corner_nodes[idx]);
    std::vector<int> rest;
    for (NodeId v = 0; v < net.size(); ++v)
      if (std::find(ids.begin(), ids.end(), v) == ids.end()) rest.push_back(v);
    const int remaining = count - static_cast<int>(ids.size());
    for (int idx : rng.sample(static_cast<int>(rest.size()), remaining))
      ids.push_back(rest[idx]);
    if (count == 2 && !share_radio_neighbor(net, ids[0], ids[1])) continue;
    return ids;
  }
  throw std::runtime_error(
      "beacon sampling: no beacon pair with a common radio neighbor found");
}

}  // namespace

NetworkGraph generate(const ExperimentConfig& config) {
  if (config.s < 2) throw std::invalid_argument("generate: s must be >= 2");
  if (config.grid < 1) throw std::invalid_argument("generate: grid must be >= 1");
  if (!(config.d0 > 0) || !(config.n > 0) || !(config.radius_factor > 0))
    throw std::invalid_argument("generate: d0, n, radius_factor must be > 0");
  if (config.beacon_mode != BeaconMode::kExplicit) {
    if (!(config.b > 0.0) || config.b > 1.0)
      throw std::invalid_argument("generate: b must be in (0, 1]");
    if (config.beacon_count() < 2)
      throw std::invalid_argument("generate: beacon count must be >= 2");
  } else if (config.explicit_beacons.size() < 2) {
    throw std::invalid_argument("generate: need >= 2 explicit beacons");
  }

  Rng rng(config.seed);
  const double cell = config.d0 * config.n;
  const bool cell_mode = (config.s == config.grid * config.grid) &&
                         config.hole.kind == HoleSpec::Kind::kNone;
  std::vector<Position> positions;
  positions.reserve(config.s);
  if (cell_mode) {
    for (int r = 0; r < config.grid; ++r)
      for (int c = 0; c < config.grid; ++c)
        positions.push_back({(c + rng.uniform()) * cell,
                             (r + rng.uniform()) * cell});
  } else {
    const double side = config.side();
    for (int i = 0; i < config.s; ++i)
      positions.push_back({rng.uniform(0.0, side), rng.uniform(0.0, side)});
  }

  NetworkGraph net = build_network(std::move(positions), {}, config.radius());

  std::vector<NodeId> beacons;
  switch (config.beacon_mode) {
    case BeaconMode::kRandom:
      beacons = sample_beacons_uniform(net, config.beacon_count(), rng);
      break;
    case BeaconMode::kSkewed:
      beacons = sample_beacons_skewed(net, config.beacon_count(),
                                      config.corner_fraction, rng);
      break;
    case BeaconMode::kExplicit:
      beacons = config.explicit_beacons;
      break;
  }
  net = with_beacons(net, beacons);

  if (config.hole.kind != HoleSpec::Kind::kNone) {
    net = inject_hole(net, config.hole);
    if (net.beacon_count() < 2)
      throw std::runtime_error("generate: hole left fewer than 2 beacons");
  }
  return net;
}

NetworkGraph place_beacons_skewed(const NetworkGraph& net, int count,
                                  double corner_fraction, std::uint64_t seed) {
  if (count < 2)
    throw std::invalid_argument("place_beacons_skewed: count must be >= 2");
  if (count > net.size())
    throw std::invalid_argument("place_beacons_skewed: count exceeds node count");
  Rng rng(seed);
  return with_beacons(net,
                      sample_beacons_skewed(net, count, corner_fraction, rng));
}

NetworkGraph inject_hole(const NetworkGraph& net, const HoleSpec& region) {
  std::vector<Position> kept;
  std::vector<NodeId> beacons;
  for (NodeId v = 0; v < net.size(); ++v) {
    if (inside_hole(region, net.positions[v])) continue;
    if (net.beacon[v]) beacons.push_back(static_cast<NodeId>(kept.size()));
    kept.push_back(net.positions[v]);
  }
  if (kept.size() < 3)
    throw std::runtime_error("inject_hole: fewer than 3 nodes remain");
  return build_network(std::move(kept), beacons, net.radius);
}

}  // namespace locdet
