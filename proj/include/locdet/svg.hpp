#pragma once

#include <string>
#include <vector>

#include "locdet/netgen.hpp"
#include "locdet/network.hpp"
#include "locdet/sim.hpp"

namespace locdet {

/// Node-state map: one marker per node colored by final state (red flexible,
/// yellow rigid, blue localizable; beacons drawn as squares), plus the hole
/// outline when given. Throws on an empty state vector, a size mismatch, or
/// an unwritable path.
void render_state_map(const NetworkGraph& net,
                      const std::vector<NodeState>& final_states,
                      const std::string& path,
                      const HoleSpec* hole = nullptr);

std::string state_map_svg(const NetworkGraph& net,
                          const std::vector<NodeState>& final_states,
                          const HoleSpec* hole = nullptr);

}  // namespace locdet
