#pragma once

#include <string>

#include "locdet/netgen.hpp"
#include "locdet/network.hpp"
#include "locdet/sim.hpp"

#include "json.hpp"

namespace locdet {

/// Network document: {"radius": r, "nodes": [{"id", "x", "y", "beacon"}]}.
/// Edges are derived on load, never stored.
nlohmann::json network_to_json(const NetworkGraph& net);
NetworkGraph network_from_json(const nlohmann::json& doc);

NetworkGraph load_network(const std::string& path);
void save_network(const NetworkGraph& net, const std::string& path);

nlohmann::json trace_to_json(const RunTrace& trace);
RunTrace trace_from_json(const nlohmann::json& doc);

nlohmann::json config_to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const nlohmann::json& doc);

}  // namespace locdet
