#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wormsim/topology.hpp"
#include "wormsim/wormhole.hpp"

namespace wsn {

/// One simulation run. Defaults follow the reference deployment: 30 nodes on
/// 600x600 m, 250 m range, AODV discovery with 3 wormholes.
struct ScenarioConfig {
  std::uint64_t seed = 1;
  std::size_t node_count = 30;
  double area_width = 600.0;
  double area_height = 600.0;
  double range = 250.0;

  SimTime hop_delay = 0.01;
  SimTime ack_window = 1.0;
  // Discovery timeout: the destination must have answered by then.
  SimTime sim_time_limit = 0.3;
  double tx_cost = 2.0;
  double rx_cost = 1.0;
  double loss_probability = 0.0;
  bool prevention_enabled = true;

  // Unset: farthest connected pair (lowest ids on ties).
  std::optional<NodeId> source;
  std::optional<NodeId> destination;

  // Explicit links; when unset, `wormhole_count` links are placed from the seed.
  std::optional<std::vector<WormholeLink>> wormholes;
  std::size_t wormhole_count = 3;
  AttackMode wormhole_mode = AttackMode::HiddenPassive;
  SimTime tunnel_delay = 0.0;

  // Explicit placement (fixtures); overrides node_count/area. A topology file
  // is used when no explicit nodes are given.
  std::vector<std::pair<NodeId, Position>> nodes;
  std::string topology_file;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Throws ConfigError naming the first offending field.
void validate(const ScenarioConfig& cfg);

/// Flat `key = value` text, `#` comments. Repeated `node = id x y` lines give
/// explicit placements; `wormholes = [{a, b, mode, delay}, ...]` lists links.
/// Parse problems throw ParseError with the line number; the result is validated.
ScenarioConfig parse_scenario(std::istream& is);
/// A relative `topology_file` is resolved against the scenario file's directory.
ScenarioConfig load_scenario(const std::string& path);

/// Writes every field, so parse_scenario(dump_scenario(c)) == c.
std::string dump_scenario(const ScenarioConfig& cfg);

/// Applies one `key = value` assignment. Shared with experiment files.
void apply_setting(ScenarioConfig& cfg, const std::string& key, const std::string& value, int line);

}  // namespace wsn
