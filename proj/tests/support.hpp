#pragma once

#include <map>

#include "oracles.hpp"
#include "wormsim/fixture.hpp"
#include "wormsim/simulator.hpp"

namespace testing {

inline std::map<oracle::Id, oracle::Pt> points(const wsn::Topology& t) {
  std::map<oracle::Id, oracle::Pt> out;
  for (const auto& [n, p] : t.positions()) out[wsn::raw(n)] = {p.x, p.y};
  return out;
}

inline std::set<oracle::Id> raw_set(const wsn::NodeSet& s) {
  std::set<oracle::Id> out;
  for (wsn::NodeId n : s) out.insert(wsn::raw(n));
  return out;
}

inline wsn::NodeSet node_set(std::initializer_list<char> letters) {
  wsn::NodeSet out;
  for (char c : letters) out.insert(wsn::fixture::id(c));
  return out;
}

// Straight line of n nodes spaced 100 m apart, range 150.
inline wsn::ScenarioConfig line_config(std::size_t n) {
  wsn::ScenarioConfig cfg;
  for (std::uint32_t i = 0; i < n; ++i) cfg.nodes.push_back({wsn::node(i), {100.0 * i, 0.0}});
  cfg.node_count = n;
  cfg.range = 150.0;
  cfg.source = wsn::node(0);
  cfg.destination = wsn::node(static_cast<std::uint32_t>(n - 1));
  cfg.wormholes = std::vector<wsn::WormholeLink>{};
  return cfg;
}

// Reference deployment (30 nodes, 600x600, range 250) without attackers.
inline wsn::ScenarioConfig clean_random(std::uint64_t seed) {
  wsn::ScenarioConfig cfg;
  cfg.seed = seed;
  cfg.wormhole_count = 0;
  return cfg;
}

}  // namespace testing
