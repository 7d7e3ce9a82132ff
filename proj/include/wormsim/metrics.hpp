#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "wormsim/energy.hpp"
#include "wormsim/prevention.hpp"

namespace wsn {

enum class Outcome : std::uint8_t { RouteEstablished, AttackDetected, Timeout };
std::string_view to_string(Outcome o);

struct CheckRecord {
  NodeId node{};
  SimTime started = 0.0;
  SimTime collection_time = 0.0;
  std::size_t acks_received = 0;
  std::size_t late_acks = 0;
  Verdict verdict;
};

struct Metrics {
  Outcome outcome = Outcome::Timeout;
  bool route_established = false;
  NodeId source{};
  NodeId destination{};
  // Discovery start to route establishment, alarm or timeout.
  SimTime rrep_total_time = 0.0;
  // Source first, destination last. Empty unless the route was established.
  std::vector<NodeId> route;
  std::vector<SimTime> probe_ack_collection_times;
  std::vector<CheckRecord> checks;
  EnergyLedger energy_snapshot;
  // Reply-leg energy (RREP + probe traffic), the quantity compared across runs.
  double rrep_energy = 0.0;
  double total_energy = 0.0;
  std::size_t rreq_transmissions = 0;
  std::size_t alarms = 0;
  std::size_t false_positive_count = 0;
  std::size_t detection_count = 0;

  int hop_count() const noexcept { return route.empty() ? 0 : static_cast<int>(route.size()) - 1; }
  SimTime max_collection_time() const noexcept;
};

/// Column set of the single-run metrics CSV.
std::string metrics_csv_header();
std::string metrics_csv_row(const Metrics& m);

/// One paired baseline/prevention comparison.
struct OverheadRow {
  std::uint64_t seed = 0;
  NodeId source{};
  NodeId destination{};
  int hops = 0;
  SimTime baseline_time = 0.0;
  SimTime prevention_time = 0.0;
  double baseline_energy = 0.0;
  double prevention_energy = 0.0;
  SimTime max_collection_time = 0.0;
  Outcome baseline_outcome = Outcome::Timeout;
  Outcome prevention_outcome = Outcome::Timeout;
};

std::string overhead_csv_header();
std::string overhead_csv_row(const OverheadRow& r);

}  // namespace wsn
