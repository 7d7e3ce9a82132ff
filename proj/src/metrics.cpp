#include "wormsim/metrics.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace wsn {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::RouteEstablished: return "RouteEstablished";
    case Outcome::AttackDetected: return "AttackDetected";
    case Outcome::Timeout: return "Timeout";
  }
  return "?";
}

SimTime Metrics::max_collection_time() const noexcept {
  SimTime m = 0.0;
  for (SimTime t : probe_ack_collection_times) m = std::max(m, t);
  return m;
}

std::string metrics_csv_header() {
  return "outcome,route_established,source,destination,hops,rrep_total_time,rrep_energy,total_energy,"
         "checks,max_ack_collection_time,alarms,false_positive_count,detection_count";
}

std::string metrics_csv_row(const Metrics& m) {
  return fmt::format("{},{},{},{},{},{:.6f},{:.3f},{:.3f},{},{:.6f},{},{},{}", to_string(m.outcome),
                     m.route_established ? 1 : 0, raw(m.source), raw(m.destination), m.hop_count(),
                     m.rrep_total_time, m.rrep_energy, m.total_energy, m.checks.size(), m.max_collection_time(),
                     m.alarms, m.false_positive_count, m.detection_count);
}

std::string overhead_csv_header() {
  return "seed,source,destination,hops,baseline_rrep_time,prevention_rrep_time,baseline_rrep_energy,"
         "prevention_rrep_energy,max_ack_collection_time,baseline_outcome,prevention_outcome";
}

std::string overhead_csv_row(const OverheadRow& r) {
  return fmt::format("{},{},{},{},{:.6f},{:.6f},{:.3f},{:.3f},{:.6f},{},{}", r.seed, raw(r.source),
                     raw(r.destination), r.hops, r.baseline_time, r.prevention_time, r.baseline_energy,
                     r.prevention_energy, r.max_collection_time, to_string(r.baseline_outcome),
                     to_string(r.prevention_outcome));
}

}  // namespace wsn
