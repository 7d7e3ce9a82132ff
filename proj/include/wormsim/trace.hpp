#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "wormsim/types.hpp"

namespace wsn {

struct TraceEvent {
  SimTime time = 0.0;
  NodeId node{};
  std::string kind;
  std::string details;
};

/// Event log. Rendered one line per event as
/// `time | node | event_kind | details`, time fixed to 6 decimals.
///
/// Kinds: TX, RX, LOST, TUNNEL, TUNNEL_DROP, DISCOVERY, RREQ_ACCEPT, RREQ_DUP,
/// RREP_EMIT, RREP_FORWARD, ROUTE_ESTABLISHED, CHECK_START, PROBE_RELAY,
/// PROBE_ANSWER, ACK_RELAY, ACK_TAMPER, ACK_COLLECT, ACK_LATE, VERDICT, ALARM,
/// TIMEOUT, WARN.
class Trace {
 public:
  void add(SimTime time, NodeId node, std::string_view kind, std::string details);

  const std::vector<TraceEvent>& events() const noexcept { return events_; }
  std::size_t count(std::string_view kind) const;

  static std::string format_line(const TraceEvent& e);
  std::string render() const;
  void write(std::ostream& os) const;

 private:
  std::vector<TraceEvent> events_;
};

}  // namespace wsn
