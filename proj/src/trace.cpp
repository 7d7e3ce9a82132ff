#include "wormsim/trace.hpp"

#include <algorithm>
#include <ostream>

#include <fmt/format.h>

namespace wsn {

void Trace::add(SimTime time, NodeId node, std::string_view kind, std::string details) {
  events_.push_back(TraceEvent{time, node, std::string(kind), std::move(details)});
}

std::size_t Trace::count(std::string_view kind) const {
  return static_cast<std::size_t>(
      std::count_if(events_.begin(), events_.end(), [&](const TraceEvent& e) { return e.kind == kind; }));
}

std::string Trace::format_line(const TraceEvent& e) {
  return fmt::format("{:.6f} | {} | {} | {}", e.time, raw(e.node), e.kind, e.details);
}

std::string Trace::render() const {
  std::string out;
  for (const auto& e : events_) {
    out += format_line(e);
    out += '\n';
  }
  return out;
}

void Trace::write(std::ostream& os) const { os << render(); }

}  // namespace wsn
