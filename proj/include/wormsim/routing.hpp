#pragma once

#include <map>
#include <optional>
#include <set>

#include "wormsim/packets.hpp"

namespace wsn {

/// Reverse-path entries. The first RREQ accepted for a discovery wins; later
/// inserts for the same key are ignored.
class RouteTable {
 public:
  bool insert(const DiscoveryKey& key, NodeId next_hop_toward_source) {
    return next_hop_.emplace(key, next_hop_toward_source).second;
  }
  std::optional<NodeId> next_hop(const DiscoveryKey& key) const {
    auto it = next_hop_.find(key);
    if (it == next_hop_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t size() const noexcept { return next_hop_.size(); }

 private:
  std::map<DiscoveryKey, NodeId> next_hop_;
};

/// Every RREP this node has sent or forwarded. Append-only.
class ForwardLog {
 public:
  void record(const DiscoveryKey& key) { entries_.insert(key); }
  bool contains(const DiscoveryKey& key) const { return entries_.count(key) != 0; }
  bool empty() const noexcept { return entries_.empty(); }

 private:
  std::set<DiscoveryKey> entries_;
};

/// Candidate RREQ held until every same-timestamp arrival has been seen.
struct PendingRreq {
  SimTime arrived = 0.0;
  RreqPacket packet;
};

/// Applies the same-timestamp tie-break: the lower predecessor id wins.
/// Returns true when `incoming` replaces the held candidate.
inline bool prefer_candidate(const PendingRreq& held, const RreqPacket& incoming, SimTime now) {
  return now == held.arrived && incoming.path_predecessor < held.packet.path_predecessor;
}

struct RoutingState {
  RouteTable routes;
  ForwardLog forwarded;
  std::map<DiscoveryKey, PendingRreq> pending;
  std::set<DiscoveryKey> committed;
};

}  // namespace wsn
