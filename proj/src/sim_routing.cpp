// RREQ flooding and RREP return along the reverse path.

#include <algorithm>

#include <fmt/format.h>

#include "wormsim/simulator.hpp"

namespace wsn {

void Simulator::on_rreq(NodeId n, const RreqPacket& p) {
  const DiscoveryKey key = p.key();
  RoutingState& rs = state(n).routing;
  if (rs.committed.count(key)) {
    log(n, "RREQ_DUP", fmt::format("pred={}", raw(p.path_predecessor)));
    return;
  }
  if (auto it = rs.pending.find(key); it != rs.pending.end()) {
    if (prefer_candidate(it->second, p, now())) {
      log(n, "RREQ_DUP", fmt::format("pred={}", raw(it->second.packet.path_predecessor)));
      it->second.packet = p;
    } else {
      log(n, "RREQ_DUP", fmt::format("pred={}", raw(p.path_predecessor)));
    }
    return;
  }
  rs.pending.emplace(key, PendingRreq{now(), p});
  queue_.push(now(), Phase::Decision, CommitRreq{n, key});
}

void Simulator::on_commit(const CommitRreq& c) {
  RoutingState& rs = state(c.node).routing;
  auto handle = rs.pending.extract(c.key);
  const RreqPacket p = handle.mapped().packet;
  rs.committed.insert(c.key);
  rs.routes.insert(c.key, p.path_predecessor);
  log(c.node, "RREQ_ACCEPT", fmt::format("pred={} hop={}", raw(p.path_predecessor), p.hop_count));
  if (c.node == p.destination) {
    emit_rrep(c.node, p);
    return;
  }
  broadcast(c.node, RreqPacket{p.source, p.destination, p.request_id, p.hop_count + 1, c.node});
}

void Simulator::emit_rrep(NodeId dest, const RreqPacket& rreq) {
  const DiscoveryKey key = rreq.key();
  state(dest).routing.forwarded.record(key);
  rrep_emitted_ = true;
  RrepPacket rrep{rreq.source, rreq.destination, rreq.request_id, dest, {dest}};
  log(dest, "RREP_EMIT", fmt::format("{} {} {} hop={}", raw(key.source), raw(key.destination), key.request_id,
                                     rreq.hop_count + 1));
  unicast(dest, rreq.path_predecessor, rrep);
}

void Simulator::on_rrep(NodeId n, const RrepPacket& p) {
  const DiscoveryKey key = p.key();
  if (n != p.source && !state(n).routing.routes.next_hop(key)) {
    log(n, "WARN", "RREP without reverse route dropped");
    return;
  }
  if (worm_.is_endpoint(n)) {
    // Colluding endpoints relay replies straight away.
    forward_rrep(n, p);
    return;
  }
  if (params_.prevention_enabled && p.forwarder != p.destination) {
    start_check(n, p);
    return;
  }
  release_rrep(n, p);
}

void Simulator::release_rrep(NodeId n, const RrepPacket& p) {
  if (n != p.source) {
    forward_rrep(n, p);
    return;
  }
  metrics_.route.assign(1, n);
  metrics_.route.insert(metrics_.route.end(), p.path.rbegin(), p.path.rend());
  std::string hops;
  for (NodeId r : metrics_.route) hops += fmt::format("{}{}", hops.empty() ? "" : ",", raw(r));
  log(n, "ROUTE_ESTABLISHED", fmt::format("{} {} {} path={}", raw(p.source), raw(p.destination), p.request_id, hops));
  finish(Outcome::RouteEstablished);
}

void Simulator::forward_rrep(NodeId n, const RrepPacket& p) {
  const DiscoveryKey key = p.key();
  auto next = state(n).routing.routes.next_hop(key);
  if (!next) {
    log(n, "WARN", "RREP without reverse route dropped");
    return;
  }
  state(n).routing.forwarded.record(key);
  RrepPacket out = p;
  out.forwarder = n;
  out.path.push_back(n);
  log(n, "RREP_FORWARD", fmt::format("next={}", raw(*next)));
  unicast(n, *next, out);
}

}  // namespace wsn
