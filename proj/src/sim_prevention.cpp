// Probe / Probe_Ack exchange and the verdict that gates RREP forwarding.

#include <fmt/format.h>

#include "wormsim/simulator.hpp"

namespace wsn {

namespace {
std::string ids(const NodeSet& set) {
  std::string out;
  for (NodeId n : set) out += fmt::format("{}{}", out.empty() ? "" : ",", raw(n));
  return out.empty() ? "-" : out;
}
std::string subject(const DiscoveryKey& k) {
  return fmt::format("{} {} {}", raw(k.source), raw(k.destination), k.request_id);
}
}  // namespace

void Simulator::start_check(NodeId n, const RrepPacket& p) {
  const DiscoveryKey key = p.key();
  auto& checks = state(n).checks;
  if (checks.count(key)) {
    log(n, "WARN", "duplicate RREP while a check is pending");
    return;
  }
  checks.emplace(key, CheckSession{p, AckCollector(now(), params_.ack_window)});
  log(n, "CHECK_START", fmt::format("{} fwd={}", subject(key), raw(p.forwarder)));
  broadcast(n, ProbeMsg{n, key, 2, n});
  queue_.push(now() + params_.ack_window, Phase::Decision, CheckTimer{n, key});
}

void Simulator::on_probe(NodeId n, const ProbeMsg& p) {
  if (n == p.origin) return;
  NodeState& st = state(n);
  if (p.ttl >= 2) {
    // Heard the origin directly: relay outward, never answer.
    if (st.relayed_probes.insert({p.origin, p.subject}).second) {
      log(n, "PROBE_RELAY", fmt::format("origin={}", raw(p.origin)));
      broadcast(n, ProbeMsg{p.origin, p.subject, p.ttl - 1, n});
    }
    return;
  }
  if (topo_.adjacent(n, p.origin)) return;
  if (const WormholeLink* l = worm_.link_of(n); l && is_hidden(l->mode)) return;
  if (!st.answered.insert({p.origin, p.subject, p.relay}).second) return;
  const int tag = st.routing.forwarded.contains(p.subject) ? 1 : 0;
  log(n, "PROBE_ANSWER", fmt::format("origin={} relay={} tag={}", raw(p.origin), raw(p.relay), tag));
  unicast(n, p.relay, ProbeAck{n, tag, p.relay, p.origin, p.subject});
}

void Simulator::on_ack(NodeId n, const ProbeAck& a) {
  if (n == a.origin) {
    auto& checks = state(n).checks;
    auto it = checks.find(a.subject);
    if (it == checks.end() || !it->second.collector.accept(a, now())) {
      if (it != checks.end()) {
        for (auto& rec : metrics_.checks) {
          if (rec.node == n && rec.started == it->second.collector.started()) rec.late_acks = it->second.collector.late();
        }
      }
      log(n, "ACK_LATE", fmt::format("responder={} relay={}", raw(a.responder), raw(a.relay)));
      return;
    }
    log(n, "ACK_COLLECT", fmt::format("responder={} relay={} tag={}", raw(a.responder), raw(a.relay), a.tag));
    return;
  }
  if (n != a.relay) {
    log(n, "WARN", "probe ack at a node that is neither relay nor origin");
    return;
  }
  const WormholeLink* l = worm_.link_of(n);
  if (l && l->mode == AttackMode::HiddenActive) {
    // Hold until every ack arriving at this instant is in hand.
    auto& batch = state(n).ack_batch;
    if (batch.empty()) queue_.push(now(), Phase::Decision, FlushAcks{n});
    batch.push_back(a);
    return;
  }
  log(n, "ACK_RELAY", fmt::format("responder={} origin={}", raw(a.responder), raw(a.origin)));
  unicast(n, a.origin, a);
}

void Simulator::on_flush(NodeId n) {
  std::vector<ProbeAck> batch;
  batch.swap(state(n).ack_batch);
  std::map<std::pair<NodeId, DiscoveryKey>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < batch.size(); ++i) groups[{batch[i].origin, batch[i].subject}].push_back(i);
  for (const auto& [_, members] : groups) {
    std::vector<ProbeAck> group;
    for (std::size_t i : members) group.push_back(batch[i]);
    if (auto target = tamper_target(group)) {
      for (std::size_t i : members) {
        if (batch[i].responder == *target && batch[i].tag == 0) {
          batch[i].tag = 1;
          log(n, "ACK_TAMPER", fmt::format("responder={} 0->1", raw(*target)));
          break;
        }
      }
    }
  }
  for (const auto& a : batch) {
    log(n, "ACK_RELAY", fmt::format("responder={} origin={}", raw(a.responder), raw(a.origin)));
    unicast(n, a.origin, a);
  }
}

void Simulator::on_check_timer(const CheckTimer& t) {
  auto& checks = state(t.node).checks;
  auto it = checks.find(t.key);
  if (it == checks.end()) return;
  CheckSession& session = it->second;
  const AckSet& acks = session.collector.close();
  Verdict v = evaluate(acks, keys_.master(t.node), keys_.provisioned(t.node));

  CheckRecord rec;
  rec.node = t.node;
  rec.started = session.collector.started();
  rec.collection_time = session.collector.collection_time();
  rec.acks_received = session.collector.received();
  rec.late_acks = session.collector.late();
  rec.verdict = v;
  metrics_.checks.push_back(rec);
  metrics_.probe_ack_collection_times.push_back(rec.collection_time);

  log(t.node, "VERDICT",
      fmt::format("{} {} sum={} responders={} single_relay={}", to_string(v.kind), subject(t.key), v.tag_sum,
                  ids(acks.responders()), ids(v.single_relay_responders)));
  if (v.valid()) {
    release_rrep(t.node, session.rrep);
    return;
  }
  log(t.node, "ALARM", fmt::format("{} | {}", to_string(v.kind), subject(t.key)));
  ++metrics_.alarms;
  if (worm_.empty()) {
    ++metrics_.false_positive_count;
  } else {
    ++metrics_.detection_count;
  }
  finish(Outcome::AttackDetected);
}

}  // namespace wsn
