#include "wormsim/simulator.hpp"

#include <fmt/format.h>

namespace wsn {

namespace {
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace

Simulator::Simulator(Topology topo, KeyTable keys, std::vector<WormholeLink> links, SimParams params)
    : topo_(std::move(topo)),
      keys_(std::move(keys)),
      params_(params),
      energy_(params.tx_cost, params.rx_cost),
      loss_rng_(mix64(params.seed ^ 0x6C6F73735F726E67ULL)) {
  validate_links(topo_, links);
  worm_ = WormholeMap(std::move(links));
  for (NodeId n : topo_.nodes()) {
    nodes_.emplace(n, NodeState{});
    (void)keys_.at(n);
  }
}

void Simulator::log(NodeId n, std::string_view kind, std::string details) {
  trace_.add(now(), n, kind, std::move(details));
}

std::uint32_t Simulator::start_discovery(NodeId source, NodeId destination) {
  if (started_) throw SetupError("simulator already ran a discovery");
  if (!topo_.contains(source)) throw SetupError(fmt::format("unknown source {}", raw(source)));
  if (!topo_.contains(destination)) throw SetupError(fmt::format("unknown destination {}", raw(destination)));
  if (source == destination) throw SetupError("source and destination must differ");
  started_ = true;
  std::uint32_t id = next_request_id_++;
  DiscoveryKey key{source, destination, id};
  metrics_.source = source;
  metrics_.destination = destination;
  discovery_start_ = now();
  state(source).routing.committed.insert(key);
  queue_.push(now(), Phase::Delivery, StartRreq{source, key});
  queue_.push(now() + params_.discovery_timeout, Phase::Decision, DiscoveryDeadline{});
  return id;
}

bool Simulator::step() {
  if (done_ || queue_.empty()) return false;
  auto ev = queue_.pop();
  std::visit(overloaded{
                 [this](const Delivery& d) { on_delivery(d); },
                 [this](const StartRreq& s) {
                   log(s.source, "DISCOVERY",
                       fmt::format("{} {} {}", raw(s.key.source), raw(s.key.destination), s.key.request_id));
                   broadcast(s.source, RreqPacket{s.key.source, s.key.destination, s.key.request_id, 0, s.source});
                 },
                 [this](const CommitRreq& c) { on_commit(c); },
                 [this](const FlushAcks& f) { on_flush(f.node); },
                 [this](const CheckTimer& t) { on_check_timer(t); },
                 [this](const DiscoveryDeadline&) {
                   if (!rrep_emitted_) {
                     log(metrics_.source, "TIMEOUT", "destination did not reply in time");
                     finish(Outcome::Timeout);
                   }
                 },
             },
             ev.payload);
  return !done_;
}

void Simulator::run() {
  while (step()) {
  }
  if (!done_) {
    log(metrics_.source, "TIMEOUT", "no pending events");
    finish(Outcome::Timeout);
  }
}

void Simulator::finish(Outcome outcome) {
  done_ = true;
  metrics_.outcome = outcome;
  metrics_.route_established = outcome == Outcome::RouteEstablished;
  metrics_.rrep_total_time = now() - discovery_start_;
  metrics_.energy_snapshot = energy_;
  metrics_.rrep_energy = energy_.reply_phase();
  metrics_.total_energy = energy_.total();
}

bool Simulator::has_forwarded(NodeId n, const DiscoveryKey& key) const {
  return nodes_.at(n).routing.forwarded.contains(key);
}

std::optional<NodeId> Simulator::next_hop(NodeId n, const DiscoveryKey& key) const {
  return nodes_.at(n).routing.routes.next_hop(key);
}

AckSet Simulator::acks_at(NodeId n, const DiscoveryKey& key) const {
  const auto& checks = nodes_.at(n).checks;
  auto it = checks.find(key);
  return it == checks.end() ? AckSet{} : it->second.collector.acks();
}

// ---------------------------------------------------------------------------
// Delivery model

void Simulator::radio(NodeId from, NodeId to, const Packet& p, SimTime delay) {
  queue_.push(now() + delay, Phase::Delivery, Delivery{to, from, true, p});
}

void Simulator::tunnel(NodeId from, NodeId to, const Packet& p, SimTime delay) {
  queue_.push(now() + delay, Phase::Delivery, Delivery{to, from, false, p});
}

void Simulator::broadcast(NodeId from, const Packet& p) {
  const PacketKind kind = kind_of(p);
  const SimTime hop = params_.hop_delay;
  energy_.charge_tx(from, kind);
  if (kind == PacketKind::Rreq) ++metrics_.rreq_transmissions;
  log(from, "TX", fmt::format("{} to=*", describe(p)));

  const NodeSet& nbrs = topo_.one_hop(from);
  for (NodeId r : nbrs) radio(from, r, p, hop);

  if (const WormholeLink* l = worm_.link_of(from)) {
    NodeId partner = worm_.partner(from);
    if (!tunnel_carries(l->mode, kind)) {
      log(from, "TUNNEL_DROP", std::string(to_string(kind)));
    } else if (!is_hidden(l->mode)) {
      log(from, "TUNNEL", fmt::format("{} to={}", to_string(kind), raw(partner)));
      tunnel(from, partner, p, l->tunnel_delay);
    } else {
      // Hidden: the partner re-radiates the packet unchanged, so its
      // neighbours hear `from` as if it were next to them.
      log(from, "TUNNEL", fmt::format("{} via={}", to_string(kind), raw(partner)));
      for (NodeId r : topo_.one_hop(partner)) {
        if (r != from && nbrs.count(r) == 0) radio(from, r, p, l->tunnel_delay + hop);
      }
    }
  }

  // A hidden endpoint next to `from` also hears for its partner.
  for (NodeId e : nbrs) {
    const WormholeLink* l = worm_.link_of(e);
    if (!l || !is_hidden(l->mode)) continue;
    NodeId partner = worm_.partner(e);
    if (partner == from || nbrs.count(partner)) continue;
    if (!tunnel_carries(l->mode, kind)) {
      log(e, "TUNNEL_DROP", std::string(to_string(kind)));
      continue;
    }
    log(e, "TUNNEL", fmt::format("{} from={} to={}", to_string(kind), raw(from), raw(partner)));
    tunnel(from, partner, p, hop + l->tunnel_delay);
  }
}

void Simulator::unicast(NodeId from, NodeId to, const Packet& p) {
  const PacketKind kind = kind_of(p);
  const SimTime hop = params_.hop_delay;
  energy_.charge_tx(from, kind);
  log(from, "TX", fmt::format("{} to={}", describe(p), raw(to)));

  if (topo_.adjacent(from, to)) {
    radio(from, to, p, hop);
    return;
  }
  auto via_tunnel = [&](NodeId at, const WormholeLink& l, auto&& deliver) {
    if (!tunnel_carries(l.mode, kind)) {
      log(at, "TUNNEL_DROP", std::string(to_string(kind)));
      return;
    }
    log(at, "TUNNEL", fmt::format("{} from={} to={}", to_string(kind), raw(from), raw(to)));
    deliver();
  };
  if (const WormholeLink* l = worm_.link_of(from)) {
    NodeId partner = worm_.partner(from);
    if (to == partner) {
      via_tunnel(from, *l, [&] { tunnel(from, to, p, l->tunnel_delay); });
      return;
    }
    if (is_hidden(l->mode) && topo_.adjacent(partner, to)) {
      via_tunnel(from, *l, [&] { radio(from, to, p, l->tunnel_delay + hop); });
      return;
    }
  }
  for (NodeId e : topo_.one_hop(from)) {
    const WormholeLink* l = worm_.link_of(e);
    if (l && is_hidden(l->mode) && worm_.partner(e) == to) {
      via_tunnel(e, *l, [&] { tunnel(from, to, p, hop + l->tunnel_delay); });
      return;
    }
  }
  log(from, "WARN", fmt::format("unicast to non-neighbour {} dropped", raw(to)));
}

void Simulator::on_delivery(const Delivery& d) {
  const PacketKind kind = kind_of(d.packet);
  if (d.radio) {
    if (params_.loss_probability > 0.0 && unit_interval(loss_rng_()) < params_.loss_probability) {
      log(d.to, "LOST", fmt::format("{} from={}", to_string(kind), raw(d.from)));
      return;
    }
    energy_.charge_rx(d.to, kind);
    log(d.to, "RX", fmt::format("{} from={}", describe(d.packet), raw(d.from)));
  }
  std::visit(overloaded{
                 [&](const RreqPacket& p) { on_rreq(d.to, p); },
                 [&](const RrepPacket& p) { on_rrep(d.to, p); },
                 [&](const ProbeMsg& p) { on_probe(d.to, p); },
                 [&](const ProbeAck& a) { on_ack(d.to, a); },
             },
             d.packet);
}

// ---------------------------------------------------------------------------
// Scenario plumbing

std::pair<NodeId, NodeId> farthest_pair(const Topology& topo) {
  int best = 0;
  std::pair<NodeId, NodeId> out{};
  for (NodeId s : topo.nodes()) {
    for (const auto& [d, dist] : topo.hop_distances(s)) {
      if (dist > best) {
        best = dist;
        out = {s, d};
      }
    }
  }
  if (best == 0) throw SetupError("no connected node pair in topology");
  return out;
}

Scenario instantiate(const ScenarioConfig& cfg) {
  validate(cfg);
  Topology topo = !cfg.nodes.empty()           ? build_topology(cfg.nodes, cfg.range)
                  : !cfg.topology_file.empty() ? load_topology_file(cfg.topology_file)
                                               : random_topology(cfg.seed, cfg.node_count, cfg.area_width,
                                                                 cfg.area_height, cfg.range);
  NodeId source{}, destination{};
  if (cfg.source && cfg.destination) {
    source = *cfg.source;
    destination = *cfg.destination;
  } else {
    auto [s, d] = farthest_pair(topo);
    source = cfg.source.value_or(s);
    destination = cfg.destination.value_or(d);
  }
  if (!topo.contains(source)) throw SetupError(fmt::format("source {} not in topology", raw(source)));
  if (!topo.contains(destination)) throw SetupError(fmt::format("destination {} not in topology", raw(destination)));
  if (source == destination) throw SetupError("source and destination must differ");

  std::vector<WormholeLink> links =
      cfg.wormholes ? *cfg.wormholes
                    : place_random_wormholes(topo, cfg.wormhole_count, cfg.wormhole_mode, cfg.tunnel_delay,
                                             cfg.seed, NodeSet{source, destination});
  validate_links(topo, links);
  for (const auto& l : links) {
    for (NodeId e : {l.end_a, l.end_b}) {
      if (e == source || e == destination) {
        throw SetupError(fmt::format("wormhole endpoint {} is the source or destination", raw(e)));
      }
    }
  }
  KeyTable keys = provision(topo, generate_masters(topo, cfg.seed));
  SimParams params{cfg.hop_delay, cfg.ack_window, cfg.sim_time_limit,     cfg.tx_cost,
                   cfg.rx_cost,   cfg.loss_probability, cfg.prevention_enabled, cfg.seed};
  return Scenario{std::move(topo), source, destination, std::move(links), std::move(keys), params};
}

RunResult run(const Scenario& sc) {
  Simulator sim(sc.topology, sc.keys, sc.links, sc.params);
  sim.start_discovery(sc.source, sc.destination);
  sim.run();
  return RunResult{sim.metrics(), sim.trace()};
}

RunResult run(const ScenarioConfig& cfg) { return run(instantiate(cfg)); }

OverheadRow measure_overhead(const ScenarioConfig& baseline, const ScenarioConfig& prevention) {
  if (baseline.prevention_enabled || !prevention.prevention_enabled) {
    throw UsageError("overhead pair needs prevention off for the baseline and on for the other run");
  }
  ScenarioConfig aligned = prevention;
  aligned.prevention_enabled = false;
  if (!(aligned == baseline)) throw UsageError("overhead pair differs in more than prevention_enabled");

  RunResult base = run(baseline);
  RunResult prev = run(prevention);
  OverheadRow row;
  row.seed = baseline.seed;
  row.source = base.metrics.source;
  row.destination = base.metrics.destination;
  row.hops = base.metrics.route_established ? base.metrics.hop_count() : prev.metrics.hop_count();
  row.baseline_time = base.metrics.rrep_total_time;
  row.prevention_time = prev.metrics.rrep_total_time;
  row.baseline_energy = base.metrics.rrep_energy;
  row.prevention_energy = prev.metrics.rrep_energy;
  row.max_collection_time = prev.metrics.max_collection_time();
  row.baseline_outcome = base.metrics.outcome;
  row.prevention_outcome = prev.metrics.outcome;
  return row;
}

OverheadRow measure_overhead(const ScenarioConfig& cfg) {
  ScenarioConfig base = cfg, prev = cfg;
  base.prevention_enabled = false;
  prev.prevention_enabled = true;
  return measure_overhead(base, prev);
}

}  // namespace wsn
