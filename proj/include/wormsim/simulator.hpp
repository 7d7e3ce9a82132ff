#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <tuple>
#include <variant>
#include <vector>

#include "wormsim/energy.hpp"
#include "wormsim/event_queue.hpp"
#include "wormsim/keying.hpp"
#include "wormsim/metrics.hpp"
#include "wormsim/prevention.hpp"
#include "wormsim/routing.hpp"
#include "wormsim/scenario.hpp"
#include "wormsim/topology.hpp"
#include "wormsim/trace.hpp"
#include "wormsim/wormhole.hpp"

namespace wsn {

struct SimParams {
  SimTime hop_delay = 0.01;
  SimTime ack_window = 1.0;
  SimTime discovery_timeout = 0.3;
  double tx_cost = 2.0;
  double rx_cost = 1.0;
  double loss_probability = 0.0;
  bool prevention_enabled = true;
  std::uint64_t seed = 1;
};

/// Single-threaded discrete-event simulation of one route discovery.
///
/// Radio model: unit-disc, loss-free unless loss_probability > 0, every hop
/// takes hop_delay. Each transmission charges tx_cost to the sender and
/// rx_cost to every receiver; out-of-band tunnel legs are free.
///
/// Terminal states: route established at the source, first alarm, or the
/// destination not having replied by discovery_timeout (also reported when the
/// event queue drains without a result).
class Simulator {
 public:
  Simulator(Topology topo, KeyTable keys, std::vector<WormholeLink> links, SimParams params);

  /// Schedules the source's RREQ broadcast at the current time. One discovery
  /// per simulator. Throws SetupError for unknown or equal endpoints.
  std::uint32_t start_discovery(NodeId source, NodeId destination);

  /// Processes one event; returns false once finished or idle.
  bool step();
  void run();
  bool finished() const noexcept { return done_; }

  SimTime now() const noexcept { return queue_.now(); }
  const Metrics& metrics() const noexcept { return metrics_; }
  const Trace& trace() const noexcept { return trace_; }
  const EnergyLedger& energy() const noexcept { return energy_; }
  const Topology& topology() const noexcept { return topo_; }
  const KeyTable& keys() const noexcept { return keys_; }
  const WormholeMap& wormholes() const noexcept { return worm_; }
  const SimParams& params() const noexcept { return params_; }

  bool has_forwarded(NodeId n, const DiscoveryKey& key) const;
  std::optional<NodeId> next_hop(NodeId n, const DiscoveryKey& key) const;
  /// Acks gathered so far by n's check for `key` (empty if none started).
  AckSet acks_at(NodeId n, const DiscoveryKey& key) const;

 private:
  struct Delivery {
    NodeId to;
    NodeId from;
    bool radio;
    Packet packet;
  };
  struct StartRreq {
    NodeId source;
    DiscoveryKey key;
  };
  struct CommitRreq {
    NodeId node;
    DiscoveryKey key;
  };
  struct FlushAcks {
    NodeId node;
  };
  struct CheckTimer {
    NodeId node;
    DiscoveryKey key;
  };
  struct DiscoveryDeadline {};
  using Payload = std::variant<Delivery, StartRreq, CommitRreq, FlushAcks, CheckTimer, DiscoveryDeadline>;

  struct CheckSession {
    RrepPacket rrep;
    AckCollector collector;
  };
  struct NodeState {
    RoutingState routing;
    std::set<std::pair<NodeId, DiscoveryKey>> relayed_probes;
    std::set<std::tuple<NodeId, DiscoveryKey, NodeId>> answered;
    std::map<DiscoveryKey, CheckSession> checks;
    std::vector<ProbeAck> ack_batch;
  };

  NodeState& state(NodeId n) { return nodes_.at(n); }
  void log(NodeId n, std::string_view kind, std::string details);

  // delivery model
  void broadcast(NodeId from, const Packet& p);
  void unicast(NodeId from, NodeId to, const Packet& p);
  void radio(NodeId from, NodeId to, const Packet& p, SimTime delay);
  void tunnel(NodeId from, NodeId to, const Packet& p, SimTime delay);
  void on_delivery(const Delivery& d);

  // routing
  void on_rreq(NodeId n, const RreqPacket& p);
  void on_commit(const CommitRreq& c);
  void on_rrep(NodeId n, const RrepPacket& p);
  void release_rrep(NodeId n, const RrepPacket& p);
  void forward_rrep(NodeId n, const RrepPacket& p);
  void emit_rrep(NodeId dest, const RreqPacket& rreq);

  // prevention
  void start_check(NodeId n, const RrepPacket& p);
  void on_probe(NodeId n, const ProbeMsg& p);
  void on_ack(NodeId n, const ProbeAck& a);
  void on_flush(NodeId n);
  void on_check_timer(const CheckTimer& t);

  void finish(Outcome outcome);

  Topology topo_;
  KeyTable keys_;
  WormholeMap worm_;
  SimParams params_;
  EventQueue<Payload> queue_;
  std::map<NodeId, NodeState> nodes_;
  EnergyLedger energy_;
  Trace trace_;
  Metrics metrics_;
  std::mt19937_64 loss_rng_;
  std::uint32_t next_request_id_ = 0;
  bool started_ = false;
  bool rrep_emitted_ = false;
  bool done_ = false;
  SimTime discovery_start_ = 0.0;
};

/// A fully resolved scenario: topology, endpoints, wormholes and keys.
struct Scenario {
  Topology topology;
  NodeId source{};
  NodeId destination{};
  std::vector<WormholeLink> links;
  KeyTable keys;
  SimParams params;
};

struct RunResult {
  Metrics metrics;
  Trace trace;
};

/// Farthest pair by hop distance within a component; lowest ids win ties.
/// Throws SetupError when no two nodes are connected.
std::pair<NodeId, NodeId> farthest_pair(const Topology& topo);

Scenario instantiate(const ScenarioConfig& cfg);
RunResult run(const Scenario& scenario);
RunResult run(const ScenarioConfig& cfg);

/// Runs a baseline/prevention pair. The configs must differ only in
/// prevention_enabled (baseline off, prevention on); otherwise UsageError.
OverheadRow measure_overhead(const ScenarioConfig& baseline, const ScenarioConfig& prevention);
/// Convenience: derives the pair from one config.
OverheadRow measure_overhead(const ScenarioConfig& cfg);

}  // namespace wsn
