#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "wormsim/packets.hpp"
#include "wormsim/topology.hpp"

namespace wsn {

/// Out-of-band wormhole behaviours.
///
/// HiddenPassive  - endpoints stay invisible: each endpoint's radio also
///                  speaks and listens at the partner's location, so nodes
///                  there see it as a (fake) one-hop neighbour and the tunnel
///                  adds no hop. Probe traffic is dropped at the tunnel and
///                  endpoints never answer probes.
/// ExposedPassive - the tunnel is an extra link; the exit endpoint re-emits
///                  under its own identity and answers probes honestly.
/// HiddenActive   - as HiddenPassive, but probe traffic crosses the tunnel
///                  and the endpoint flips the lowest-id 0 tag among the
///                  acks it relays in one batch.
///
/// An open wormhole (both ends visible) behaves like ExposedPassive as far as
/// the probe check is concerned and has no separate mode.
enum class AttackMode : std::uint8_t { HiddenPassive, ExposedPassive, HiddenActive };

std::string_view to_string(AttackMode m);
std::optional<AttackMode> parse_attack_mode(std::string_view s);

constexpr bool is_hidden(AttackMode m) noexcept { return m != AttackMode::ExposedPassive; }

struct WormholeLink {
  NodeId end_a{};
  NodeId end_b{};
  AttackMode mode = AttackMode::HiddenPassive;
  SimTime tunnel_delay = 0.0;

  friend bool operator==(const WormholeLink&, const WormholeLink&) = default;
};

/// Rejects links whose endpoints are unknown, equal, adjacent, or shared with
/// another link.
void validate_links(const Topology& topo, std::span<const WormholeLink> links);

/// Whether the tunnel carries this packet kind in this mode.
bool tunnel_carries(AttackMode mode, PacketKind kind) noexcept;

/// Endpoint lookup over a set of validated links.
class WormholeMap {
 public:
  WormholeMap() = default;
  explicit WormholeMap(std::vector<WormholeLink> links);

  bool empty() const noexcept { return links_.empty(); }
  const std::vector<WormholeLink>& links() const noexcept { return links_; }
  bool is_endpoint(NodeId n) const { return by_endpoint_.count(n) != 0; }
  /// The link n is an endpoint of, or nullptr.
  const WormholeLink* link_of(NodeId n) const;
  NodeId partner(NodeId n) const;

 private:
  std::vector<WormholeLink> links_;
  std::map<NodeId, std::size_t> by_endpoint_;
};

/// HiddenActive target: lowest responder id carrying tag 0, if any.
std::optional<NodeId> tamper_target(std::span<const ProbeAck> batch);

/// Seeded placement of `count` links between non-adjacent node pairs at hop
/// distance >= 3 where possible (else any non-adjacent pair), never using the
/// excluded nodes and never sharing an endpoint.
std::vector<WormholeLink> place_random_wormholes(const Topology& topo, std::size_t count, AttackMode mode,
                                                 SimTime tunnel_delay, std::uint64_t seed,
                                                 const NodeSet& excluded);

}  // namespace wsn
