#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wormsim/types.hpp"

namespace wsn {

struct RreqPacket {
  NodeId source{};
  NodeId destination{};
  std::uint32_t request_id = 0;
  int hop_count = 0;
  NodeId path_predecessor{};

  DiscoveryKey key() const { return {source, destination, request_id}; }
};

struct RrepPacket {
  NodeId source{};
  NodeId destination{};
  std::uint32_t request_id = 0;
  NodeId forwarder{};
  // Transmitting nodes so far, destination first. Bookkeeping only; no
  // protocol decision reads it.
  std::vector<NodeId> path;

  DiscoveryKey key() const { return {source, destination, request_id}; }
};

struct ProbeMsg {
  NodeId origin{};
  DiscoveryKey subject;
  int ttl = 2;
  NodeId relay{};
};

struct ProbeAck {
  NodeId responder{};
  int tag = 0;
  NodeId relay{};
  NodeId origin{};
  DiscoveryKey subject;
};

using Packet = std::variant<RreqPacket, RrepPacket, ProbeMsg, ProbeAck>;

enum class PacketKind : std::uint8_t { Rreq, Rrep, Probe, ProbeAck };
inline constexpr std::size_t kPacketKinds = 4;

inline PacketKind kind_of(const Packet& p) { return static_cast<PacketKind>(p.index()); }
std::string_view to_string(PacketKind k);
/// Compact one-line description used in trace details.
std::string describe(const Packet& p);

}  // namespace wsn
