#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "wormsim/keying.hpp"
#include "wormsim/packets.hpp"

namespace wsn {

/// Probe_Ack tags gathered during one check, keyed responder -> relay.
///
/// Each (responder, relay) cell is a bitmask of the tags seen on that path
/// (bit 0: a 0 tag arrived, bit 1: a 1 tag arrived), so identical copies
/// collapse and contradicting copies are never lost.
class AckSet {
 public:
  void add(NodeId responder, NodeId relay, int tag);

  bool empty() const noexcept { return cells_.empty(); }
  NodeSet responders() const;
  const std::map<NodeId, std::uint8_t>& relays(NodeId responder) const;
  /// True when this responder was seen with both 0 and 1 across all its relays.
  bool conflicted(NodeId responder) const;
  /// The responder's tag if consistent.
  std::optional<int> tag(NodeId responder) const;
  const std::map<NodeId, std::map<NodeId, std::uint8_t>>& cells() const noexcept { return cells_; }

  friend bool operator==(const AckSet&, const AckSet&) = default;

 private:
  std::map<NodeId, std::map<NodeId, std::uint8_t>> cells_;
};

enum class VerdictKind : std::uint8_t {
  Valid,
  IllegalNoForwarder,
  IllegalKeyMismatch,
  IllegalTagConflict,
  IllegalMultipleForwarders,
};

std::string_view to_string(VerdictKind k);
std::optional<VerdictKind> parse_verdict(std::string_view s);

struct Verdict {
  VerdictKind kind = VerdictKind::Valid;
  int tag_sum = 0;
  // Responders whose ack came back over exactly one relay; a tampered tag on
  // these cannot be exposed by comparison.
  NodeSet single_relay_responders;

  bool valid() const noexcept { return kind == VerdictKind::Valid; }
};

/// Verdict precedence:
///  1. any responder with contradicting tags across relays -> IllegalTagConflict
///  2. tag sum 0 -> IllegalNoForwarder
///  3. tag sum > 1 -> IllegalMultipleForwarders
///  4. tag sum 1 -> LK over all responders; LK == K_mu -> Valid else IllegalKeyMismatch
Verdict evaluate(const AckSet& acks, MasterKey master, NodeKey provisioned);

/// Collects acks for one check between `started` and `started + window`
/// inclusive. Acks after the deadline are rejected as late.
class AckCollector {
 public:
  AckCollector(SimTime started, SimTime window) : started_(started), window_(window) {}

  SimTime started() const noexcept { return started_; }
  SimTime deadline() const noexcept { return started_ + window_; }
  bool open() const noexcept { return open_; }

  /// Returns false when the ack is late (window closed or past the deadline).
  bool accept(const ProbeAck& ack, SimTime now);
  const AckSet& close() {
    open_ = false;
    return acks_;
  }
  const AckSet& acks() const noexcept { return acks_; }
  std::size_t received() const noexcept { return received_; }
  std::size_t late() const noexcept { return late_; }
  /// Time from probe broadcast to the last accepted ack; 0 with no acks.
  SimTime collection_time() const noexcept { return last_ ? *last_ - started_ : 0.0; }

 private:
  SimTime started_;
  SimTime window_;
  bool open_ = true;
  std::size_t received_ = 0;
  std::size_t late_ = 0;
  std::optional<SimTime> last_;
  AckSet acks_;
};

}  // namespace wsn
