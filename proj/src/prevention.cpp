#include "wormsim/prevention.hpp"

#include <array>

namespace wsn {

namespace {
constexpr std::uint8_t kSawZero = 0b01;
constexpr std::uint8_t kSawOne = 0b10;

std::uint8_t merged(const std::map<NodeId, std::uint8_t>& relays) {
  std::uint8_t mask = 0;
  for (const auto& [_, m] : relays) mask |= m;
  return mask;
}
}  // namespace

void AckSet::add(NodeId responder, NodeId relay, int tag) {
  cells_[responder][relay] |= (tag != 0) ? kSawOne : kSawZero;
}

NodeSet AckSet::responders() const {
  NodeSet out;
  for (const auto& [r, _] : cells_) out.insert(r);
  return out;
}

const std::map<NodeId, std::uint8_t>& AckSet::relays(NodeId responder) const {
  static const std::map<NodeId, std::uint8_t> kNone;
  auto it = cells_.find(responder);
  return it == cells_.end() ? kNone : it->second;
}

bool AckSet::conflicted(NodeId responder) const {
  return merged(relays(responder)) == (kSawZero | kSawOne);
}

std::optional<int> AckSet::tag(NodeId responder) const {
  switch (merged(relays(responder))) {
    case kSawZero: return 0;
    case kSawOne: return 1;
    default: return std::nullopt;
  }
}

std::string_view to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Valid: return "Valid";
    case VerdictKind::IllegalNoForwarder: return "IllegalNoForwarder";
    case VerdictKind::IllegalKeyMismatch: return "IllegalKeyMismatch";
    case VerdictKind::IllegalTagConflict: return "IllegalTagConflict";
    case VerdictKind::IllegalMultipleForwarders: return "IllegalMultipleForwarders";
  }
  return "?";
}

std::optional<VerdictKind> parse_verdict(std::string_view s) {
  constexpr std::array kinds{VerdictKind::Valid, VerdictKind::IllegalNoForwarder, VerdictKind::IllegalKeyMismatch,
                             VerdictKind::IllegalTagConflict, VerdictKind::IllegalMultipleForwarders};
  for (auto k : kinds) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

Verdict evaluate(const AckSet& acks, MasterKey master, NodeKey provisioned) {
  Verdict v;
  bool conflict = false;
  for (const auto& [responder, relays] : acks.cells()) {
    if (relays.size() == 1) v.single_relay_responders.insert(responder);
    std::uint8_t mask = merged(relays);
    if (mask == (kSawZero | kSawOne)) {
      conflict = true;
    } else if (mask == kSawOne) {
      ++v.tag_sum;
    }
  }
  if (conflict) {
    v.kind = VerdictKind::IllegalTagConflict;
  } else if (v.tag_sum == 0) {
    v.kind = VerdictKind::IllegalNoForwarder;
  } else if (v.tag_sum > 1) {
    v.kind = VerdictKind::IllegalMultipleForwarders;
  } else {
    NodeKey local = derive_local_key(master, acks.responders());
    v.kind = (local == provisioned) ? VerdictKind::Valid : VerdictKind::IllegalKeyMismatch;
  }
  return v;
}

bool AckCollector::accept(const ProbeAck& ack, SimTime now) {
  if (!open_ || now > deadline()) {
    ++late_;
    return false;
  }
  acks_.add(ack.responder, ack.relay, ack.tag);
  ++received_;
  last_ = now;
  return true;
}

}  // namespace wsn
