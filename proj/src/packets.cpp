#include "wormsim/packets.hpp"

#include <fmt/format.h>

namespace wsn {

std::string_view to_string(PacketKind k) {
  switch (k) {
    case PacketKind::Rreq: return "RREQ";
    case PacketKind::Rrep: return "RREP";
    case PacketKind::Probe: return "PROBE";
    case PacketKind::ProbeAck: return "PROBE_ACK";
  }
  return "?";
}

namespace {

struct Describe {
  std::string operator()(const RreqPacket& p) const {
    return fmt::format("RREQ {} {} {} hop={} pred={}", raw(p.source), raw(p.destination), p.request_id,
                       p.hop_count, raw(p.path_predecessor));
  }
  std::string operator()(const RrepPacket& p) const {
    return fmt::format("RREP {} {} {} fwd={}", raw(p.source), raw(p.destination), p.request_id,
                       raw(p.forwarder));
  }
  std::string operator()(const ProbeMsg& p) const {
    return fmt::format("PROBE {} {} {} origin={} ttl={} relay={}", raw(p.subject.source),
                       raw(p.subject.destination), p.subject.request_id, raw(p.origin), p.ttl, raw(p.relay));
  }
  std::string operator()(const ProbeAck& p) const {
    return fmt::format("PROBE_ACK {} {} {} origin={} responder={} relay={} tag={}", raw(p.subject.source),
                       raw(p.subject.destination), p.subject.request_id, raw(p.origin), raw(p.responder),
                       raw(p.relay), p.tag);
  }
};

}  // namespace

std::string describe(const Packet& p) { return std::visit(Describe{}, p); }

}  // namespace wsn
