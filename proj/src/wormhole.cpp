#include "wormsim/wormhole.hpp"

#include "wormsim/keying.hpp"

#include <array>
#include <random>

#include <fmt/format.h>

namespace wsn {

std::string_view to_string(AttackMode m) {
  switch (m) {
    case AttackMode::HiddenPassive: return "HiddenPassive";
    case AttackMode::ExposedPassive: return "ExposedPassive";
    case AttackMode::HiddenActive: return "HiddenActive";
  }
  return "?";
}

std::optional<AttackMode> parse_attack_mode(std::string_view s) {
  constexpr std::array modes{AttackMode::HiddenPassive, AttackMode::ExposedPassive, AttackMode::HiddenActive};
  for (auto m : modes) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

void validate_links(const Topology& topo, std::span<const WormholeLink> links) {
  NodeSet used;
  for (const auto& l : links) {
    for (NodeId end : {l.end_a, l.end_b}) {
      if (!topo.contains(end)) throw SetupError(fmt::format("wormhole endpoint {} is not in the topology", raw(end)));
      if (!used.insert(end).second) throw SetupError(fmt::format("node {} is an endpoint of two wormholes", raw(end)));
    }
    if (l.end_a == l.end_b) throw SetupError("wormhole endpoints must differ");
    if (topo.adjacent(l.end_a, l.end_b)) {
      throw SetupError(fmt::format("wormhole endpoints {} and {} are already neighbours", raw(l.end_a), raw(l.end_b)));
    }
    if (!(l.tunnel_delay >= 0.0)) throw SetupError("tunnel delay must be non-negative");
  }
}

bool tunnel_carries(AttackMode mode, PacketKind kind) noexcept {
  if (kind == PacketKind::Rreq || kind == PacketKind::Rrep) return true;
  return mode != AttackMode::HiddenPassive;
}

WormholeMap::WormholeMap(std::vector<WormholeLink> links) : links_(std::move(links)) {
  for (std::size_t i = 0; i < links_.size(); ++i) {
    by_endpoint_[links_[i].end_a] = i;
    by_endpoint_[links_[i].end_b] = i;
  }
}

const WormholeLink* WormholeMap::link_of(NodeId n) const {
  auto it = by_endpoint_.find(n);
  return it == by_endpoint_.end() ? nullptr : &links_[it->second];
}

NodeId WormholeMap::partner(NodeId n) const {
  const WormholeLink* l = link_of(n);
  if (!l) throw LookupError(fmt::format("node {} is not a wormhole endpoint", raw(n)));
  return l->end_a == n ? l->end_b : l->end_a;
}

std::optional<NodeId> tamper_target(std::span<const ProbeAck> batch) {
  std::optional<NodeId> best;
  for (const auto& a : batch) {
    if (a.tag == 0 && (!best || a.responder < *best)) best = a.responder;
  }
  return best;
}

std::vector<WormholeLink> place_random_wormholes(const Topology& topo, std::size_t count, AttackMode mode,
                                                 SimTime tunnel_delay, std::uint64_t seed,
                                                 const NodeSet& excluded) {
  std::vector<std::pair<NodeId, NodeId>> far, near;
  auto ids = topo.nodes();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (excluded.count(ids[i])) continue;
    auto dist = topo.hop_distances(ids[i]);
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (excluded.count(ids[j]) || topo.adjacent(ids[i], ids[j])) continue;
      auto it = dist.find(ids[j]);
      (it == dist.end() || it->second >= 3 ? far : near).emplace_back(ids[i], ids[j]);
    }
  }
  std::mt19937_64 rng(mix64(seed ^ 0x776F726D686F6C65ULL));
  auto shuffle = [&rng](auto& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
  };
  shuffle(far);
  shuffle(near);
  far.insert(far.end(), near.begin(), near.end());

  std::vector<WormholeLink> out;
  NodeSet used;
  for (const auto& [a, b] : far) {
    if (out.size() == count) break;
    if (used.count(a) || used.count(b)) continue;
    used.insert(a);
    used.insert(b);
    out.push_back({a, b, mode, tunnel_delay});
  }
  return out;
}

}  // namespace wsn
