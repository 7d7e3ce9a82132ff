#include "wormsim/keying.hpp"

#include <ostream>
#include <random>

#include <fmt/format.h>

namespace wsn {

NodeKey derive_key(MasterKey master, const NodeSet& ids) {
  std::uint64_t acc = master.value;
  for (NodeId id : ids) acc = mix64(acc ^ raw(id));
  return NodeKey{acc};
}

NodeKey derive_local_key(MasterKey master, const NodeSet& responders) {
  return derive_key(master, responders);
}

const KeyEntry& KeyTable::at(NodeId n) const {
  auto it = entries_.find(n);
  if (it == entries_.end()) throw LookupError(fmt::format("no key material for node {}", raw(n)));
  return it->second;
}

KeyTable provision(const Topology& topo, const std::map<NodeId, MasterKey>& masters) {
  std::map<NodeId, KeyEntry> entries;
  for (NodeId n : topo.nodes()) {
    auto it = masters.find(n);
    if (it == masters.end()) throw SetupError(fmt::format("missing master key for node {}", raw(n)));
    NodeSet set = topo.two_hop(n);
    NodeKey kmu = derive_key(it->second, set);
    entries.emplace(n, KeyEntry{it->second, kmu, std::move(set)});
  }
  return KeyTable(std::move(entries));
}

std::map<NodeId, MasterKey> generate_masters(const Topology& topo, std::uint64_t seed) {
  std::mt19937_64 rng(mix64(seed ^ 0x6D61737465726B79ULL));
  std::map<NodeId, MasterKey> out;
  for (NodeId n : topo.nodes()) out.emplace(n, MasterKey{rng()});
  return out;
}

void dump_keys(std::ostream& os, const KeyTable& keys) {
  for (const auto& [id, e] : keys.entries()) {
    std::string ids;
    for (NodeId m : e.provisioned_set) {
      if (!ids.empty()) ids += ',';
      ids += std::to_string(raw(m));
    }
    if (ids.empty()) ids = "-";
    os << fmt::format("{} {:016x} {:016x} {}\n", raw(id), e.master.value, e.provisioned.value, ids);
  }
}

}  // namespace wsn
