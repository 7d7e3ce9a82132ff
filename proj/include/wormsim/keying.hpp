#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>

#include "wormsim/topology.hpp"

namespace wsn {

struct MasterKey {
  std::uint64_t value = 0;
  friend auto operator<=>(const MasterKey&, const MasterKey&) = default;
};

struct NodeKey {
  std::uint64_t value = 0;
  friend auto operator<=>(const NodeKey&, const NodeKey&) = default;
};

/// 64-bit finalizer used as the key derivation mixer. Not a secure PRF; swap
/// here if a real one is wanted.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

/// Folds the ids in ascending order into the master: acc <- mix64(acc ^ id).
/// NodeSet is already ordered, so presentation order never matters.
NodeKey derive_key(MasterKey master, const NodeSet& ids);

/// Same function as derive_key, applied to the responders observed during a check.
NodeKey derive_local_key(MasterKey master, const NodeSet& responders);

struct KeyEntry {
  MasterKey master;
  NodeKey provisioned;
  NodeSet provisioned_set;
};

/// Per-node key material loaded at deployment. Immutable after provisioning.
class KeyTable {
 public:
  KeyTable() = default;
  explicit KeyTable(std::map<NodeId, KeyEntry> entries) : entries_(std::move(entries)) {}

  const KeyEntry& at(NodeId n) const;
  MasterKey master(NodeId n) const { return at(n).master; }
  NodeKey provisioned(NodeId n) const { return at(n).provisioned; }
  const NodeSet& provisioned_set(NodeId n) const { return at(n).provisioned_set; }
  const std::map<NodeId, KeyEntry>& entries() const noexcept { return entries_; }

 private:
  std::map<NodeId, KeyEntry> entries_;
};

/// Trusted setup: K_mu(n) = derive_key(master(n), two_hop(n)).
KeyTable provision(const Topology& topo, const std::map<NodeId, MasterKey>& masters);

/// Distinct per-node masters drawn from the scenario seed, ascending id order.
std::map<NodeId, MasterKey> generate_masters(const Topology& topo, std::uint64_t seed);

/// Debug dump, one line per node: `id master_hex kmu_hex id_list`.
void dump_keys(std::ostream& os, const KeyTable& keys);

}  // namespace wsn
