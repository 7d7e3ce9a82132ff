#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wormsim/types.hpp"

namespace wsn {

struct Position {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Position&, const Position&) = default;
};

double distance(const Position& a, const Position& b) noexcept;

/// Unit-disc connectivity graph. Immutable after construction.
///
/// Two nodes are adjacent iff their euclidean distance is <= range (boundary
/// ties count as in range). Adjacency is symmetric and irreflexive.
class Topology {
 public:
  Topology(std::map<NodeId, Position> positions, double range);

  const std::map<NodeId, Position>& positions() const noexcept { return positions_; }
  double range() const noexcept { return range_; }
  std::size_t size() const noexcept { return positions_.size(); }
  bool contains(NodeId n) const { return positions_.count(n) != 0; }
  std::vector<NodeId> nodes() const;

  const Position& position(NodeId n) const;
  bool adjacent(NodeId a, NodeId b) const;

  const NodeSet& one_hop(NodeId n) const;
  /// Nodes at exact graph distance 2 from n.
  NodeSet two_hop(NodeId n) const;

  /// Shortest hop distance, nullopt if unreachable.
  std::optional<int> hop_distance(NodeId from, NodeId to) const;
  /// Hop distances from `from` to every reachable node (including itself at 0).
  std::map<NodeId, int> hop_distances(NodeId from) const;

 private:
  std::map<NodeId, Position> positions_;
  double range_;
  std::map<NodeId, NodeSet> adjacency_;
};

/// Builds a topology from explicit placements; duplicate ids are rejected.
Topology build_topology(const std::vector<std::pair<NodeId, Position>>& placements, double range);

/// Uniform placement over [0,width]x[0,height], ids 0..n-1. Bit-exact for a given seed.
Topology random_topology(std::uint64_t seed, std::size_t n, double width, double height, double range);

/// Portable uniform double in [0,1) from a 64-bit draw.
inline double unit_interval(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Plain-text node list: header `range <meters>`, then one `id x y` line per node.
// Blank lines and `#` comments are ignored.
void write_topology(std::ostream& os, const Topology& topo);
Topology read_topology(std::istream& is);
Topology load_topology_file(const std::string& path);

}  // namespace wsn
