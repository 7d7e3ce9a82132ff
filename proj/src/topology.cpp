#include "wormsim/topology.hpp"

#include <cmath>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include <fmt/format.h>

namespace wsn {

double distance(const Position& a, const Position& b) noexcept {
  return std::hypot(a.x - b.x, a.y - b.y);
}

Topology::Topology(std::map<NodeId, Position> positions, double range)
    : positions_(std::move(positions)), range_(range) {
  if (!(range_ > 0.0)) {
    throw SetupError(fmt::format("range must be positive, got {}", range_));
  }
  if (positions_.empty()) {
    throw SetupError("topology needs at least one node");
  }
  for (const auto& [id, _] : positions_) adjacency_[id];
  for (auto a = positions_.begin(); a != positions_.end(); ++a) {
    for (auto b = std::next(a); b != positions_.end(); ++b) {
      if (distance(a->second, b->second) <= range_) {
        adjacency_[a->first].insert(b->first);
        adjacency_[b->first].insert(a->first);
      }
    }
  }
}

std::vector<NodeId> Topology::nodes() const {
  std::vector<NodeId> out;
  out.reserve(positions_.size());
  for (const auto& [id, _] : positions_) out.push_back(id);
  return out;
}

const Position& Topology::position(NodeId n) const {
  auto it = positions_.find(n);
  if (it == positions_.end()) throw LookupError(fmt::format("unknown node {}", raw(n)));
  return it->second;
}

bool Topology::adjacent(NodeId a, NodeId b) const { return one_hop(a).count(b) != 0; }

const NodeSet& Topology::one_hop(NodeId n) const {
  auto it = adjacency_.find(n);
  if (it == adjacency_.end()) throw LookupError(fmt::format("unknown node {}", raw(n)));
  return it->second;
}

NodeSet Topology::two_hop(NodeId n) const {
  const NodeSet& near = one_hop(n);
  NodeSet out;
  for (NodeId m : near) {
    for (NodeId k : adjacency_.at(m)) {
      if (k != n && near.count(k) == 0) out.insert(k);
    }
  }
  return out;
}

std::map<NodeId, int> Topology::hop_distances(NodeId from) const {
  std::map<NodeId, int> dist;
  dist[from] = 0;
  std::deque<NodeId> frontier{from};
  (void)one_hop(from);
  while (!frontier.empty()) {
    NodeId cur = frontier.front();
    frontier.pop_front();
    for (NodeId nb : adjacency_.at(cur)) {
      if (dist.emplace(nb, dist[cur] + 1).second) frontier.push_back(nb);
    }
  }
  return dist;
}

std::optional<int> Topology::hop_distance(NodeId from, NodeId to) const {
  (void)one_hop(to);
  auto d = hop_distances(from);
  auto it = d.find(to);
  if (it == d.end()) return std::nullopt;
  return it->second;
}

Topology build_topology(const std::vector<std::pair<NodeId, Position>>& placements, double range) {
  std::map<NodeId, Position> positions;
  for (const auto& [id, pos] : placements) {
    if (!positions.emplace(id, pos).second) {
      throw SetupError(fmt::format("duplicate node id {}", raw(id)));
    }
  }
  return Topology(std::move(positions), range);
}

Topology random_topology(std::uint64_t seed, std::size_t n, double width, double height, double range) {
  if (n < 2) throw SetupError("random topology needs at least 2 nodes");
  if (!(width > 0.0) || !(height > 0.0)) throw SetupError("area must be positive");
  std::mt19937_64 rng(seed);
  std::map<NodeId, Position> positions;
  for (std::size_t i = 0; i < n; ++i) {
    double x = unit_interval(rng()) * width;
    double y = unit_interval(rng()) * height;
    positions.emplace(node(static_cast<std::uint32_t>(i)), Position{x, y});
  }
  return Topology(std::move(positions), range);
}

void write_topology(std::ostream& os, const Topology& topo) {
  os << fmt::format("range {}\n", topo.range());
  for (const auto& [id, p] : topo.positions()) {
    os << fmt::format("{} {} {}\n", raw(id), p.x, p.y);
  }
}

Topology read_topology(std::istream& is) {
  std::optional<double> range;
  std::vector<std::pair<NodeId, Position>> placements;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "range") {
      double r = 0;
      if (!(ls >> r)) throw ParseError(lineno, "expected `range <meters>`");
      range = r;
      continue;
    }
    if (!range) throw ParseError(lineno, "node line before `range` header");
    std::uint32_t id = 0;
    double x = 0, y = 0;
    std::istringstream idstream(first);
    if (!(idstream >> id) || !(ls >> x >> y)) throw ParseError(lineno, "expected `id x y`");
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "trailing text `" + extra + "`");
    placements.emplace_back(node(id), Position{x, y});
  }
  if (!range) throw ParseError(lineno, "missing `range` header");
  return build_topology(placements, *range);
}

Topology load_topology_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open topology file " + path);
  return read_topology(in);
}

}  // namespace wsn
