#pragma once

#include <array>
#include <cstdint>
#include <map>

#include "wormsim/packets.hpp"

namespace wsn {

struct NodeEnergy {
  std::uint64_t tx_count = 0;
  std::uint64_t rx_count = 0;
  double consumed = 0.0;
};

/// Constant per-packet cost model: consumed = tx_count*tx_cost + rx_count*rx_cost.
class EnergyLedger {
 public:
  EnergyLedger() = default;
  EnergyLedger(double tx_cost, double rx_cost) : tx_cost_(tx_cost), rx_cost_(rx_cost) {}

  void charge_tx(NodeId n, PacketKind kind) {
    auto& e = nodes_[n];
    ++e.tx_count;
    e.consumed += tx_cost_;
    by_kind_[static_cast<std::size_t>(kind)] += tx_cost_;
  }
  void charge_rx(NodeId n, PacketKind kind) {
    auto& e = nodes_[n];
    ++e.rx_count;
    e.consumed += rx_cost_;
    by_kind_[static_cast<std::size_t>(kind)] += rx_cost_;
  }

  double tx_cost() const noexcept { return tx_cost_; }
  double rx_cost() const noexcept { return rx_cost_; }
  const std::map<NodeId, NodeEnergy>& nodes() const noexcept { return nodes_; }
  NodeEnergy of(NodeId n) const {
    auto it = nodes_.find(n);
    return it == nodes_.end() ? NodeEnergy{} : it->second;
  }

  double total() const noexcept {
    double t = 0.0;
    for (double k : by_kind_) t += k;
    return t;
  }
  double of_kind(PacketKind kind) const noexcept { return by_kind_[static_cast<std::size_t>(kind)]; }
  /// Energy spent on the reply leg: RREP plus all probe traffic.
  double reply_phase() const noexcept {
    return of_kind(PacketKind::Rrep) + of_kind(PacketKind::Probe) + of_kind(PacketKind::ProbeAck);
  }

 private:
  double tx_cost_ = 2.0;
  double rx_cost_ = 1.0;
  std::map<NodeId, NodeEnergy> nodes_;
  std::array<double, kPacketKinds> by_kind_{};
};

}  // namespace wsn
