#pragma once

#include <cstdint>
#include <queue>
#include <stdexcept>
#include <vector>

#include "wormsim/types.hpp"

namespace wsn {

/// Within one timestamp, every packet delivery runs before any decision
/// (RREQ commit, ack batch flush, check timer). This is what lets a node see
/// all simultaneous arrivals before choosing among them.
enum class Phase : std::uint8_t { Delivery = 0, Decision = 1 };

/// Min-queue ordered by (time, phase, insertion sequence).
template <class Payload>
class EventQueue {
 public:
  struct Event {
    SimTime time;
    Phase phase;
    std::uint64_t sequence;
    Payload payload;
  };

  /// Throws std::logic_error if `time` is earlier than the current clock.
  void push(SimTime time, Phase phase, Payload payload) {
    if (time < now_) throw std::logic_error("event scheduled in the past");
    heap_.push(Event{time, phase, next_sequence_++, std::move(payload)});
  }

  Event pop() {
    Event e = heap_.top();
    heap_.pop();
    now_ = e.time;
    return e;
  }

  bool empty() const noexcept { return heap_.empty(); }
  std::size_t size() const noexcept { return heap_.size(); }
  SimTime now() const noexcept { return now_; }

 private:
  struct Later {
    bool operator()(const Event& a, const Event& b) const noexcept {
      if (a.time != b.time) return a.time > b.time;
      if (a.phase != b.phase) return a.phase > b.phase;
      return a.sequence > b.sequence;
    }
  };
  std::priority_queue<Event, std::vector<Event>, Later> heap_;
  std::uint64_t next_sequence_ = 0;
  SimTime now_ = 0.0;
};

}  // namespace wsn
