#include <doctest.h>

#include "support.hpp"
#include "wormsim/wormhole.hpp"

using namespace wsn;
using fixture::id;

TEST_CASE("link validation") {
  Topology t = fixture::topology();
  auto bad = [&](WormholeLink l) { return std::vector<WormholeLink>{l}; };
  CHECK_NOTHROW(validate_links(t, bad({id('C'), id('L')})));
  CHECK_THROWS_AS(validate_links(t, bad({id('C'), id('C')})), SetupError);
  CHECK_THROWS_AS(validate_links(t, bad({id('B'), id('C')})), SetupError);
  CHECK_THROWS_AS(validate_links(t, bad({id('C'), node(99)})), SetupError);
  CHECK_THROWS_AS(validate_links(t, bad({id('C'), id('L'), AttackMode::HiddenPassive, -1.0})), SetupError);
  std::vector<WormholeLink> shared{{id('C'), id('L')}, {id('C'), id('G')}};
  CHECK_THROWS_AS(validate_links(t, shared), SetupError);
}

TEST_CASE("tunnel carriage per mode") {
  for (auto m : {AttackMode::HiddenPassive, AttackMode::ExposedPassive, AttackMode::HiddenActive}) {
    CHECK(tunnel_carries(m, PacketKind::Rreq));
    CHECK(tunnel_carries(m, PacketKind::Rrep));
  }
  CHECK_FALSE(tunnel_carries(AttackMode::HiddenPassive, PacketKind::Probe));
  CHECK_FALSE(tunnel_carries(AttackMode::HiddenPassive, PacketKind::ProbeAck));
  CHECK(tunnel_carries(AttackMode::HiddenActive, PacketKind::Probe));
  CHECK(tunnel_carries(AttackMode::ExposedPassive, PacketKind::ProbeAck));
}

TEST_CASE("map lookups") {
  WormholeMap m({{id('C'), id('L')}});
  CHECK(m.is_endpoint(id('C')));
  CHECK(m.is_endpoint(id('L')));
  CHECK_FALSE(m.is_endpoint(id('A')));
  CHECK(m.partner(id('C')) == id('L'));
  CHECK(m.partner(id('L')) == id('C'));
  CHECK(m.link_of(id('A')) == nullptr);
}

TEST_CASE("tamper target is the lowest zero-tag responder") {
  std::vector<ProbeAck> batch{{node(7), 0}, {node(3), 1}, {node(5), 0}};
  CHECK(tamper_target(batch) == node(5));
  std::vector<ProbeAck> all_ones{{node(2), 1}};
  CHECK_FALSE(tamper_target(all_ones).has_value());
  CHECK_FALSE(tamper_target(std::vector<ProbeAck>{}).has_value());
}

TEST_CASE("random placement respects exclusions and prefers far pairs") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Topology t = random_topology(seed, 30, 600, 600, 250);
    NodeSet excluded{node(0), node(1)};
    auto links = place_random_wormholes(t, 3, AttackMode::HiddenActive, 0.0, seed, excluded);
    CHECK_NOTHROW(validate_links(t, links));
    auto again = place_random_wormholes(t, 3, AttackMode::HiddenActive, 0.0, seed, excluded);
    CHECK(links == again);
    for (const auto& l : links) {
      CHECK(excluded.count(l.end_a) == 0);
      CHECK(excluded.count(l.end_b) == 0);
      CHECK_FALSE(t.adjacent(l.end_a, l.end_b));
      CHECK(l.mode == AttackMode::HiddenActive);
    }
  }
}

TEST_CASE("attack mode names round trip") {
  for (auto m : {AttackMode::HiddenPassive, AttackMode::ExposedPassive, AttackMode::HiddenActive}) {
    CHECK(parse_attack_mode(to_string(m)) == m);
  }
  CHECK_FALSE(parse_attack_mode("closed").has_value());
}
