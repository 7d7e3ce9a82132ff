#include <doctest.h>

#include <sstream>

#include "support.hpp"
#include "wormsim/scenario.hpp"

using namespace wsn;

namespace {
ScenarioConfig parse(const std::string& text) {
  std::istringstream is(text);
  return parse_scenario(is);
}
}  // namespace

TEST_CASE("empty scenario gives the reference defaults") {
  ScenarioConfig c = parse("");
  CHECK(c == ScenarioConfig{});
  CHECK(c.node_count == 30);
  CHECK(c.area_width == 600.0);
  CHECK(c.area_height == 600.0);
  CHECK(c.range == 250.0);
  CHECK(c.wormhole_count == 3);
  CHECK(c.sim_time_limit == doctest::Approx(0.3));
  CHECK(c.ack_window == doctest::Approx(1.0));
  CHECK(c.prevention_enabled);
}

TEST_CASE("validation errors name the field") {
  auto field_of = [](const std::string& text) -> std::string {
    try {
      parse(text);
    } catch (const ConfigError& e) {
      return e.field();
    }
    return "";
  };
  CHECK(field_of("range = -5") == "range");
  CHECK(field_of("hop_delay = 0") == "hop_delay");
  CHECK(field_of("ack_window = 0") == "ack_window");
  CHECK(field_of("tx_cost = -1") == "tx_cost");
  CHECK(field_of("rx_cost = -1") == "rx_cost");
  CHECK(field_of("sim_time_limit = 0") == "sim_time_limit");
  CHECK(field_of("loss_probability = 1.5") == "loss_probability");
}

TEST_CASE("parse errors carry the line number") {
  auto line_of = [](const std::string& text) {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("seed = 4\n# note\nrange = abc\n") == 3);
  CHECK(line_of("\n\nnot a setting\n") == 3);
  CHECK(line_of("bogus_key = 1\n") == 1);
  CHECK(line_of("wormholes = [{1, 2, Sideways, 0}]\n") == 1);
}

TEST_CASE("explicit nodes, endpoints and wormholes") {
  ScenarioConfig c = parse(
      "range = 150\n"
      "node = 1 0 0\n"
      "node = 2 100 0   # trailing comment\n"
      "node = 3 200 0\n"
      "source = 1\n"
      "destination = 3\n"
      "prevention = false\n"
      "wormholes = [{1, 3, ExposedPassive, 0.002}]\n");
  REQUIRE(c.nodes.size() == 3);
  CHECK(c.nodes[1].first == node(2));
  CHECK(c.nodes[1].second == Position{100, 0});
  CHECK(c.source == node(1));
  CHECK(c.destination == node(3));
  CHECK_FALSE(c.prevention_enabled);
  REQUIRE(c.wormholes.has_value());
  CHECK(c.wormholes->front() == WormholeLink{node(1), node(3), AttackMode::ExposedPassive, 0.002});
}

TEST_CASE("dump then parse round trips") {
  ScenarioConfig a = fixture::scenario(AttackMode::HiddenActive);
  a.seed = 99;
  a.hop_delay = 0.0125;
  a.loss_probability = 0.1;
  a.tunnel_delay = 0.001;
  CHECK(parse(dump_scenario(a)) == a);

  ScenarioConfig b;
  b.seed = 17;
  b.wormhole_count = 1;
  b.wormhole_mode = AttackMode::ExposedPassive;
  b.topology_file = "some/file.topo";
  CHECK(parse(dump_scenario(b)) == b);

  ScenarioConfig defaults;
  CHECK(parse(dump_scenario(defaults)) == defaults);
}

TEST_CASE("missing scenario file is a usage error naming the file") {
  try {
    load_scenario("/no/such/scenario.cfg");
    FAIL("expected an exception");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("/no/such/scenario.cfg") != std::string::npos);
  }
}

TEST_CASE("shipped scenario files load and the fixture file matches the built-in layout") {
  const std::string dir = WORMSIM_SOURCE_DIR "/scenarios/";
  ScenarioConfig clean = load_scenario(dir + "fixture_clean.cfg");
  Scenario sc = instantiate(clean);
  CHECK(sc.topology.positions() == fixture::topology().positions());
  CHECK(sc.links.empty());
  for (const char* f : {"fixture_hidden_passive.cfg", "fixture_exposed_passive.cfg", "fixture_hidden_active.cfg",
                        "reference.cfg", "reference_clean.cfg"}) {
    CAPTURE(f);
    CHECK_NOTHROW(instantiate(load_scenario(dir + f)));
  }
  CHECK(load_scenario(dir + "reference.cfg") == ScenarioConfig{});
}
