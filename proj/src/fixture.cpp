#include "wormsim/fixture.hpp"

#include "wormsim/simulator.hpp"

namespace wsn::fixture {

Topology topology() {
  return build_topology(
      {
          {id('A'), {0, 650}},   {id('B'), {170, 570}}, {id('C'), {350, 650}},
          {id('D'), {250, 160}}, {id('E'), {250, 370}}, {id('F'), {440, 470}},
          {id('G'), {840, 300}}, {id('H'), {350, 790}}, {id('I'), {590, 460}},
          {id('J'), {650, 670}}, {id('K'), {830, 610}}, {id('L'), {890, 820}},
          {id('M'), {820, 980}}, {id('N'), {780, 420}}, {id('O'), {680, 870}},
      },
      kRange);
}

std::string letters(const NodeSet& nodes) {
  std::string out;
  for (NodeId n : nodes) out += letter(n);
  return out;
}

}  // namespace wsn::fixture

namespace wsn::fixture {

ScenarioConfig scenario(std::optional<AttackMode> mode) {
  ScenarioConfig cfg;
  Topology t = topology();
  for (NodeId n : t.nodes()) cfg.nodes.emplace_back(n, t.position(n));
  cfg.node_count = cfg.nodes.size();
  cfg.range = kRange;
  cfg.source = id('A');
  cfg.destination = id('O');
  cfg.wormholes = std::vector<WormholeLink>{};
  if (mode) cfg.wormholes->push_back(WormholeLink{id('C'), id('L'), *mode, 0.0});
  return cfg;
}

std::vector<CanonicalCase> canonical_cases() {
  return {
      {"clean", std::nullopt, 'I', VerdictKind::Valid},
      {"hidden-passive", AttackMode::HiddenPassive, 'B', VerdictKind::IllegalNoForwarder},
      {"exposed-passive", AttackMode::ExposedPassive, 'B', VerdictKind::IllegalKeyMismatch},
      {"hidden-active", AttackMode::HiddenActive, 'B', VerdictKind::IllegalTagConflict},
  };
}

CaseResult run_case(const CanonicalCase& c) {
  Scenario sc = instantiate(scenario(c.mode));
  Simulator sim(sc.topology, sc.keys, sc.links, sc.params);
  DiscoveryKey key{sc.source, sc.destination, sim.start_discovery(sc.source, sc.destination)};
  sim.run();
  CaseResult out;
  for (const CheckRecord& rec : sim.metrics().checks) {
    if (rec.node != id(c.checker)) continue;
    out.verdict = rec.verdict.kind;
    out.tag_sum = rec.verdict.tag_sum;
    out.responders = sim.acks_at(rec.node, key).responders();
  }
  return out;
}

}  // namespace wsn::fixture
