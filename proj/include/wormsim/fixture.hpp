#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wormsim/prevention.hpp"
#include "wormsim/scenario.hpp"
#include "wormsim/topology.hpp"

namespace wsn::fixture {

// Hand-placed 15-node scenario, nodes A..O mapped to ids 1..15.
//
//   A-B, B-C, B-E, C-F, C-H, E-D, E-F, F-I, I-J, I-N,
//   J-O, J-K, N-G, N-K, L-O, L-M, L-K, M-O
//
// two_hop(I) = {C,E,G,K,O}, two_hop(B) = {D,F,H}. The clean A->O route is
// A-B-C-F-I-J-O (C beats E at F on the predecessor tie-break). C and L are
// 5 hops apart and serve as the wormhole endpoints.

inline constexpr double kRange = 250.0;

constexpr NodeId id(char letter) noexcept { return node(static_cast<std::uint32_t>(letter - 'A' + 1)); }
constexpr char letter(NodeId n) noexcept { return static_cast<char>('A' + raw(n) - 1); }

Topology topology();

/// Letters of a node set, e.g. "CEGKO".
std::string letters(const NodeSet& nodes);

/// A->O discovery on the fixture, optionally with a C-L wormhole in `mode`.
ScenarioConfig scenario(std::optional<AttackMode> mode);

struct CanonicalCase {
  std::string name;
  std::optional<AttackMode> mode;
  char checker;
  VerdictKind expected;
};

/// Clean check at I, then B's check under each wormhole mode.
std::vector<CanonicalCase> canonical_cases();

struct CaseResult {
  std::optional<VerdictKind> verdict;  // unset if the checker never evaluated
  NodeSet responders;
  int tag_sum = 0;
};

CaseResult run_case(const CanonicalCase& c);

}  // namespace wsn::fixture
