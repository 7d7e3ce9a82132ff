#include <doctest.h>

#include "support.hpp"
#include "wormsim/prevention.hpp"

using namespace wsn;

namespace {

struct Keys {
  MasterKey master{0x1234};
  NodeSet provisioned_set;
  NodeKey provisioned() const { return derive_key(master, provisioned_set); }
};

oracle::V to_oracle(VerdictKind k) {
  switch (k) {
    case VerdictKind::Valid: return oracle::V::Valid;
    case VerdictKind::IllegalNoForwarder: return oracle::V::NoForwarder;
    case VerdictKind::IllegalKeyMismatch: return oracle::V::KeyMismatch;
    case VerdictKind::IllegalTagConflict: return oracle::V::TagConflict;
    case VerdictKind::IllegalMultipleForwarders: return oracle::V::MultipleForwarders;
  }
  return oracle::V::Valid;
}

}  // namespace

TEST_CASE("clean check at I is valid") {
  Keys k{MasterKey{77}, testing::node_set({'C', 'E', 'G', 'K', 'O'})};
  AckSet acks;
  for (char c : {'C', 'E', 'G', 'K'}) acks.add(fixture::id(c), fixture::id('F'), 0);
  acks.add(fixture::id('O'), fixture::id('J'), 1);
  Verdict v = evaluate(acks, k.master, k.provisioned());
  CHECK(v.kind == VerdictKind::Valid);
  CHECK(v.tag_sum == 1);
}

TEST_CASE("verdict kinds from hand-built ack sets") {
  Keys k{MasterKey{9}, testing::node_set({'D', 'F', 'H'})};
  NodeId C = fixture::id('C'), E = fixture::id('E');

  SUBCASE("no forwarder") {
    AckSet a;
    for (char c : {'D', 'F', 'H'}) a.add(fixture::id(c), E, 0);
    CHECK(evaluate(a, k.master, k.provisioned()).kind == VerdictKind::IllegalNoForwarder);
  }
  SUBCASE("fake neighbour changes the key") {
    AckSet a;
    for (char c : {'D', 'F', 'H'}) a.add(fixture::id(c), E, 0);
    a.add(fixture::id('L'), C, 1);
    CHECK(evaluate(a, k.master, k.provisioned()).kind == VerdictKind::IllegalKeyMismatch);
  }
  SUBCASE("flipped tag on one relay") {
    AckSet a;
    a.add(fixture::id('F'), C, 1);
    a.add(fixture::id('F'), E, 0);
    a.add(fixture::id('D'), E, 0);
    a.add(fixture::id('H'), C, 0);
    Verdict v = evaluate(a, k.master, k.provisioned());
    CHECK(v.kind == VerdictKind::IllegalTagConflict);
    CHECK(a.conflicted(fixture::id('F')));
    CHECK_FALSE(a.tag(fixture::id('F')).has_value());
  }
  SUBCASE("two forwarders") {
    AckSet a;
    a.add(fixture::id('D'), E, 1);
    a.add(fixture::id('F'), E, 1);
    a.add(fixture::id('H'), C, 0);
    Verdict v = evaluate(a, k.master, k.provisioned());
    CHECK(v.kind == VerdictKind::IllegalMultipleForwarders);
    CHECK(v.tag_sum == 2);
  }
  SUBCASE("empty ack set") {
    CHECK(evaluate(AckSet{}, k.master, k.provisioned()).kind == VerdictKind::IllegalNoForwarder);
  }
}

TEST_CASE("tag conflict outranks a missing forwarder") {
  AckSet a;
  a.add(node(1), node(10), 0);
  a.add(node(1), node(11), 1);
  CHECK(evaluate(a, MasterKey{1}, NodeKey{0}).kind == VerdictKind::IllegalTagConflict);
}

TEST_CASE("duplicate identical acks collapse") {
  AckSet a, b;
  a.add(node(1), node(2), 1);
  a.add(node(1), node(2), 1);
  b.add(node(1), node(2), 1);
  CHECK(a == b);
}

TEST_CASE("single relay responders are reported") {
  AckSet a;
  a.add(node(1), node(10), 0);
  a.add(node(1), node(11), 0);
  a.add(node(2), node(10), 1);
  Verdict v = evaluate(a, MasterKey{5}, derive_key(MasterKey{5}, {node(1), node(2)}));
  CHECK(v.kind == VerdictKind::Valid);
  CHECK(v.single_relay_responders == NodeSet{node(2)});
}

TEST_CASE("evaluate matches the truth-table oracle exhaustively") {
  // Up to 6 responders, 2 relays. Each responder gets one of:
  // absent on a relay, tag 0, or tag 1 per relay (3x3 states, minus both absent).
  const NodeId relays[2] = {node(100), node(101)};
  std::size_t cases = 0;
  for (int n = 0; n <= 6; ++n) {
    int total = 1;
    for (int i = 0; i < n; ++i) total *= 8;
    for (int code = 0; code < total; ++code) {
      AckSet acks;
      std::vector<oracle::Ack> ref;
      int c = code;
      for (int r = 0; r < n; ++r) {
        int state = c % 8 + 1;  // 1..8, skip the all-absent 0
        c /= 8;
        int on_a = state % 3, on_b = state / 3;  // 0 absent, 1 tag 0, 2 tag 1
        for (int j = 0; j < 2; ++j) {
          int s = j == 0 ? on_a : on_b;
          if (s == 0) continue;
          acks.add(node(r + 1), relays[j], s - 1);
          ref.push_back({static_cast<oracle::Id>(r + 1), raw(relays[j]), s - 1});
        }
      }
      MasterKey m{0x5eed + static_cast<std::uint64_t>(code)};
      for (bool key_ok : {true, false}) {
        NodeKey kmu = key_ok ? derive_key(m, acks.responders()) : NodeKey{derive_key(m, acks.responders()).value ^ 1};
        Verdict v = evaluate(acks, m, kmu);
        CHECK(to_oracle(v.kind) == oracle::verdict(ref, key_ok));
        ++cases;
      }
    }
  }
  CHECK(cases > 500000);
}

TEST_CASE("collector window bounds") {
  ProbeAck ack{node(1), 0, node(2), node(3), {}};
  SUBCASE("ack at the deadline is accepted, after it is late") {
    AckCollector c(1.0, 0.5);
    CHECK(c.accept(ack, 1.5));
    CHECK_FALSE(c.accept(ack, 1.5000001));
    CHECK(c.received() == 1);
    CHECK(c.late() == 1);
    CHECK(c.collection_time() == doctest::Approx(0.5));
  }
  SUBCASE("zero window only takes same-instant acks") {
    AckCollector c(2.0, 0.0);
    CHECK(c.accept(ack, 2.0));
    CHECK_FALSE(c.accept(ack, 2.01));
  }
  SUBCASE("closed collector rejects") {
    AckCollector c(0.0, 1.0);
    c.close();
    CHECK_FALSE(c.accept(ack, 0.1));
    CHECK(c.collection_time() == 0.0);
  }
}

TEST_CASE("verdict names round trip") {
  for (auto k : {VerdictKind::Valid, VerdictKind::IllegalNoForwarder, VerdictKind::IllegalKeyMismatch,
                 VerdictKind::IllegalTagConflict, VerdictKind::IllegalMultipleForwarders}) {
    CHECK(parse_verdict(to_string(k)) == k);
  }
  CHECK_FALSE(parse_verdict("Bogus").has_value());
}
