#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace wlem;

TEST_CASE("closure of covering pairs", "[poset]") {
  const Poset p = Poset::from_pairs(4, {{0, 1}, {1, 2}, {0, 3}});
  CHECK(p.leq(0, 2));
  CHECK(p.leq(1, 1));
  CHECK_FALSE(p.leq(3, 2));
  CHECK(p.up(0) == all_of(4));
  CHECK(p.down(2) == (bit(0) | bit(1) | bit(2)));
  CHECK(p.maximal() == (bit(2) | bit(3)));
  CHECK(p.minimal() == bit(0));
  CHECK(p.covers() == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}});
}

TEST_CASE("invalid orders are rejected", "[poset][errors]") {
  try {
    Poset::from_pairs(2, {{0, 1}, {1, 0}});
    FAIL("cycle accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_partial_order);
  }
  CHECK_THROWS_AS(Poset::from_pairs(0, {}), Error);
  CHECK_THROWS_AS(Poset::from_pairs(65, {}), Error);
  CHECK_THROWS_AS(Poset::from_pairs(2, {{0, 2}}), Error);
  CHECK_THROWS_AS(Poset::from_up_sets({bit(0) | bit(1), bit(1) | bit(2), bit(2)}), Error);
}

TEST_CASE("up-sets are exactly the up-closed subsets", "[poset][property]") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const kripke::Frame fr = oracle::random_frame(rng, 1 + trial % 7);
    CHECK(fr.order().all_up_sets() == oracle::up_sets(fr));
    for (WorldSet s : fr.order().all_up_sets()) CHECK(fr.order().is_up_set(s));
  }
}

TEST_CASE("disjoint_from is the largest up-set missing S", "[poset][property]") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const kripke::Frame fr = oracle::random_frame(rng, 1 + trial % 6);
    const Poset& p = fr.order();
    for (WorldSet s = 0; s <= p.all(); ++s) {
      WorldSet expect = 0;
      for (WorldSet u : oracle::up_sets(fr))
        if ((u & s) == 0) expect |= u;
      CHECK(p.disjoint_from(s) == expect);
    }
  }
}

TEST_CASE("dual reverses the order", "[poset]") {
  const Poset p = Poset::from_pairs(3, {{0, 1}, {0, 2}});
  const Poset d = p.dual();
  CHECK(d.leq(1, 0));
  CHECK_FALSE(d.leq(0, 1));
  CHECK(d.dual() == p);
  CHECK(p.all_down_sets() == std::vector<WorldSet>{0, 1, 3, 5, 7});
}
