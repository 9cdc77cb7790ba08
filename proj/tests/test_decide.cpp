#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace wlem;

TEST_CASE("phi_k is in its own logic", "[decide]") {
  for (int k = 1; k <= 3; ++k) {
    const auto v = decide::check_membership(gen_phi(k), k, 6);
    REQUIRE_FALSE(decide::is_refuted(v));
    CHECK(std::get<decide::ValidUpToBound>(v).topwidth_bound == sperner::min_topwidth_for(k));
    CHECK(std::get<decide::ValidUpToBound>(v).max_size == 6);
  }
}

TEST_CASE("excluded middle is refuted on the two-chain", "[decide]") {
  const auto v = decide::check_membership(parse("p1 | ~p1"), 1, 2);
  REQUIRE(decide::is_refuted(v));
  const auto& cm = std::get<decide::Refuted>(v).countermodel;
  CHECK(cm.model.frame() == kripke::chain(2));
  CHECK(cm.model.valuation().at(1) == bit(1));
  CHECK(cm.world == 0);
  CHECK_FALSE(kripke::force(cm.model, cm.world, cm.formula));
}

TEST_CASE("sigma_n is in the logic of phi_k", "[decide]") {
  for (int k = 1; k <= 4; ++k) {
    const auto v = decide::check_membership(gen_sigma(sperner::min_topwidth_for(k)), k, 6);
    CHECK_FALSE(decide::is_refuted(v));
  }
}

TEST_CASE("refutations re-verify", "[decide]") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const Formula f = oracle::random_formula(rng, 4, 3);
    const auto v = decide::check_membership(f, 1 + trial % 3, 5);
    if (!decide::is_refuted(v)) continue;
    const auto& cm = std::get<decide::Refuted>(v).countermodel;
    CHECK_FALSE(oracle::truth(cm.model, f)[cm.world]);
    CHECK(kripke::topwidth(cm.model.frame()) <= sperner::min_topwidth_for(1 + trial % 3));
  }
}

TEST_CASE("equivalid logics", "[decide]") {
  CHECK(decide::logics_equivalid(gen_phi(4), gen_phi(5), 6).equivalid);
  CHECK(decide::logics_equivalid(gen_phi(1), gen_sigma(1), 6).equivalid);

  const auto split = decide::logics_equivalid(gen_phi(1), gen_phi(2), 4);
  REQUIRE_FALSE(split.equivalid);
  REQUIRE(split.witness);
  CHECK(kripke::topwidth(*split.witness) == 2);
  CHECK_FALSE(split.witness_validates_first);
  CHECK(kripke::holds_in_frame(*split.witness, gen_phi(2)).holds());
  CHECK_FALSE(kripke::holds_in_frame(*split.witness, gen_phi(1)).holds());
  CHECK(isomorphic(*split.witness, kripke::fan(2)));
  CHECK(split.countermodel->formula == gen_phi(1));
}

TEST_CASE("parallel decisions match sequential ones", "[decide]") {
  const kripke::SearchOptions seq{Budget::kDefaultCap, 1};
  const kripke::SearchOptions par{Budget::kDefaultCap, 4};
  const auto a = decide::logics_equivalid(gen_phi(2), gen_phi(3), 6, {}, seq);
  const auto b = decide::logics_equivalid(gen_phi(2), gen_phi(3), 6, {}, par);
  CHECK(a.equivalid == b.equivalid);
  CHECK(a.frames_checked == b.frames_checked);
  CHECK(a.witness == b.witness);
  const Formula linear = parse("(p1 -> p2) | (p2 -> p1)");
  const auto c = decide::check_membership(linear, 2, 6, seq);
  const auto d = decide::check_membership(linear, 2, 6, par);
  REQUIRE(decide::is_refuted(c));
  REQUIRE(decide::is_refuted(d));
  CHECK(std::get<decide::Refuted>(c).countermodel.model.valuation() ==
        std::get<decide::Refuted>(d).countermodel.model.valuation());
}

TEST_CASE("decision errors", "[decide][errors]") {
  CHECK_THROWS_AS(decide::check_membership(gen_phi(1), 0, 3), Error);
  CHECK_THROWS_AS(decide::check_membership(gen_phi(3), 3, 6, {10, 1}), ResourceLimitError);
}
