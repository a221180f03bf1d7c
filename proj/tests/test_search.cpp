#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "latinkit/latinkit.hpp"

using namespace latinkit;

TEST_CASE("the oracle finds two squares of order 6 with a common 2-hole") {
  auto res = search_square_set(6, 2, 2, {}, 100'000'000);
  REQUIRE(res.outcome == SearchOutcome::Found);
  REQUIRE(res.set);
  REQUIRE(verify_square_set(*res.set).pass());
  REQUIRE(res.set->order == 6);
  REQUIRE(res.set->hole == std::vector<int>{0, 1});
}

TEST_CASE("no pair of orthogonal squares of order 2 exists") {
  auto res = search_square_set(2, 0, 2);
  REQUIRE(res.outcome == SearchOutcome::ExhaustedNone);
}

TEST_CASE("holes above half the order are impossible") {
  // complete search agrees with the counting bound n >= (t+1)m
  for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 2}, {4, 3}, {5, 3}}) {
    auto res = search_square_set(n, m, 1);
    INFO("n=" << n << " m=" << m);
    REQUIRE(res.outcome == SearchOutcome::ExhaustedNone);
    REQUIRE_FALSE(imols_bound(1, n, m));
  }
}

TEST_CASE("a custom hole set is honored") {
  auto res = search_square_set(5, 2, 1, {1, 3});
  REQUIRE(res.outcome == SearchOutcome::Found);
  REQUIRE(res.set->hole == std::vector<int>{1, 3});
  REQUIRE(verify_square_set(*res.set).pass());
}

TEST_CASE("a tiny budget reports none-within-budget") {
  auto res = search_square_set(6, 2, 2, {}, 10);
  REQUIRE(res.outcome == SearchOutcome::NoneWithinBudget);
  REQUIRE(res.nodes == 10);
}

TEST_CASE("square search is deterministic node for node") {
  auto a = search_square_set(5, 1, 2);
  auto b = search_square_set(5, 1, 2);
  REQUIRE(a.outcome == SearchOutcome::Found);
  REQUIRE(a.nodes == b.nodes);
  REQUIRE(*a.set == *b.set);
}

TEST_CASE("the oracle finds a Fano plane") {
  for (int w : {0, 1}) {
    auto res = search_block_design(7, w, {3});
    REQUIRE(res.outcome == SearchOutcome::Found);
    REQUIRE(res.design->blocks.size() == 7);
    REQUIRE(verify_block_design(*res.design, alpha_beta({3})).pass());
  }
}

TEST_CASE("exhaustion matches the admissibility predicates") {
  auto res = search_block_design(6, 1, {3});
  REQUIRE(res.outcome == SearchOutcome::ExhaustedNone);
  REQUIRE_FALSE(pbd_admissible(6, alpha_beta({3})));
}

TEST_CASE("the oracle finds the (13;4) hole design") {
  auto res = search_block_design(13, 4, {4});
  REQUIRE(res.outcome == SearchOutcome::Found);
  REQUIRE(verify_block_design(*res.design, alpha_beta({4})).pass());
  REQUIRE(res.design->hole_size() == 4);
}

TEST_CASE("design search is deterministic node for node") {
  auto a = search_block_design(9, 0, {3});
  auto b = search_block_design(9, 0, {3});
  REQUIRE(a.outcome == SearchOutcome::Found);
  REQUIRE(a.nodes == b.nodes);
  REQUIRE(*a.design == *b.design);
}

TEST_CASE("found designs never contradict the admissibility predicates") {
  // oracle outputs pass the necessary conditions wherever they are defined
  auto fano = search_block_design(7, 0, {3});
  REQUIRE(pbd_admissible(fano.design->v, alpha_beta({3})));
  auto holed = search_block_design(13, 4, {4});
  REQUIRE(ipbd_admissible(holed.design->v, holed.design->hole_size(), alpha_beta({4})));
  REQUIRE(ipbd_inequality(holed.design->v, holed.design->hole_size(), alpha_beta({4})));
}

TEST_CASE("search input validation") {
  REQUIRE_THROWS_AS(search_square_set(0, 0, 1), InputError);
  REQUIRE_THROWS_AS(search_square_set(4, 5, 1), InputError);
  REQUIRE_THROWS_AS(search_square_set(4, 1, 0), InputError);
  REQUIRE_THROWS_AS(search_square_set(4, 2, 1, {0}), InputError);
  REQUIRE_THROWS_AS(search_block_design(0, 0, {3}), InputError);
  REQUIRE_THROWS_AS(search_block_design(5, 6, {3}), InputError);
}
