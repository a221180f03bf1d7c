#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "latinkit/latinkit.hpp"

using namespace latinkit;

TEST_CASE("canonicalize keeps an already sorted block list") {
  BlockDesign fano = fixtures::fano();
  BlockDesign again = canonicalize(fano);
  REQUIRE(again.blocks == fano.blocks);
  // this ordering is already canonical
  REQUIRE(again.blocks.front() == std::vector<int>{0, 1, 2});
  REQUIRE(again.blocks.back() == std::vector<int>{2, 4, 5});
}

TEST_CASE("canonicalize on an empty block list is the identity") {
  BlockDesign d;
  d.v = 1;
  BlockDesign c = canonicalize(d);
  REQUIRE(c.blocks.empty());
  REQUIRE(c.v == 1);
}

TEST_CASE("canonicalize sorts shuffled blocks back to the reference order") {
  BlockDesign shuffled = fixtures::design_from(
      7, {}, {{3, 5, 6}, {1, 6, 7}, {2, 4, 6}, {5, 4, 1}, {2, 7, 5}, {3, 2, 1}, {7, 4, 3}});
  REQUIRE(shuffled == fixtures::fano());
  REQUIRE(design_equal(shuffled, fixtures::fano()));
}

TEST_CASE("canonicalize is idempotent over a mixed corpus") {
  std::vector<BlockDesign> corpus = {fixtures::fano(), affine_plane(3),
                                     fixtures::k8_one_factorization()};
  for (const auto& d : corpus) REQUIRE(canonicalize(d) == canonicalize(canonicalize(d)));
  GroupedDesign g = fixtures::td(3, 3);
  REQUIRE(canonicalize(g) == canonicalize(canonicalize(g)));
}

TEST_CASE("canonicalize rejects malformed input") {
  BlockDesign bad;
  bad.v = 4;
  bad.blocks = {{0, 0, 1}};
  REQUIRE_THROWS_AS(canonicalize(bad), InputError);

  BlockDesign tiny;
  tiny.v = 3;
  tiny.blocks = {{2}};
  REQUIRE_THROWS_AS(canonicalize(tiny), InputError);

  GroupedDesign g;
  g.v = 4;
  g.groups = {{0, 1}, {2, 3}};
  g.group_holes = {{2}, {}};  // hole point outside its group
  REQUIRE_THROWS_AS(canonicalize(g), InputError);
}

TEST_CASE("resolution classes are renumbered by first appearance") {
  BlockDesign d;
  d.v = 4;
  d.blocks = {{2, 3}, {0, 1}, {0, 2}, {1, 3}};
  d.resolution = std::vector<int>{5, 5, 9, 9};
  BlockDesign c = canonicalize(d);
  REQUIRE(c.blocks == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  REQUIRE(*c.resolution == std::vector<int>{0, 1, 1, 0});
}

TEST_CASE("an incomplete square with empty hole is exactly a latin square") {
  // all four hole axioms degenerate to row/column uniqueness
  IncompleteSquare latin = fixtures::card_ranks();
  REQUIRE(verify_incomplete_latin(latin).pass());

  IncompleteSquare broken = latin;
  broken.set(0, 0, 1);  // duplicate 2 in row 1 and column 1
  Report rep = verify_incomplete_latin(broken);
  REQUIRE_FALSE(rep.pass());
  REQUIRE(rep.violations.size() >= 2);
}

TEST_CASE("square set shares order and hole") {
  SquareSet ss = mols_from_field(4);
  REQUIRE(ss.count() == 3);
  for (const auto& s : ss.squares) {
    REQUIRE(s.order == ss.order);
    REQUIRE(s.hole == ss.hole);
  }
  REQUIRE_THROWS_AS(SquareSet::of({}), InputError);
}

TEST_CASE("grouped design reports its type and hole total") {
  GroupedDesign td = fixtures::td(4, 3);
  REQUIRE(td.type() == std::vector<int>{3, 3, 3, 3});
  REQUIRE(td.total_hole_size() == 0);
}
