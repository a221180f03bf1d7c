#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "latinkit/latinkit.hpp"

using namespace latinkit;

namespace {

// exhaustive field axiom check; cubic in q, so keep q modest
void check_field_axioms(const FieldTable& F) {
  const int q = F.order();
  REQUIRE(F.add(0, 0) == 0);
  REQUIRE(F.mul(1, 1) == 1);
  for (int a = 0; a < q; ++a) {
    REQUIRE(F.add(a, 0) == a);
    REQUIRE(F.mul(a, 1) == a);
    REQUIRE(F.add(a, F.neg(a)) == 0);
    if (a != 0) REQUIRE(F.mul(a, F.inv(a)) == 1);
    for (int b = 0; b < q; ++b) {
      REQUIRE(F.add(a, b) == F.add(b, a));
      REQUIRE(F.mul(a, b) == F.mul(b, a));
      for (int c = 0; c < q; ++c) {
        REQUIRE(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
        REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
        REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      }
    }
  }
}

}  // namespace

TEST_CASE("GF(2) addition is xor") {
  FieldTable F(2);
  REQUIRE(F.add(0, 1) == 1);
  REQUIRE(F.add(1, 1) == 0);
  check_field_axioms(F);
}

TEST_CASE("GF(4) has characteristic 2") {
  FieldTable F(4);
  for (int x = 0; x < 4; ++x) REQUIRE(F.add(x, x) == 0);
  check_field_axioms(F);
}

TEST_CASE("composite orders are rejected with their factorization") {
  try {
    field(6);
    FAIL("field(6) must throw");
  } catch (const InputError& e) {
    std::string msg = e.what();
    REQUIRE(msg.find("2 * 3") != std::string::npos);
  }
  REQUIRE_THROWS_AS(field(12), InputError);
  REQUIRE_THROWS_AS(field(1), InputError);
}

TEST_CASE("field axioms hold exhaustively up to order 64") {
  for (int q : {3, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64}) {
    FieldTable F(q);
    check_field_axioms(F);
  }
}

TEST_CASE("larger extension fields still multiply correctly") {
  FieldTable F(128);
  REQUIRE(F.order() == 128);
  for (int a = 1; a < 128; a += 13) REQUIRE(F.mul(a, F.inv(a)) == 1);
  FieldTable big(1 << 16);
  REQUIRE(big.mul(big.generator(), big.inv(big.generator())) == 1);
}

TEST_CASE("the order-2 field yields the single 2x2 square") {
  SquareSet ss = mols_from_field(2);
  REQUIRE(ss.count() == 1);
  REQUIRE(ss.squares[0] == fixtures::square_from(2, {}, {{1, 2}, {2, 1}}));
}

TEST_CASE("prime powers yield complete sets of MOLS") {
  for (int q : {4, 9}) {
    SquareSet ss = mols_from_field(q);
    REQUIRE(ss.count() == q - 1);
    REQUIRE(verify_square_set(ss).pass());
  }
}

TEST_CASE("idempotent squares from the field, order 3") {
  SquareSet ss = idempotent_mols(3);
  REQUIRE(ss.count() == 1);
  // the template square used by the order-7 gluing example
  REQUIRE(ss.squares[0] ==
          fixtures::square_from(3, {}, {{1, 3, 2}, {3, 2, 1}, {2, 1, 3}}));
  REQUIRE(verify_idempotent(ss.squares[0]).pass());
}

TEST_CASE("two idempotent MOLS of order 4") {
  SquareSet ss = idempotent_mols(4);
  REQUIRE(ss.count() == 2);
  REQUIRE(verify_square_set(ss).pass());
  for (const auto& s : ss.squares) REQUIRE(verify_idempotent(s).pass());
}

TEST_CASE("idempotent count is q-2 for every desk-scale prime power") {
  for (int q : {3, 4, 5, 7, 8, 9, 11, 13}) {
    SquareSet ss = idempotent_mols(q);
    REQUIRE(ss.count() == q - 2);
    REQUIRE(verify_square_set(ss).pass());
    for (const auto& s : ss.squares) REQUIRE(verify_idempotent(s).pass());
  }
}

TEST_CASE("idempotent squares of order 2 come back empty") {
  SquareSet ss = idempotent_mols(2);
  REQUIRE(ss.count() == 0);
  REQUIRE(ss.order == 2);
}

TEST_CASE("one square of order 3 expands to a transversal design on 9 blocks") {
  SquareSet one = SquareSet::of({mols_from_field(3).squares[0]});
  GroupedDesign td = td_from_mols(one);
  REQUIRE(td.group_count() == 3);
  REQUIRE(td.blocks.size() == 9);
  REQUIRE(verify_grouped_design(td, alpha_beta({3})).pass());
}

TEST_CASE("zero squares of order 1 expand to a single block") {
  SquareSet none;
  none.order = 1;
  GroupedDesign td = td_from_mols(none);
  REQUIRE(td.group_count() == 2);
  REQUIRE(td.blocks.size() == 1);
  REQUIRE(verify_grouped_design(td, alpha_beta({2})).pass());
}

TEST_CASE("two MOLS of order 4 expand to sixteen transversal blocks") {
  SquareSet two = mols_from_field(4);
  two.squares.resize(2);
  GroupedDesign td = td_from_mols(two);
  REQUIRE(td.blocks.size() == 16);
  REQUIRE(verify_grouped_design(td, alpha_beta({4})).pass());
}

TEST_CASE("squares and transversal designs are mutually inverse") {
  for (int q : {3, 4, 5}) {
    SquareSet ss = mols_from_field(q);
    GroupedDesign td = td_from_mols(ss);
    REQUIRE(mols_from_td(td) == ss);
    REQUIRE(design_equal(td_from_mols(mols_from_td(td)), td));
  }
}

TEST_CASE("squares with holes cannot seed a transversal design") {
  REQUIRE_THROWS_AS(td_from_mols(SquareSet::of({fixtures::hole5_example()})), InputError);
}

TEST_CASE("mols_from_td rejects non-uniform and non-transversal input") {
  GroupedDesign bad;
  bad.v = 5;
  bad.groups = {{0, 1}, {2, 3, 4}};
  bad.group_holes = {{}, {}};
  REQUIRE_THROWS_AS(mols_from_td(bad), InputError);

  GroupedDesign td = fixtures::td(3, 3);
  td.blocks.pop_back();
  REQUIRE_THROWS_AS(mols_from_td(td), InputError);
}

TEST_CASE("affine planes are resolvable designs") {
  for (int q : {2, 3, 4, 5}) {
    BlockDesign ag = affine_plane(q);
    REQUIRE(ag.v == q * q);
    REQUIRE(static_cast<int>(ag.blocks.size()) == q * (q + 1));
    REQUIRE(ag.class_count() == q + 1);
    REQUIRE(verify_resolution(ag).pass());
    REQUIRE(verify_block_design(ag, alpha_beta({q})).pass());
  }
}

TEST_CASE("pinned moduli agree with the canonical search rule") {
  for (long long q : {4LL, 8LL, 9LL, 27LL, 64LL, 243LL, 1024LL}) {
    auto pp = gf::prime_power_of(q);
    gf::Poly pinned = gf::canonical_modulus(q, static_cast<int>(pp.p), pp.e);
    // re-derive by raw ascending search
    long long enc = -1;
    for (long long n = 0; n < q && enc < 0; ++n) {
      gf::Poly f(pp.e + 1, 0);
      long long rem = n;
      for (int i = 0; i < pp.e; ++i) {
        f[i] = static_cast<int>(rem % pp.p);
        rem /= pp.p;
      }
      f[pp.e] = 1;
      if (gf::is_irreducible(f, static_cast<int>(pp.p))) enc = n;
    }
    long long pinned_enc = 0, mul = 1;
    for (int i = 0; i < pp.e; ++i) {
      pinned_enc += pinned[i] * mul;
      mul *= pp.p;
    }
    REQUIRE(pinned_enc == enc);
  }
}
