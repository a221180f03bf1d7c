// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Each criterion re-runs its whole pipeline from scratch and is held to a
// wall-clock limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "latinkit/latinkit.hpp"

using namespace latinkit;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, double limit_seconds,
               const std::function<void()>& body) {
  auto start = Clock::now();
  std::string error;
  try {
    body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  bool ok = error.empty() && elapsed < limit_seconds;
  if (!ok) ++failures;
  std::printf("criterion %2d: %s (%.2fs/%.0fs) %s%s\n", number, ok ? "PASS" : "FAIL", elapsed,
              limit_seconds, label.c_str(), error.empty() ? "" : ("  [" + error + "]").c_str());
  if (error.empty() && elapsed >= limit_seconds) std::printf("              over time limit\n");
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

BlockDesign fano() {
  BlockDesign d;
  d.v = 7;
  d.blocks = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  return d;
}

BlockDesign single_block(int v) {
  BlockDesign d;
  d.v = v;
  std::vector<int> all(v);
  for (int i = 0; i < v; ++i) all[i] = i;
  d.blocks = {all};
  return d;
}

GroupedDesign td(int k, int n) {
  SquareSet ss;
  ss.order = n;
  if (k > 2) {
    ss = mols_from_field(n);
    ss.squares.resize(static_cast<size_t>(k - 2));
  }
  return td_from_mols(ss);
}

// ---- the shared corpus used by criteria 10 and 11 --------------------------

struct Corpus {
  std::vector<SquareSet> sets;
  std::vector<BlockDesign> designs;
  std::vector<GroupedDesign> grouped;
};

Corpus build_corpus() {
  Corpus c;
  for (int q : {2, 3, 4, 5, 7, 8, 9}) c.sets.push_back(mols_from_field(q));
  for (int q : {3, 4, 5, 7, 8, 9, 11, 13}) {
    SquareSet ss = idempotent_mols(q);
    if (ss.count() > 0) c.sets.push_back(std::move(ss));
  }
  c.sets.push_back(glue_pbd(fano(), auto_templates({3}, 1), 1));
  BlockDesign ipbd134 = ipbd_from_resolvable(affine_plane(3));
  c.sets.push_back(glue_ipbd(ipbd134, auto_templates({4}, 2), 2));
  auto found = search_square_set(6, 2, 2, {}, 100'000'000);
  if (found.set) c.sets.push_back(*found.set);
  auto found51 = search_square_set(5, 1, 2);
  if (found51.set) c.sets.push_back(*found51.set);

  c.designs.push_back(fano());
  for (int q : {2, 3, 4, 5}) c.designs.push_back(affine_plane(q));
  c.designs.push_back(ipbd134);
  c.designs.push_back(fill_gdd(td(4, 3), 0, 1, [](int g) {
    BlockDesign f = single_block(g + 1);
    f.hole = {g};
    return f;
  }));
  c.designs.push_back(fill_hole(ipbd134, single_block(4)));
  c.designs.push_back(ipbd_from_resolvable([&] {
    // one-factorization of K8 by the circle method
    BlockDesign d;
    d.v = 8;
    d.resolution = std::vector<int>{};
    for (int cls = 0; cls < 7; ++cls) {
      d.blocks.push_back({7, cls});
      d.resolution->push_back(cls);
      for (int i = 1; i <= 3; ++i) {
        int a = (cls + i) % 7, b = (cls + 7 - i) % 7;
        d.blocks.push_back({std::min(a, b), std::max(a, b)});
        d.resolution->push_back(cls);
      }
    }
    return canonicalize(d);
  }()));
  auto oracle_fano = search_block_design(7, 0, {3});
  if (oracle_fano.design) c.designs.push_back(*oracle_fano.design);
  auto oracle_134 = search_block_design(13, 4, {4});
  if (oracle_134.design) c.designs.push_back(*oracle_134.design);
  c.designs.push_back(replace_blocks(single_block(7), [](int) { return fano(); }));

  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 3}, {4, 3}, {4, 4}, {3, 5}})
    c.grouped.push_back(td(k, n));
  GroupedDesign td33 = td(3, 3);
  c.grouped.push_back(
      wilson_expand(td33, std::vector<int>(9, 3), [&](const std::vector<int>&) { return td33; }));
  c.grouped.push_back(truncate_group(td(4, 3), 0, 1));
  c.grouped.push_back(truncate_group(td33, 0, 0));
  return c;
}

}  // namespace

int main() {
  // 1: the glued order-7 square, cell for cell
  criterion(1, "gluing the Fano plane reproduces the reference square bit-exactly", 1.0, [] {
    SquareSet glued = glue_pbd(fano(), auto_templates({3}, 1), 1);
    require(glued.count() == 1, "expected exactly one square");
    const int expect[7][7] = {{1, 3, 2, 5, 4, 7, 6}, {3, 2, 1, 6, 7, 4, 5},
                              {2, 1, 3, 7, 6, 5, 4}, {5, 6, 7, 4, 1, 2, 3},
                              {4, 7, 6, 1, 5, 3, 2}, {7, 4, 5, 2, 3, 6, 1},
                              {6, 5, 4, 3, 2, 1, 7}};
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        require(glued.squares[0].at(i, j) == expect[i][j] - 1,
                "cell mismatch at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  });

  // 2: q-2 idempotent squares for every desk-scale prime power
  criterion(2, "idempotent square counts and checks across prime powers 3..13", 5.0, [] {
    for (int q : {3, 4, 5, 7, 8, 9, 11, 13}) {
      SquareSet ss = idempotent_mols(q);
      require(ss.count() == q - 2, "expected q-2 squares for q=" + std::to_string(q));
      require(verify_square_set(ss).pass(), "set check failed for q=" + std::to_string(q));
      for (const auto& s : ss.squares)
        require(verify_idempotent(s).pass(), "diagonal check failed for q=" + std::to_string(q));
    }
  });

  // 3: affine plane -> tight hole design -> glued pair of squares
  criterion(3, "end-to-end pipeline to 2-IMOLS(13;4) through the affine plane", 5.0, [] {
    BlockDesign ag = affine_plane(3);
    require(verify_resolution(ag).pass(), "affine plane must be resolvable");
    BlockDesign ipbd = ipbd_from_resolvable(ag);
    BlockSizeSet K4 = alpha_beta({4});
    require(ipbd.v == 13 && ipbd.hole_size() == 4, "wrong hole design parameters");
    require(verify_block_design(ipbd, K4).pass(), "hole design fails verification");
    require(ipbd_inequality_tight(ipbd.v, ipbd.hole_size(), K4), "hole bound must be tight");
    require(verify_equality_case(ipbd, K4).pass(),
            "every block must have size 4 and meet the hole once");
    SquareSet imols = glue_ipbd(ipbd, auto_templates({4}, 2), 2);
    require(imols.count() == 2 && imols.order == 13 && imols.hole_size() == 4,
            "wrong glued parameters");
    require(verify_square_set(imols).pass(), "glued squares fail verification");
    require(imols_bound(2, 13, 4), "counting bound must hold");
  });

  // 4: fill all groups of a TD(4,3) but one, then fill the hole
  criterion(4, "filling a TD(4,3) and closing the hole to 13 blocks of size 4", 5.0, [] {
    BlockDesign ipbd = fill_gdd(td(4, 3), 0, 1, [](int g) {
      BlockDesign f = single_block(g + 1);
      f.hole = {g};
      return f;
    });
    BlockSizeSet K4 = alpha_beta({4});
    require(ipbd.v == 13 && ipbd.hole_size() == 4, "wrong filled parameters");
    require(verify_block_design(ipbd, K4).pass(), "filled design fails verification");
    BlockDesign pbd = fill_hole(ipbd, single_block(4));
    require(pbd.v == 13 && pbd.hole.empty(), "wrong closed parameters");
    require(pbd.blocks.size() == 13, "expected exactly 13 blocks");
    require(verify_block_design(pbd, K4).pass(), "closed design fails verification");
  });

  // 5: weighted expansion and the way back to a square
  criterion(5, "weight-3 expansion of TD(3,3) and recovery of an order-9 square", 10.0, [] {
    GroupedDesign td33 = td(3, 3);
    GroupedDesign big = wilson_expand(td33, std::vector<int>(9, 3),
                                      [&](const std::vector<int>&) { return td33; });
    require(big.v == 27 && big.type() == std::vector<int>{9, 9, 9}, "wrong expanded type");
    require(verify_grouped_design(big, alpha_beta({3})).pass(), "expansion fails verification");
    SquareSet back = mols_from_td(big);
    require(back.count() == 1 && back.order == 9, "expected one square of order 9");
    require(verify_square_set(back).pass(), "recovered square fails verification");
  });

  // 6: the block-size recipe arithmetic
  criterion(6, "recipe invariants: alpha/beta values and the 8(t+1)^2 ratio cap", 1.0, [] {
    BlockSizeSet K = alpha_beta({4, 8, 243});
    require(K.alpha == 1 && K.beta == 2, "expected alpha 1 and beta 2");
    for (long long t = 1; t <= 1000; ++t) {
      MolsPlan mp = mols_plan(t);
      BigInt cap = 8 * BigInt(t + 1) * (t + 1);
      require(mp.ratio <= cap, "ratio exceeds the cap at t=" + std::to_string(t));
      bool pow2 = ((t + 1) & t) == 0;
      require((mp.ratio == cap) == pow2,
              "equality must hold exactly at powers of two, t=" + std::to_string(t));
    }
  });

  // 7: difference decompositions on random admissible pairs
  criterion(7, "200 random admissible pairs decompose with admissible prefixes", 30.0, [] {
    BlockSizeSet K = alpha_beta({3, 4});
    std::mt19937_64 rng(20260810);
    int done = 0;
    while (done < 200) {
      BigInt w = 1 + static_cast<long long>(rng() % 200);
      BigInt d = static_cast<long long>(rng() % 401);
      if (!pair_admissible(w + d, w, K)) continue;
      ++done;
      Decomposition dec = decompose_difference({3, 4}, K, w + d, w);
      BigInt sum = 0;
      for (size_t i = 0; i < dec.coefficients.size(); ++i)
        sum += dec.coefficients[i] * (BigInt(dec.order[i]) - 1);
      require(sum == d, "coefficients do not sum to the difference");
      for (const auto& [vi, wi] : dec.intermediates)
        require(pair_admissible(vi, wi, K), "intermediate pair not admissible");
    }
  });

  // 8: congruence plans on random valid inputs
  criterion(8, "50 random congruence plans satisfy the key congruence and both checks", 30.0,
            [] {
    std::mt19937_64 rng(4257);
    std::vector<std::vector<long long>> Ks = {{4}, {5}, {3, 4}};
    int done = 0;
    while (done < 50) {
      BlockSizeSet K = alpha_beta(Ks[rng() % Ks.size()]);
      BigInt M = K.beta * static_cast<long long>(1 + rng() % 5);
      BigInt q;
      try {
        q = find_q(K, M, 2 + static_cast<long long>(rng() % 30));
      } catch (const ConstructError&) {
        continue;
      }
      BigInt aq = K.alpha * q;
      BigInt w1 = 1 + aq * static_cast<long long>(rng() % 50);
      BigInt v1 = w1 + aq * K.beta * static_cast<long long>(rng() % 50);
      if (!pair_admissible(v1, w1, K)) continue;
      ++done;
      CongruencePlan plan = table1_congruences(K, M, q, v1, w1);
      const BigInt qa1 = q * K.alpha - 1;
      for (const auto& [pt, col] : plan.prime_powers) {
        BigInt lhs = plan.u_residue * (plan.u_residue - 1) * qa1 * plan.h_residue;
        BigInt rhs = w1 * plan.u_residue * qa1 + w1 + plan.u_residue - v1;
        require(nt::floor_mod(lhs - rhs, pt) == 0,
                "key congruence fails mod " + pt.str());
      }
      require(nt::floor_mod(plan.u_residue - 1, K.alpha) == 0, "alpha check fails");
      require(nt::floor_mod((plan.g * plan.g - plan.h * plan.h) * plan.u * (plan.u - 1),
                            K.gamma) == 0,
              "gamma check fails");
    }
  });

  // 9: oracle refutations and the order-6 construction (the slow one)
  criterion(9, "oracle: counting-bound refutations and a found 2-IMOLS(6;2)", 600.0, [] {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 2}, {4, 3}, {5, 3}}) {
      auto res = search_square_set(n, m, 1);
      require(res.outcome == SearchOutcome::ExhaustedNone,
              "expected nonexistence for one square with n=" + std::to_string(n) +
                  ", m=" + std::to_string(m));
    }
    auto pair2 = search_square_set(2, 0, 2);
    require(pair2.outcome == SearchOutcome::ExhaustedNone,
            "expected nonexistence of two orthogonal squares of order 2");
    auto found = search_square_set(6, 2, 2, {}, 100'000'000);
    require(found.outcome == SearchOutcome::Found, "expected a 2-IMOLS(6;2) within budget");
    require(found.nodes <= 100'000'000, "node budget exceeded");
    require(verify_square_set(*found.set).pass(), "found set fails verification");
  });

  // 10: necessity of the admissibility predicates across the corpus
  criterion(10, "every materialized design passes its admissibility predicate", 60.0, [] {
    Corpus c = build_corpus();
    int checked = 0;
    for (const auto& ss : c.sets) {
      require(verify_square_set(ss).pass(), "corpus square set fails verification");
      if (ss.count() >= 1) {
        require(imols_bound(ss.count(), ss.order, ss.hole_size()),
                "counting bound fails on a verified set");
        ++checked;
      }
    }
    for (const auto& d : c.designs) {
      BlockSizeSet K = alpha_beta(observed_sizes(d.blocks));
      require(verify_block_design(d, K).pass(), "corpus design fails verification");
      if (d.hole_size() <= 1) {
        require(pbd_admissible(d.v, K), "plain admissibility fails on a verified design");
      } else {
        require(ipbd_admissible(d.v, d.hole_size(), K),
                "incomplete admissibility fails on a verified design");
        require(ipbd_inequality(d.v, d.hole_size(), K),
                "hole bound fails on a verified design");
      }
      ++checked;
    }
    for (const auto& g : c.grouped) {
      BlockSizeSet K = alpha_beta(observed_sizes(g.blocks));
      require(verify_grouped_design(g, K).pass(), "corpus grouped design fails verification");
      auto type = g.type();
      bool uniform = std::all_of(type.begin(), type.end(),
                                 [&](int x) { return x == type.front(); });
      bool no_holes = g.total_hole_size() == 0;
      if (uniform && no_holes && !g.blocks.empty()) {
        require(gdd_admissible(type.front(), static_cast<long long>(type.size()), K),
                "group admissibility fails on a verified design");
        ++checked;
      }
    }
    require(checked >= 30, "corpus unexpectedly small");
  });

  // 11: byte-stable round trips across both formats
  criterion(11, "a 100+ file corpus round-trips byte-exactly in both formats", 60.0, [] {
    Corpus c = build_corpus();
    int files = 0;
    for (const auto& ss : c.sets) {
      std::string text = emit_square_set(ss);
      require(emit_square_set(parse_square_set(text)) == text, "set file not byte-stable");
      ++files;
      for (const auto& sq : ss.squares) {
        std::string one = emit_square(sq);
        require(emit_square(parse_square(one)) == one, "square file not byte-stable");
        ++files;
      }
    }
    for (const auto& d : c.designs) {
      std::string text = emit_design(d);
      require(emit_design(parse_design(text)) == text, "design file not byte-stable");
      ++files;
    }
    for (const auto& g : c.grouped) {
      std::string text = emit_grouped(g);
      require(emit_grouped(parse_grouped(text)) == text, "grouped file not byte-stable");
      ++files;
    }
    require(files >= 100, "corpus holds only " + std::to_string(files) + " files");
  });

  if (failures == 0)
    std::printf("all criteria passed\n");
  else
    std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
