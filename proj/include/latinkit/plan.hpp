#pragma once

// Number-theoretic planning: difference decompositions, congruence solving
// along prime powers, and parameter plans for squares with large holes.
// Plans are certificates: a node is materialized only when its design is
// actually constructed and verified at desk scale, never on the strength
// of an asymptotic existence statement.

#include <boost/rational.hpp>

#include "latinkit/admissible.hpp"
#include "latinkit/compose.hpp"
#include "latinkit/core.hpp"
#include "latinkit/galois.hpp"
#include "latinkit/search.hpp"
#include "latinkit/verify.hpp"

namespace latinkit {

using Rational = boost::rational<BigInt>;

namespace nt {

inline BigInt floor_mod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

// g = gcd(a,b) with a*x + b*y = g
inline BigInt egcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  BigInt x1, y1;
  BigInt g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) { return detail::big_gcd(a, b); }

inline BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  BigInt x, y;
  BigInt g = egcd(floor_mod(a, m), m, x, y);
  if (g != 1) throw ConstructError("no inverse of " + a.str() + " modulo " + m.str());
  return floor_mod(x, m);
}

// residue system with pairwise coprime moduli
inline BigInt crt(const std::vector<std::pair<BigInt, BigInt>>& congruences, BigInt& modulus) {
  BigInt r = 0, m = 1;
  for (const auto& [ri, mi] : congruences) {
    BigInt inv = mod_inverse(m, mi);
    BigInt t = floor_mod((ri - r) * inv, mi);
    r += m * t;
    m *= mi;
  }
  modulus = m;
  return floor_mod(r, m);
}

// trial division; remainders above the bound's square are rejected
inline std::vector<std::pair<BigInt, int>> factorize(BigInt n, long long bound = 1'000'000) {
  if (n < 1) throw InputError("factorization needs n >= 1");
  std::vector<std::pair<BigInt, int>> fs;
  for (long long d = 2; d <= bound && BigInt(d) * d <= n; ++d)
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      fs.emplace_back(BigInt(d), e);
    }
  if (n > 1) {
    if (n > BigInt(bound) * bound)
      throw ConstructError("factorization cap exceeded at remainder " + n.str());
    fs.emplace_back(n, 1);  // below bound^2 with no factor <= bound: prime
  }
  return fs;
}

}  // namespace nt

/// A difference decomposition v - w = sum c_k (k-1) over an ordered K0,
/// with every prefix parameter pair admissible.
struct Decomposition {
  std::vector<long long> order;                       // K0 in the order used
  std::vector<BigInt> coefficients;                   // c_k, aligned with order
  std::vector<std::pair<BigInt, BigInt>> intermediates;  // (v_i; w_i) prefix pairs
};

namespace detail {

// Chooses the coefficient of k_l per the inductive recipe: among solutions
// of c = a*x + b*y, pick y in the residue class 1 - 2c - 2w mod beta',
// where beta' strips from beta the primes shared with a.  That class makes
// (a*x + w; w) admissible automatically.
inline bool decompose_recipe(const std::vector<long long>& order,
                             const std::vector<BigInt>& prefix_gcd, const BlockSizeSet& K,
                             const BigInt& w, size_t level, const BigInt& c,
                             std::vector<BigInt>& coeffs) {
  if (level == 0) {
    BigInt b = BigInt(order[0]) - 1;
    if (c % b != 0) return false;
    coeffs[0] = c / b;
    return true;
  }
  const BigInt a = prefix_gcd[level - 1];
  const BigInt b = BigInt(order[level]) - 1;
  BigInt x0, y0;
  BigInt g = nt::egcd(a, b, x0, y0);
  if (c % g != 0) return false;
  BigInt scale = c / g;
  BigInt y_part = y0 * scale;           // particular y
  BigInt a_step = a / g;                // y varies mod a/g
  BigInt shared = nt::gcd(a, K.beta);
  BigInt beta_p = K.beta / shared;
  // y == y_part (mod a_step) and y == 1 - 2c - 2w (mod beta_p); the two
  // moduli are coprime
  BigInt modulus;
  BigInt y = nt::crt({{nt::floor_mod(y_part, a_step), a_step},
                      {nt::floor_mod(1 - 2 * c - 2 * w, beta_p), beta_p}},
                     modulus);
  if (b * y > c) return false;  // representative overshoots at desk scale
  BigInt rest = c - b * y;
  BigInt x = rest / a;
  if (x < 0) return false;
  if (!pair_admissible(rest + w, w, K)) return false;
  coeffs[level] = y;
  return decompose_recipe(order, prefix_gcd, K, w, level - 1, rest, coeffs);
}

inline bool decompose_exhaustive(const std::vector<long long>& order, const BlockSizeSet& K,
                                 const BigInt& w, size_t level, const BigInt& remaining,
                                 std::vector<BigInt>& coeffs, long long& budget) {
  // fills coefficients from the back so that prefix sums can be checked on
  // the way down
  if (level == 0) {
    BigInt b = BigInt(order[0]) - 1;
    if (remaining % b != 0) return false;
    if (--budget < 0) return false;
    coeffs[0] = remaining / b;
    return true;
  }
  BigInt b = BigInt(order[level]) - 1;
  for (BigInt y = 0; b * y <= remaining; ++y) {
    if (--budget < 0) return false;
    BigInt rest = remaining - b * y;
    if (!pair_admissible(rest + w, w, K)) continue;
    coeffs[level] = y;
    if (decompose_exhaustive(order, K, w, level - 1, rest, coeffs, budget)) return true;
    if (budget < 0) return false;
  }
  return false;
}

}  // namespace detail

/// Writes v - w as sum over K0 of c_k (k-1) such that every prefix pair
/// (sum_{j<=i} c_j (k_j - 1) + w ; sum_{j<i} c_j (k_j - 1) + w) is
/// admissible for K.  Follows the congruence recipe, falling back to a
/// bounded exhaustive search when the recipe's representative overshoots
/// small differences.  Failure to decompose is a ConstructError, distinct
/// from invalid input.
inline Decomposition decompose_difference(const std::vector<long long>& K0,
                                          const BlockSizeSet& K, const BigInt& v,
                                          const BigInt& w) {
  if (K0.empty()) throw InputError("K0 must be nonempty");
  BlockSizeSet K0set = alpha_beta(K0);
  if (K0set.alpha != K.alpha) throw InputError("K0 must have the same alpha as K");
  if (v < w) throw InputError("need v >= w");
  if (!pair_admissible(v, w, K)) throw InputError("(v;w) is not admissible for K");
  const BigInt diff = v - w;
  if (diff % K0set.alpha != 0)
    throw InputError("v - w must be divisible by alpha(K0)");

  std::vector<BigInt> prefix_gcd(K0.size());
  BigInt g = 0;
  for (size_t i = 0; i < K0.size(); ++i) {
    g = nt::gcd(g, BigInt(K0[i]) - 1);
    prefix_gcd[i] = g;
  }
  if (diff % prefix_gcd.back() != 0)
    throw ConstructError("v - w is not a multiple of gcd{k-1 : k in K0}");

  std::vector<BigInt> coeffs(K0.size(), BigInt(0));
  bool ok = detail::decompose_recipe(K0, prefix_gcd, K, w, K0.size() - 1, diff, coeffs);
  if (!ok) {
    long long budget = 1'000'000;
    std::fill(coeffs.begin(), coeffs.end(), BigInt(0));
    ok = detail::decompose_exhaustive(K0, K, w, K0.size() - 1, diff, coeffs, budget);
    if (!ok)
      throw ConstructError("no admissible decomposition found at this scale for v=" + v.str() +
                           ", w=" + w.str());
  }

  Decomposition out;
  out.order = K0;
  out.coefficients = coeffs;
  BigInt prev = w;
  BigInt sum = w;
  for (size_t i = 0; i < K0.size(); ++i) {
    sum += coeffs[i] * (BigInt(K0[i]) - 1);
    if (!pair_admissible(sum, prev, K))
      throw ConstructError("internal: intermediate pair not admissible");
    out.intermediates.emplace_back(sum, prev);
    prev = sum;
  }
  if (sum != v) throw ConstructError("internal: decomposition does not sum to v - w");
  return out;
}

/// Residues (u, h) modulo Mq solving the key congruence
///   u(u-1)(q*alpha - 1) h  ==  w1*u*(q*alpha - 1) + w1 + u - v1
/// prime power by prime power, with the derived quantities
///   y = w1 - h(u-1),  x = y*q*alpha + 1,  g = h + x - y
/// computed from chosen representatives.
struct CongruencePlan {
  BigInt modulus;          // Mq
  BigInt u_residue, h_residue;
  BigInt u, h;             // representatives (u >= 2; h smallest nonnegative)
  BigInt y, x, g;
  bool degenerate = false;     // v1 == w1, or u(u-1) vanishes mod Mq
  bool hole_bound_ok = false;  // y >= h for the chosen representatives
  std::vector<std::pair<BigInt, bool>> prime_powers;  // (p^t, used inverse column)
};

/// Solves the congruence above for each prime power exactly dividing Mq,
/// picking the column by whether p divides q*alpha - 1, and combines the
/// residues by the Chinese remainder theorem.  The postconditions (the
/// congruence itself, alpha | u-1, and gamma | (g^2-h^2)u(u-1)) are
/// re-verified before returning.
inline CongruencePlan table1_congruences(const BlockSizeSet& K, const BigInt& M,
                                         const BigInt& q, const BigInt& v1, const BigInt& w1) {
  if (M < 1 || M % K.beta != 0) throw InputError("M must be a positive multiple of beta");
  if (q < 1) throw InputError("q must be >= 1");
  if (nt::gcd(q, M) != 1) throw InputError("q must be coprime with M");
  const BigInt qa = q * K.alpha;
  if (K.gamma != 0 && nt::floor_mod(qa + 1, K.gamma) != 0)
    throw InputError("q*alpha + 1 must be divisible by gamma");
  if (nt::floor_mod(v1 - 1, q) != 0 || nt::floor_mod(w1 - 1, q) != 0)
    throw InputError("v1 and w1 must be congruent to 1 mod q");
  if (!pair_admissible(v1, w1, K)) throw InputError("(v1;w1) is not admissible for K");

  const BigInt qa1 = qa - 1;
  if (nt::floor_mod(v1 - 1, qa) != 0)
    throw ConstructError("internal: q*alpha does not divide v1 - 1");
  const BigInt h_whole = (v1 - 1) / qa - v1;  // the exact value of -((qa-1)v1 + 1)/qa

  CongruencePlan plan;
  const BigInt Mq = M * q;
  std::vector<std::pair<BigInt, BigInt>> u_parts, h_parts;
  for (const auto& [p, e] : nt::factorize(Mq)) {
    BigInt pt = 1;
    for (int i = 0; i < e; ++i) pt *= p;
    BigInt u_pt, h_pt;
    bool inverse_column = qa1 % p != 0;
    if (inverse_column) {
      u_pt = nt::floor_mod(-nt::mod_inverse(qa1, pt), pt);
      h_pt = nt::floor_mod(h_whole, pt);
    } else {
      BigInt denom = nt::floor_mod(qa1 * w1 + 1, pt);
      u_pt = nt::floor_mod((v1 - w1) * nt::mod_inverse(denom, pt), pt);
      h_pt = 0;
    }
    u_parts.emplace_back(u_pt, pt);
    h_parts.emplace_back(h_pt, pt);
    plan.prime_powers.emplace_back(pt, inverse_column);
  }
  BigInt mod_check;
  plan.u_residue = nt::crt(u_parts, mod_check);
  plan.h_residue = nt::crt(h_parts, mod_check);
  plan.modulus = Mq;
  if (mod_check != Mq) throw ConstructError("internal: moduli do not multiply to Mq");

  // postcondition checks, prime power by prime power
  for (const auto& [pt, col] : plan.prime_powers) {
    BigInt lhs = plan.u_residue * (plan.u_residue - 1) * qa1 * plan.h_residue;
    BigInt rhs = w1 * plan.u_residue * qa1 + w1 + plan.u_residue - v1;
    if (nt::floor_mod(lhs - rhs, pt) != 0)
      throw ConstructError("internal: key congruence fails mod " + pt.str());
  }
  if (K.alpha != 0 && nt::floor_mod(plan.u_residue - 1, K.alpha) != 0)
    throw ConstructError("internal: u - 1 is not divisible by alpha");

  plan.u = plan.u_residue < 2 ? plan.u_residue + Mq : plan.u_residue;
  plan.h = plan.h_residue;
  plan.y = w1 - plan.h * (plan.u - 1);
  plan.x = plan.y * qa + 1;
  plan.g = plan.h + plan.x - plan.y;
  plan.degenerate = (v1 == w1) || plan.u_residue == 0 || plan.u_residue == 1;
  plan.hole_bound_ok = plan.y >= plan.h;

  if (K.gamma != 0) {
    BigInt check = (plan.g * plan.g - plan.h * plan.h) * plan.u * (plan.u - 1);
    if (nt::floor_mod(check, K.gamma) != 0)
      throw ConstructError("internal: gamma divisibility check fails");
  }
  return plan;
}

/// Smallest q at or above `floor` with gcd(q, M) = 1, gamma | q*alpha + 1,
/// and q*alpha + 1 admissible as a design order.
inline BigInt find_q(const BlockSizeSet& K, const BigInt& M, const BigInt& floor = 2,
                     long long cap = 1'000'000) {
  if (M < 1 || M % K.beta != 0) throw InputError("M must be a positive multiple of beta");
  BigInt q = floor < 1 ? BigInt(1) : floor;
  for (long long steps = 0; steps < cap; ++steps, ++q) {
    if (nt::gcd(q, M) != 1) continue;
    BigInt order = q * K.alpha + 1;
    if (K.gamma != 0 && nt::floor_mod(order, K.gamma) != 0) continue;
    if (!pbd_admissible(order, K)) continue;
    return q;
  }
  throw ConstructError("no suitable q found below search cap");
}

/// Ratio bookkeeping for the recursive hole-growing construction with a
/// single block size k: the weight set R = {k-1, k^2-1, r}, the removal
/// count estimate c, the largest hole t_max reachable by the arithmetic
/// progression, and the resulting point/hole ratio bound.
struct RecurRatio {
  long long k = 0;
  BigInt m, n;
  BigInt r;
  std::vector<BigInt> R;
  Rational c;
  BigInt t_max;
  Rational ratio_bound;
  Rational gap;             // ratio_bound - (k-1), the O(1/m) excess
  bool c_bound_holds = false;  // c < n(k-2)/(m-1)
};

inline RecurRatio recur_ratio_params(long long k, const BigInt& m, const BigInt& n) {
  if (k < 3) throw InputError("need k >= 3");
  if (n < 1) throw InputError("need n >= 1");
  if (nt::floor_mod(m + 1, k) != 0) throw InputError("m must be -1 mod k");
  if (k > 2 && nt::floor_mod(m - 1, k - 2) != 0) throw InputError("m must be 1 mod k-2");
  if ((k - 1) * (m - 1) % (k - 2) != 0)
    throw InputError("k-2 must divide (k-1)(m-1)");
  if (m <= k - 1) throw InputError("m too small for a positive hole range");

  RecurRatio out;
  out.k = k;
  out.m = m;
  out.n = n;
  out.r = (k - 1) * (m - 1) / (k - 2);
  out.R = {BigInt(k - 1), BigInt(k) * k - 1, out.r};
  std::sort(out.R.begin(), out.R.end());
  out.R.erase(std::unique(out.R.begin(), out.R.end()), out.R.end());
  out.c = Rational(m - 1, BigInt(k) * (k - 2)) - Rational(BigInt(k) + 1, BigInt(k));
  out.t_max = (k - 1) * n * ((m - 1) / (k - 2) - 1);
  if (out.t_max <= 0) throw InputError("m too small for a positive hole range");
  out.ratio_bound = Rational((k - 1) * n * (m + 1), out.t_max) + 1;
  out.gap = out.ratio_bound - Rational(BigInt(k - 1));
  if (out.gap != Rational(BigInt(k) * (k - 2), m - k + 1))
    throw ConstructError("internal: ratio gap identity fails");
  out.c_bound_holds = out.c < Rational(n * (k - 2), m - 1);
  return out;
}

/// Block-size recipe for building t-IMOLS with a large hole: the smallest
/// f with 2^f > t+1, the pair K0 = {2^f, 2^(f+1)}, K = K0 + {3^(2f+1)},
/// and the guaranteed ratio n/m = 2^(2f+1).
struct MolsPlan {
  long long t = 0;
  int f = 0;
  std::vector<long long> K0;
  std::vector<long long> K;
  BigInt ratio;      // 2^(2f+1)
  bool tight = false;  // ratio == 8(t+1)^2 exactly (t+1 a power of two)
};

inline MolsPlan mols_plan(long long t) {
  if (t < 1) throw InputError("need t >= 1");
  if (t > 131'070) throw InputError("t capped at 131070");
  MolsPlan out;
  out.t = t;
  int f = 1;
  while ((1LL << f) <= t + 1) ++f;
  out.f = f;
  long long two_f = 1LL << f;
  long long three_pow = 1;
  for (int i = 0; i < 2 * f + 1; ++i) three_pow *= 3;
  out.K0 = {two_f, 2 * two_f};
  out.K = {two_f, 2 * two_f, three_pow};
  out.ratio = BigInt(1) << (2 * f + 1);

  BlockSizeSet Kset = alpha_beta(out.K);
  if (Kset.alpha != 1 || Kset.beta != 2)
    throw ConstructError("internal: expected alpha = 1 and beta = 2");
  BigInt cap = 8 * BigInt(t + 1) * (t + 1);
  if (out.ratio > cap) throw ConstructError("internal: ratio exceeds 8(t+1)^2");
  out.tight = (out.ratio == cap);
  bool power_of_two = ((t + 1) & t) == 0;
  if (out.tight != power_of_two)
    throw ConstructError("internal: tightness must coincide with t+1 a power of two");
  if (two_f - 2 < t || three_pow - 2 < t)
    throw ConstructError("internal: some template order supports fewer than t squares");
  return out;
}

/// Options for plan construction and materialization.
struct PlanOptions {
  bool materialize = false;
  std::optional<BlockDesign> supplied_ipbd;  // caller-provided hole design
  std::uint64_t oracle_budget = 20'000'000;
  int oracle_max_order = 16;   // largest order handed to the search oracle
  int field_max_order = 1024;  // largest order constructed from a field
};

struct PlanResult {
  ConstructionPlan plan;
  std::optional<SquareSet> squares;
};

namespace detail {

inline bool fits_int(const BigInt& x, long long cap) { return x >= 0 && x <= cap; }

inline bool is_prime_power_int(long long q) {
  if (q < 2) return false;
  return gf::factorize(q).size() == 1;
}

}  // namespace detail

/// Plans (and optionally materializes) t-IMOLS(n;m).  Routes, in order:
/// hole of size <= 1 over a prime power order (squares straight from the
/// field), gluing along a caller-supplied or oracle-found hole design, or
/// a direct oracle search; anything else stays certificate-only with the
/// hypothesis recorded on the node.
inline PlanResult plan_imols(const BigInt& t, const BigInt& n, const BigInt& m,
                             const PlanOptions& opts = {}) {
  if (t < 1) throw InputError("need t >= 1");
  if (m < 0 || n < m) throw InputError("need n >= m >= 0");
  if (!imols_bound(t, n, m))
    throw InputError("counting bound violated: n < (t+1)m");

  PlanResult result;
  PlanNode& root = result.plan.root;
  root.step = "imols";
  root.with("t", t).with("n", n).with("m", m);

  // hole of size 0 or 1 over a prime power: plain field squares
  if (m <= 1 && detail::fits_int(n, opts.field_max_order) &&
      detail::is_prime_power_int(static_cast<long long>(n)) && t <= n - 1) {
    PlanNode node;
    node.step = "mols-from-field";
    node.with("q", n).with("t", t);
    node.status = PlanStatus::Materialized;
    node.note = "complete set of squares from the field of order " + n.str();
    root.children.push_back(std::move(node));
    root.status = PlanStatus::Materialized;
    if (opts.materialize) {
      int nn = static_cast<int>(n);
      SquareSet all = mols_from_field(nn);
      all.squares.resize(static_cast<size_t>(static_cast<long long>(t)));
      if (m == 1) {
        all.hole = {0};
        for (auto& sq : all.squares) {
          sq.hole = {0};
          sq.set(0, 0, kEmptyCell);
        }
      }
      Report rep = verify_square_set(all);
      if (!rep.pass()) throw ConstructError("field route failed:\n" + rep.to_string());
      result.squares = std::move(all);
    }
    return result;
  }

  MolsPlan mp;
  bool have_recipe = detail::fits_int(t, 131'070);
  if (have_recipe) {
    mp = mols_plan(static_cast<long long>(t));
    PlanNode recipe;
    recipe.step = "block-size-recipe";
    recipe.with("f", mp.f).with("ratio", mp.ratio);
    std::string ks = "K0 = {";
    for (size_t i = 0; i < mp.K0.size(); ++i)
      ks += (i ? "," : "") + std::to_string(mp.K0[i]);
    ks += "}, K = {";
    for (size_t i = 0; i < mp.K.size(); ++i) ks += (i ? "," : "") + std::to_string(mp.K[i]);
    ks += "}";
    recipe.note = ks;
    recipe.status = PlanStatus::Materialized;
    root.children.push_back(std::move(recipe));
  }

  // the hole design: supplied, searched for, or hypothetical
  PlanNode ipbd_node;
  ipbd_node.with("v", n).with("w", m);
  std::optional<BlockDesign> hole_design;

  if (opts.supplied_ipbd) {
    BlockDesign d = canonicalize(*opts.supplied_ipbd);
    if (BigInt(d.v) != n || BigInt(d.hole_size()) != m)
      throw InputError("supplied design does not match (n;m)");
    Report rep = verify_block_design(d, detail::observed_K(d.blocks));
    if (!rep.pass())
      throw InputError("supplied design fails verification:\n" + rep.to_string());
    ipbd_node.step = "ipbd-supplied";
    ipbd_node.status = PlanStatus::Materialized;
    hole_design = std::move(d);
  } else if (have_recipe && detail::fits_int(n, opts.oracle_max_order)) {
    std::vector<long long> usable;
    for (long long k : mp.K)
      if (k <= static_cast<long long>(n)) usable.push_back(k);
    bool can = !usable.empty();
    if (can) {
      BlockSizeSet Ku = alpha_beta(usable);
      can = m <= 1 || (ipbd_admissible(n, m, Ku) && ipbd_inequality(n, m, Ku));
    }
    ipbd_node.step = "ipbd-search";
    if (!can) {
      ipbd_node.status = PlanStatus::CertificateOnly;
      ipbd_node.note = "no admissible hole design over the recipe's block sizes at this order";
    } else if (!opts.materialize) {
      ipbd_node.note = "oracle route available; materialize to run it";
    } else {
      auto res = search_block_design(static_cast<int>(n), static_cast<int>(m), usable,
                                     opts.oracle_budget);
      ipbd_node.with("nodes", BigInt(res.nodes));
      if (res.outcome == SearchOutcome::Found) {
        ipbd_node.status = PlanStatus::Materialized;
        hole_design = res.design;
      } else {
        ipbd_node.note = std::string("oracle outcome: ") + to_string(res.outcome);
      }
    }
  } else {
    ipbd_node.step = "ipbd-hypothesis";
    if (have_recipe && n >= mp.ratio * m)
      ipbd_node.note = "order/hole ratio meets the recipe bound; existence asymptotic";
    else
      ipbd_node.note = "no desk-scale route known";
  }

  if (hole_design) {
    auto sizes = observed_sizes(hole_design->blocks);
    PlanNode glue;
    glue.step = "glue-ipbd";
    glue.with("t", t);
    for (long long k : sizes) {
      PlanNode tnode;
      tnode.step = "idempotent-mols";
      tnode.with("q", BigInt(k)).with("t", t);
      tnode.status = PlanStatus::Materialized;
      glue.children.push_back(std::move(tnode));
    }
    glue.children.push_back(std::move(ipbd_node));
    glue.status = PlanStatus::Materialized;
    root.children.push_back(std::move(glue));
    root.status = PlanStatus::Materialized;
    if (opts.materialize) {
      GlueTemplates templates = auto_templates(sizes, static_cast<int>(t));
      result.squares = glue_ipbd(*hole_design, templates, static_cast<int>(t));
    }
    return result;
  }

  // fall back to a direct search for the squares themselves
  PlanNode direct;
  direct.step = "imols-search";
  direct.with("n", n).with("m", m).with("t", t);
  bool searchable = detail::fits_int(n, opts.oracle_max_order);
  if (!searchable) {
    direct.note = "order beyond the oracle cap";
    root.children.push_back(std::move(ipbd_node));
    root.children.push_back(std::move(direct));
    return result;
  }
  if (!opts.materialize) {
    direct.note = "oracle route available; materialize to run it";
    root.children.push_back(std::move(ipbd_node));
    root.children.push_back(std::move(direct));
    return result;
  }
  auto res = search_square_set(static_cast<int>(n), static_cast<int>(m),
                               static_cast<int>(t), {}, opts.oracle_budget);
  direct.with("nodes", BigInt(res.nodes));
  if (res.outcome == SearchOutcome::Found) {
    direct.status = PlanStatus::Materialized;
    root.status = PlanStatus::Materialized;
    result.squares = res.set;
  } else {
    direct.note = std::string("oracle outcome: ") + to_string(res.outcome);
  }
  root.children.push_back(std::move(ipbd_node));
  root.children.push_back(std::move(direct));
  return result;
}

}  // namespace latinkit
