#pragma once

// Divisibility and inequality conditions on design parameters, as decidable
// predicates.  These are necessary conditions (plus certificate checks);
// nothing here claims sufficiency.  All arithmetic runs in arbitrary
// precision since planner parameters overflow 64 bits.

#include <string>
#include <vector>

#include "latinkit/core.hpp"

namespace latinkit {

/// One named condition with its evaluation, for reporting.
struct Condition {
  std::string name;
  std::string detail;
  bool holds = false;
};

inline bool all_hold(const std::vector<Condition>& cs) {
  for (const auto& c : cs)
    if (!c.holds) return false;
  return true;
}

namespace detail {

inline BigInt big_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline bool divides(const BigInt& d, const BigInt& x) { return d == 0 ? x == 0 : x % d == 0; }

inline std::string str(const BigInt& x) { return x.str(); }

// Hole size 0 behaves like hole size 1: neither contains a pair.
inline BigInt effective_hole(const BigInt& w) { return w == 0 ? BigInt(1) : w; }

}  // namespace detail

/// Computes alpha = gcd{k-1}, beta = gcd{k(k-1)} and gamma = beta/alpha for
/// a finite set of block sizes >= 2.  gamma is always an integer coprime
/// with alpha; both facts are asserted.
inline BlockSizeSet alpha_beta(std::vector<long long> K);

/// The block-size set a design actually uses; blockless designs get the
/// vacuous set {2}.
inline BlockSizeSet observed_size_set(const std::vector<std::vector<int>>& blocks) {
  auto sizes = observed_sizes(blocks);
  if (sizes.empty()) sizes.push_back(2);
  return alpha_beta(sizes);
}

inline BlockSizeSet alpha_beta(std::vector<long long> K) {
  if (K.empty()) throw InputError("block size set must be nonempty");
  std::sort(K.begin(), K.end());
  K.erase(std::unique(K.begin(), K.end()), K.end());
  if (K.front() < 2) throw InputError("block sizes must be >= 2");
  BlockSizeSet out;
  out.sizes = std::move(K);
  out.alpha = 0;
  out.beta = 0;
  for (long long k : out.sizes) {
    BigInt bk(k);
    out.alpha = detail::big_gcd(out.alpha, bk - 1);
    out.beta = detail::big_gcd(out.beta, bk * (bk - 1));
  }
  if (!detail::divides(out.alpha, out.beta))
    throw ConstructError("alpha does not divide beta");
  out.gamma = out.beta / out.alpha;
  if (detail::big_gcd(out.alpha, out.gamma) != 1)
    throw ConstructError("gamma is not coprime with alpha");
  return out;
}

inline std::vector<Condition> pbd_conditions(const BigInt& v, const BlockSizeSet& K) {
  if (v < 1) throw InputError("point count must be >= 1");
  std::vector<Condition> cs;
  cs.push_back({"local divisibility",
                "v-1 = " + detail::str(v - 1) + " divisible by alpha = " + detail::str(K.alpha),
                detail::divides(K.alpha, v - 1)});
  cs.push_back({"global divisibility",
                "v(v-1) = " + detail::str(v * (v - 1)) + " divisible by beta = " +
                    detail::str(K.beta),
                detail::divides(K.beta, v * (v - 1))});
  return cs;
}

/// Necessary divisibility conditions for a PBD(v,K).
inline bool pbd_admissible(const BigInt& v, const BlockSizeSet& K) {
  return all_hold(pbd_conditions(v, K));
}

/// Pair admissibility with v = w allowed (used for intermediate planner
/// pairs, where a zero step degenerates to equality).  Hole size 0 is
/// treated as 1.
inline bool pair_admissible(const BigInt& v, const BigInt& w_in, const BlockSizeSet& K) {
  BigInt w = detail::effective_hole(w_in);
  if (v < w) throw InputError("v must be at least w");
  return detail::divides(K.alpha, v - 1) && detail::divides(K.alpha, w - 1) &&
         detail::divides(K.beta, v * (v - 1) - w * (w - 1));
}

inline std::vector<Condition> ipbd_conditions(const BigInt& v, const BigInt& w_in,
                                              const BlockSizeSet& K) {
  if (w_in < 0) throw InputError("hole size must be >= 0");
  BigInt w = detail::effective_hole(w_in);
  if (v == w && v != 1) throw InputError("v = w leaves no blocks; excluded");
  if (v < w) throw InputError("v must be at least w");
  std::vector<Condition> cs;
  cs.push_back({"local divisibility (v)",
                "v-1 = " + detail::str(v - 1) + " divisible by alpha = " + detail::str(K.alpha),
                detail::divides(K.alpha, v - 1)});
  cs.push_back({"local divisibility (w)",
                "w-1 = " + detail::str(w - 1) + " divisible by alpha = " + detail::str(K.alpha),
                detail::divides(K.alpha, w - 1)});
  cs.push_back({"global divisibility",
                "v(v-1) - w(w-1) = " + detail::str(v * (v - 1) - w * (w - 1)) +
                    " divisible by beta = " + detail::str(K.beta),
                detail::divides(K.beta, v * (v - 1) - w * (w - 1))});
  return cs;
}

/// Necessary divisibility conditions for an IPBD((v;w),K).  v = w is an
/// input error; w = 0 is treated as w = 1.
inline bool ipbd_admissible(const BigInt& v, const BigInt& w, const BlockSizeSet& K) {
  return all_hold(ipbd_conditions(v, w, K));
}

inline Condition ipbd_inequality_condition(const BigInt& v, const BigInt& w_in,
                                           const BlockSizeSet& K) {
  BigInt w = detail::effective_hole(w_in);
  BigInt k(K.min_size());
  BigInt bound = (k - 1) * w + 1;
  return {"hole size bound",
          "v = " + detail::str(v) + " >= (k-1)w + 1 = " + detail::str(bound) +
              " with k = " + detail::str(k),
          v >= bound};
}

/// Hole size bound v >= (k-1)w + 1 with k = min K.
inline bool ipbd_inequality(const BigInt& v, const BigInt& w, const BlockSizeSet& K) {
  return ipbd_inequality_condition(v, w, K).holds;
}

/// Equality holds in the hole size bound: v == (k-1)w + 1.
inline bool ipbd_inequality_tight(const BigInt& v, const BigInt& w_in, const BlockSizeSet& K) {
  BigInt w = detail::effective_hole(w_in);
  return v == (BigInt(K.min_size()) - 1) * w + 1;
}

inline Condition imols_condition(const BigInt& t, const BigInt& n, const BigInt& m) {
  if (t < 1) throw InputError("t must be >= 1");
  if (m < 0 || n < m) throw InputError("need n >= m >= 0");
  return {"counting bound",
          "n = " + detail::str(n) + " >= (t+1)m = " + detail::str((t + 1) * m),
          n >= (t + 1) * m};
}

/// Counting bound for t-IMOLS(n;m): n >= (t+1)m.
inline bool imols_bound(const BigInt& t, const BigInt& n, const BigInt& m) {
  return imols_condition(t, n, m).holds;
}

inline std::vector<Condition> gdd_conditions(const BigInt& g, const BigInt& u,
                                             const BlockSizeSet& K) {
  if (g < 0 || u < 1) throw InputError("need g >= 0 and u >= 1");
  std::vector<Condition> cs;
  cs.push_back({"local divisibility",
                "g(u-1) = " + detail::str(g * (u - 1)) + " divisible by alpha = " +
                    detail::str(K.alpha),
                detail::divides(K.alpha, g * (u - 1))});
  cs.push_back({"global divisibility",
                "g^2 u(u-1) = " + detail::str(g * g * u * (u - 1)) + " divisible by beta = " +
                    detail::str(K.beta),
                detail::divides(K.beta, g * g * u * (u - 1))});
  return cs;
}

/// Necessary divisibility conditions for a uniform GDD(g^u,K).
inline bool gdd_admissible(const BigInt& g, const BigInt& u, const BlockSizeSet& K) {
  return all_hold(gdd_conditions(g, u, K));
}

inline std::vector<Condition> igdd_conditions(const BigInt& g, const BigInt& h, const BigInt& u,
                                              const BlockSizeSet& K) {
  if (h < 0 || g < h || u < 1) throw InputError("need g >= h >= 0 and u >= 1");
  std::vector<Condition> cs;
  cs.push_back({"local divisibility (g)",
                "g(u-1) = " + detail::str(g * (u - 1)) + " divisible by alpha = " +
                    detail::str(K.alpha),
                detail::divides(K.alpha, g * (u - 1))});
  cs.push_back({"local divisibility (h)",
                "h(u-1) = " + detail::str(h * (u - 1)) + " divisible by alpha = " +
                    detail::str(K.alpha),
                detail::divides(K.alpha, h * (u - 1))});
  cs.push_back({"global divisibility",
                "(g^2-h^2)u(u-1) = " + detail::str((g * g - h * h) * u * (u - 1)) +
                    " divisible by beta = " + detail::str(K.beta),
                detail::divides(K.beta, (g * g - h * h) * u * (u - 1))});
  BigInt k(K.min_size());
  cs.push_back({"group-hole bound",
                "g = " + detail::str(g) + " >= (k-1)h = " + detail::str((k - 1) * h),
                g >= (k - 1) * h});
  return cs;
}

/// Necessary conditions for a uniform IGDD((g;h)^u,K), including g >= (k-1)h.
inline bool igdd_admissible(const BigInt& g, const BigInt& h, const BigInt& u,
                            const BlockSizeSet& K) {
  return all_hold(igdd_conditions(g, h, u, K));
}

inline Condition rpbd_condition(const BigInt& v, const BigInt& k) {
  if (k < 2 || v < k) throw InputError("need v >= k >= 2");
  return {"resolvable congruence",
          "v = " + detail::str(v) + " congruent to k = " + detail::str(k) + " mod k(k-1) = " +
              detail::str(k * (k - 1)),
          (v - k) % (k * (k - 1)) == 0};
}

/// Necessary congruence for a resolvable PBD(v,{k}): v = k (mod k(k-1)).
inline bool rpbd_admissible(const BigInt& v, const BigInt& k) {
  return rpbd_condition(v, k).holds;
}

}  // namespace latinkit
