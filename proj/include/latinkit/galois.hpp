#pragma once

// Finite fields GF(p^e) and the base constructions seeded by them: complete
// sets of MOLS, idempotent MOLS, transversal designs, and affine planes.
//
// Elements are indexed 0..q-1; index 0 is zero, index 1 is one, and for
// extension fields index digits in base p are the polynomial coefficients.
// Multiplication runs through discrete-log tables built from a canonical
// generator, so identical parameters always yield identical squares.

#include <array>
#include <string>
#include <vector>

#include "latinkit/core.hpp"
#include "latinkit/verify.hpp"

namespace latinkit {

namespace gf {

struct PrimePower {
  long long p = 0;
  int e = 0;
};

inline std::vector<std::pair<long long, int>> factorize(long long n) {
  std::vector<std::pair<long long, int>> fs;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      fs.emplace_back(d, e);
    }
  if (n > 1) fs.emplace_back(n, 1);
  return fs;
}

inline std::string factorization_string(long long n) {
  std::string s;
  for (auto [p, e] : factorize(n)) {
    if (!s.empty()) s += " * ";
    s += std::to_string(p);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

inline PrimePower prime_power_of(long long q) {
  if (q < 2) throw InputError("field order must be >= 2");
  auto fs = factorize(q);
  if (fs.size() != 1)
    throw InputError("q = " + std::to_string(q) + " is not a prime power (" +
                     std::to_string(q) + " = " + factorization_string(q) + ")");
  return {fs.front().first, fs.front().second};
}

// Dense polynomial arithmetic over GF(p); coefficients c[0] + c[1]x + ...
using Poly = std::vector<int>;

inline Poly poly_mod(Poly a, const Poly& f, int p) {
  // f is monic of degree e with coefficients f[0..e] (f[e] == 1)
  const int e = static_cast<int>(f.size()) - 1;
  for (int d = static_cast<int>(a.size()) - 1; d >= e; --d) {
    int c = a[d] % p;
    if (c == 0) continue;
    for (int i = 0; i <= e; ++i) {
      int& t = a[d - e + i];
      t = static_cast<int>(((long long)t - (long long)c * f[i]) % p);
      if (t < 0) t += p;
    }
  }
  a.resize(e);
  return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, int p) {
  Poly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<int>((prod[i + j] + (long long)a[i] * b[j]) % p);
  }
  return poly_mod(std::move(prod), f, p);
}

inline bool poly_is_zero(const Poly& a) {
  for (int c : a)
    if (c) return false;
  return true;
}

inline Poly poly_powmod(Poly base, long long n, const Poly& f, int p) {
  const int e = static_cast<int>(f.size()) - 1;
  Poly r(e, 0);
  r[0] = 1;
  base = poly_mod(std::move(base), f, p);
  while (n > 0) {
    if (n & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    n >>= 1;
  }
  return r;
}

inline Poly poly_gcd(Poly a, Poly b, int p) {
  auto trim = [](Poly& x) {
    while (!x.empty() && x.back() == 0) x.pop_back();
  };
  auto inv_mod_p = [p](int a) {
    int r = 1, base = a % p, n = p - 2;
    while (n > 0) {
      if (n & 1) r = static_cast<int>((long long)r * base % p);
      base = static_cast<int>((long long)base * base % p);
      n >>= 1;
    }
    return r;
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b with b made monic
    int lead_inv = inv_mod_p(b.back());
    for (int d = static_cast<int>(a.size()) - 1;
         d >= static_cast<int>(b.size()) - 1 && !a.empty(); --d) {
      if (d >= static_cast<int>(a.size())) continue;
      int c = static_cast<int>((long long)a[d] * lead_inv % p);
      if (c == 0) continue;
      int off = d - (static_cast<int>(b.size()) - 1);
      for (size_t i = 0; i < b.size(); ++i) {
        int& t = a[off + i];
        t = static_cast<int>(((long long)t - (long long)c * b[i]) % p);
        if (t < 0) t += p;
      }
      trim(a);
    }
    std::swap(a, b);
    trim(b);
  }
  return a;
}

// Rabin's criterion: x^(p^e) = x mod f, and gcd(x^(p^(e/r)) - x, f) = 1
// for each prime r dividing e.
inline bool is_irreducible(const Poly& f, int p) {
  const int e = static_cast<int>(f.size()) - 1;
  if (e < 1) return false;
  if (f[0] == 0) return e == 1;  // divisible by x
  auto frobenius_power = [&](int times) {
    Poly g(e, 0);
    if (e == 1) {
      g[0] = 0;  // unused for e == 1
      return g;
    }
    g[1] = 1;  // x
    for (int i = 0; i < times; ++i) g = poly_powmod(std::move(g), p, f, p);
    return g;
  };
  if (e == 1) return true;
  for (auto [r, mult] : factorize(e)) {
    Poly g = frobenius_power(static_cast<int>(e / r));
    // g - x
    Poly diff = g;
    diff[1] = (diff[1] - 1 % p + p) % p;
    Poly d = poly_gcd(diff, f, p);
    if (!(d.size() == 1 && d[0] != 0)) return false;
  }
  Poly g = frobenius_power(e);
  Poly diff = g;
  diff[1] = (diff[1] - 1 % p + p) % p;
  return poly_is_zero(diff);
}

// Canonical modulus: the monic irreducible of degree e over GF(p) whose
// non-leading coefficient vector, read as a base-p integer, is smallest.
// Pinned for small orders; the same rule is applied by search beyond.
inline long long pinned_modulus_encoding(long long q) {
  static constexpr std::array<std::pair<long long, long long>, 26> table = {{
      {4, 3},    {8, 3},    {9, 1},    {16, 3},  {25, 2},   {27, 7},  {32, 5},
      {49, 1},   {64, 3},   {81, 5},   {121, 1}, {125, 6},  {128, 3}, {169, 2},
      {243, 7},  {256, 27}, {289, 3},  {343, 2}, {361, 1},  {512, 3}, {529, 1},
      {625, 2},  {729, 5},  {841, 2},  {961, 1}, {1024, 9},
  }};
  for (auto [qq, enc] : table)
    if (qq == q) return enc;
  return -1;
}

inline Poly canonical_modulus(long long q, int p, int e) {
  auto decode = [&](long long n) {
    Poly f(e + 1, 0);
    for (int i = 0; i < e; ++i) {
      f[i] = static_cast<int>(n % p);
      n /= p;
    }
    f[e] = 1;
    return f;
  };
  long long pinned = pinned_modulus_encoding(q);
  if (pinned >= 0) {
    Poly f = decode(pinned);
    if (!is_irreducible(f, p)) throw ConstructError("pinned modulus failed irreducibility");
    return f;
  }
  for (long long n = 0; n < q; ++n) {
    Poly f = decode(n);
    if (is_irreducible(f, p)) return f;
  }
  throw ConstructError("no irreducible polynomial found");  // unreachable
}

}  // namespace gf

/// Arithmetic tables for GF(q), q = p^e.  Index 0 is zero, index 1 is one.
class FieldTable {
 public:
  explicit FieldTable(long long q) {
    auto pp = gf::prime_power_of(q);
    if (q > (1LL << 16)) throw InputError("field order capped at 2^16");
    q_ = static_cast<int>(q);
    p_ = static_cast<int>(pp.p);
    e_ = pp.e;
    if (e_ > 1) modulus_ = gf::canonical_modulus(q, p_, e_);
    build_log_tables();
  }

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return e_; }
  const gf::Poly& modulus() const { return modulus_; }

  int add(int a, int b) const {
    if (e_ == 1) return (a + b) % p_;
    if (p_ == 2) return a ^ b;
    int r = 0, mul = 1;
    for (int i = 0; i < e_; ++i) {
      int da = (a / mul) % p_, db = (b / mul) % p_;
      r += ((da + db) % p_) * mul;
      mul *= p_;
    }
    return r;
  }

  int neg(int a) const {
    if (e_ == 1) return (p_ - a) % p_;
    if (p_ == 2) return a;
    int r = 0, mul = 1;
    for (int i = 0; i < e_; ++i) {
      int da = (a / mul) % p_;
      r += ((p_ - da) % p_) * mul;
      mul *= p_;
    }
    return r;
  }

  int sub(int a, int b) const { return add(a, neg(b)); }

  int mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }

  int inv(int a) const {
    if (a == 0) throw InputError("zero has no inverse");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }

  int pow(int a, long long n) const {
    if (a == 0) return n == 0 ? 1 : 0;
    long long m = log_[a] * (n % (q_ - 1)) % (q_ - 1);
    if (m < 0) m += q_ - 1;
    return exp_[m];
  }

  int generator() const { return exp_[1 % (q_ - 1)]; }

 private:
  int mul_raw(int a, int b) const {
    if (e_ == 1) return static_cast<int>((long long)a * b % p_);
    gf::Poly pa = decode(a), pb = decode(b);
    return encode(gf::poly_mulmod(pa, pb, modulus_, p_));
  }

  gf::Poly decode(int a) const {
    gf::Poly f(e_, 0);
    for (int i = 0; i < e_; ++i) {
      f[i] = a % p_;
      a /= p_;
    }
    return f;
  }

  int encode(const gf::Poly& f) const {
    int a = 0, mul = 1;
    for (int i = 0; i < e_; ++i) {
      a += f[i] * mul;
      mul *= p_;
    }
    return a;
  }

  int pow_raw(int a, long long n) const {
    int r = 1;
    while (n > 0) {
      if (n & 1) r = mul_raw(r, a);
      a = mul_raw(a, a);
      n >>= 1;
    }
    return r;
  }

  void build_log_tables() {
    const long long group = q_ - 1;
    auto fs = gf::factorize(group);
    int g = 0;
    if (q_ == 2) {
      g = 1;
    } else {
      for (int cand = 2; cand < q_; ++cand) {
        bool primitive = true;
        for (auto [r, e] : fs)
          if (pow_raw(cand, group / r) == 1) {
            primitive = false;
            break;
          }
        if (primitive) {
          g = cand;
          break;
        }
      }
      if (g == 0) throw ConstructError("no generator found");
    }
    exp_.assign(static_cast<size_t>(group), 0);
    log_.assign(static_cast<size_t>(q_), -1);
    int x = 1;
    for (long long i = 0; i < group; ++i) {
      exp_[i] = x;
      log_[x] = static_cast<int>(i);
      x = mul_raw(x, g);
    }
    if (x != 1) throw ConstructError("generator order mismatch");
  }

  int q_ = 0, p_ = 0, e_ = 1;
  gf::Poly modulus_;
  std::vector<int> exp_, log_;
};

inline FieldTable field(long long q) { return FieldTable(q); }

/// The complete set of q-1 MOLS of a prime power order q, from the squares
/// L_a(x,y) = a*x + y over GF(q) for a != 0.
inline SquareSet mols_from_field(int q) {
  FieldTable F(q);
  SquareSet ss;
  ss.order = q;
  for (int a = 1; a < q; ++a) {
    IncompleteSquare s = IncompleteSquare::blank(q);
    for (int x = 0; x < q; ++x)
      for (int y = 0; y < q; ++y) s.set(x, y, F.add(F.mul(a, x), y));
    ss.squares.push_back(std::move(s));
  }
  return ss;
}

/// q-2 mutually orthogonal idempotent latin squares of prime power order q,
/// from L_a(x,y) = a*x + (1-a)*y for a outside {0,1}.  q = 2 yields an
/// empty set (there is nothing to return; callers should warn).
inline SquareSet idempotent_mols(int q) {
  FieldTable F(q);
  SquareSet ss;
  ss.order = q;
  for (int a = 2; a < q; ++a) {
    const int b = F.sub(1, a);
    IncompleteSquare s = IncompleteSquare::blank(q);
    for (int x = 0; x < q; ++x)
      for (int y = 0; y < q; ++y) s.set(x, y, F.add(F.mul(a, x), F.mul(b, y)));
    ss.squares.push_back(std::move(s));
  }
  return ss;
}

/// Transversal design TD(t+2, n) from t MOLS of order n: two groups index
/// rows and columns, one more group per square, one block per cell.
inline GroupedDesign td_from_mols(const SquareSet& ss) {
  if (!ss.hole.empty()) throw InputError("transversal design needs squares without holes");
  const int n = ss.order;
  const int k = ss.count() + 2;
  if (n < 1) throw InputError("order must be >= 1");
  GroupedDesign d;
  d.v = k * n;
  d.groups.resize(k);
  d.group_holes.resize(k);
  for (int g = 0; g < k; ++g)
    for (int x = 0; x < n; ++x) d.groups[g].push_back(g * n + x);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> block = {i, n + j};
      for (int s = 0; s < ss.count(); ++s)
        block.push_back((2 + s) * n + ss.squares[s].at(i, j));
      d.blocks.push_back(std::move(block));
    }
  return canonicalize(d);
}

/// Back from a uniform transversal design to its k-2 squares.  The two
/// lexicographically first groups index rows and columns.
inline SquareSet mols_from_td(const GroupedDesign& d_in) {
  GroupedDesign d = canonicalize(d_in);
  const int k = d.group_count();
  if (k < 2) throw InputError("transversal design needs at least 2 groups");
  const size_t n = d.groups.front().size();
  for (const auto& g : d.groups)
    if (g.size() != n) throw InputError("groups are not uniform");
  for (const auto& h : d.group_holes)
    if (!h.empty()) throw InputError("transversal design must have empty holes");
  if (d.blocks.size() != n * n) throw InputError("blocks do not form a transversal design");

  std::vector<int> group_of(static_cast<size_t>(d.v), -1), rank(static_cast<size_t>(d.v), -1);
  for (int g = 0; g < k; ++g)
    for (size_t i = 0; i < d.groups[g].size(); ++i) {
      group_of[d.groups[g][i]] = g;
      rank[d.groups[g][i]] = static_cast<int>(i);
    }

  SquareSet ss;
  ss.order = static_cast<int>(n);
  ss.squares.assign(static_cast<size_t>(k - 2), IncompleteSquare::blank(static_cast<int>(n)));
  std::vector<bool> seen(n * n, false);
  for (const auto& b : d.blocks) {
    if (b.size() != static_cast<size_t>(k))
      throw InputError("blocks do not form a transversal design");
    std::vector<int> per_group(static_cast<size_t>(k), -1);
    for (int p : b) {
      if (per_group[group_of[p]] != -1)
        throw InputError("blocks do not form a transversal design");
      per_group[group_of[p]] = rank[p];
    }
    int i = per_group[0], j = per_group[1];
    if (seen[static_cast<size_t>(i) * n + j])
      throw InputError("blocks do not form a transversal design");
    seen[static_cast<size_t>(i) * n + j] = true;
    for (int s = 0; s + 2 < k; ++s) ss.squares[s].set(i, j, per_group[s + 2]);
  }
  return ss;
}

/// The affine plane AG(2,q) as a resolvable PBD(q^2,{q}): q+1 parallel
/// classes of q lines each, grouped by slope (verticals last).
inline BlockDesign affine_plane(int q) {
  FieldTable F(q);
  BlockDesign d;
  d.v = q * q;
  d.resolution = std::vector<int>{};
  auto point = [q](int a, int b) { return a * q + b; };
  for (int s = 0; s < q; ++s)
    for (int c = 0; c < q; ++c) {
      std::vector<int> line;
      for (int x = 0; x < q; ++x) line.push_back(point(x, F.add(F.mul(s, x), c)));
      d.blocks.push_back(std::move(line));
      d.resolution->push_back(s);
    }
  for (int a = 0; a < q; ++a) {
    std::vector<int> line;
    for (int y = 0; y < q; ++y) line.push_back(point(a, y));
    d.blocks.push_back(std::move(line));
    d.resolution->push_back(q);
  }
  return canonicalize(d);
}

}  // namespace latinkit
