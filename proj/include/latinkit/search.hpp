#pragma once

// Brute-force construction and refutation for small orders.  Searches are
// complete: "exhausted" outcomes are proofs of nonexistence.  Branching is
// deterministic (most-constrained slot first, ties by index, symbols in
// ascending order), budgets are counted in node expansions, and identical
// inputs always reproduce identical node counts.

#include <cstdint>
#include <optional>

#include "latinkit/core.hpp"
#include "latinkit/verify.hpp"

namespace latinkit {

enum class SearchOutcome { Found, NoneWithinBudget, ExhaustedNone };

inline const char* to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Found: return "found";
    case SearchOutcome::NoneWithinBudget: return "none-within-budget";
    case SearchOutcome::ExhaustedNone: return "exhausted-none";
  }
  return "?";
}

struct SquareSearchResult {
  SearchOutcome outcome = SearchOutcome::ExhaustedNone;
  std::optional<SquareSet> set;
  std::uint64_t nodes = 0;
};

struct DesignSearchResult {
  SearchOutcome outcome = SearchOutcome::ExhaustedNone;
  std::optional<BlockDesign> design;
  std::uint64_t nodes = 0;
};

namespace detail {

// Joint backtracking over all t squares.  Symbol permutations (fixing the
// hole setwise, independently per square) are factored out by a least-fresh
// rule: a symbol unused so far in a square may only enter as the smallest
// unused symbol of its class (hole / non-hole).  Fresh symbols of one class
// are interchangeable under any partial assignment, so the restriction
// preserves completeness for refutation as well as for search.
class SquareSetSearch {
 public:
  SquareSetSearch(int n, std::vector<int> hole, int t, std::uint64_t budget)
      : n_(n), t_(t), budget_(budget), hole_(std::move(hole)) {
    hole_mask_ = 0;
    for (int h : hole_) hole_mask_ |= 1ULL << h;
    full_mask_ = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c)
        if (!(in_hole(r) && in_hole(c))) cells_.push_back({r, c});
    row_used_.assign(static_cast<size_t>(t_) * n_, 0);
    col_used_.assign(static_cast<size_t>(t_) * n_, 0);
    sym_count_.assign(static_cast<size_t>(t_) * n_, 0);
    assigned_.assign(cells_.size() * t_, -1);
    pair_used_.assign(static_cast<size_t>(t_) * t_,
                      std::vector<bool>(static_cast<size_t>(n_) * n_, false));
  }

  SquareSearchResult run() {
    SquareSearchResult res;
    bool found = false;
    bool aborted = !dfs(found);
    res.nodes = nodes_;
    if (found) {
      res.outcome = SearchOutcome::Found;
      res.set = extract();
    } else {
      res.outcome = aborted ? SearchOutcome::NoneWithinBudget : SearchOutcome::ExhaustedNone;
    }
    return res;
  }

 private:
  struct Cell {
    int r, c;
  };

  bool in_hole(int x) const { return (hole_mask_ >> x) & 1; }

  std::uint64_t base_mask(const Cell& cell, int s) const {
    std::uint64_t mask = full_mask_;
    if (in_hole(cell.r) || in_hole(cell.c)) mask &= ~hole_mask_;
    mask &= ~row_used_[static_cast<size_t>(s) * n_ + cell.r];
    mask &= ~col_used_[static_cast<size_t>(s) * n_ + cell.c];
    return mask;
  }

  // Candidates for one slot, in ascending symbol order, after the pair
  // constraints against already-assigned squares of the same cell and the
  // least-fresh rule.
  void candidates(size_t ci, int s, std::vector<int>& out) const {
    out.clear();
    std::uint64_t mask = base_mask(cells_[ci], s);
    int min_fresh_plain = -1, min_fresh_hole = -1;
    for (int x = 0; x < n_; ++x) {
      if (sym_count_[static_cast<size_t>(s) * n_ + x] > 0) continue;
      if (in_hole(x)) {
        if (min_fresh_hole < 0) min_fresh_hole = x;
      } else {
        if (min_fresh_plain < 0) min_fresh_plain = x;
      }
      if (min_fresh_plain >= 0 && min_fresh_hole >= 0) break;
    }
    for (int x = 0; x < n_; ++x) {
      if (!((mask >> x) & 1)) continue;
      if (sym_count_[static_cast<size_t>(s) * n_ + x] == 0) {
        int least = in_hole(x) ? min_fresh_hole : min_fresh_plain;
        if (x != least) continue;
      }
      bool ok = true;
      for (int o = 0; o < t_ && ok; ++o) {
        if (o == s) continue;
        int y = assigned_[ci * t_ + o];
        if (y < 0) continue;
        int a = std::min(s, o), b = std::max(s, o);
        int first = (a == s) ? x : y, second = (a == s) ? y : x;
        if (pair_used_[static_cast<size_t>(a) * t_ + b]
                      [static_cast<size_t>(first) * n_ + second])
          ok = false;
      }
      if (ok) out.push_back(x);
    }
  }

  void place(size_t ci, int s, int x) {
    const Cell& cell = cells_[ci];
    row_used_[static_cast<size_t>(s) * n_ + cell.r] |= 1ULL << x;
    col_used_[static_cast<size_t>(s) * n_ + cell.c] |= 1ULL << x;
    ++sym_count_[static_cast<size_t>(s) * n_ + x];
    assigned_[ci * t_ + s] = x;
    for (int o = 0; o < t_; ++o) {
      if (o == s) continue;
      int y = assigned_[ci * t_ + o];
      if (y < 0) continue;
      int a = std::min(s, o), b = std::max(s, o);
      int first = (a == s) ? x : y, second = (a == s) ? y : x;
      pair_used_[static_cast<size_t>(a) * t_ + b][static_cast<size_t>(first) * n_ + second] =
          true;
    }
    ++filled_;
  }

  void unplace(size_t ci, int s, int x) {
    const Cell& cell = cells_[ci];
    for (int o = 0; o < t_; ++o) {
      if (o == s) continue;
      int y = assigned_[ci * t_ + o];
      if (y < 0) continue;
      int a = std::min(s, o), b = std::max(s, o);
      int first = (a == s) ? x : y, second = (a == s) ? y : x;
      pair_used_[static_cast<size_t>(a) * t_ + b][static_cast<size_t>(first) * n_ + second] =
          false;
    }
    assigned_[ci * t_ + s] = -1;
    --sym_count_[static_cast<size_t>(s) * n_ + x];
    row_used_[static_cast<size_t>(s) * n_ + cell.r] &= ~(1ULL << x);
    col_used_[static_cast<size_t>(s) * n_ + cell.c] &= ~(1ULL << x);
    --filled_;
  }

  // returns false when the budget ran out
  bool dfs(bool& found) {
    if (filled_ == cells_.size() * t_) {
      found = true;
      return true;
    }
    if (nodes_ == budget_) return false;
    ++nodes_;

    size_t best_ci = 0;
    int best_s = -1;
    size_t best_count = SIZE_MAX;
    std::vector<int> cand;
    for (size_t ci = 0; ci < cells_.size() && best_count > 0; ++ci)
      for (int s = 0; s < t_; ++s) {
        if (assigned_[ci * t_ + s] >= 0) continue;
        candidates(ci, s, cand);
        if (cand.size() < best_count) {
          best_count = cand.size();
          best_ci = ci;
          best_s = s;
          if (best_count == 0) break;
        }
      }
    if (best_count == 0) return true;  // dead end, backtrack

    candidates(best_ci, best_s, cand);
    for (int x : cand) {
      place(best_ci, best_s, x);
      bool ok = dfs(found);
      if (found) return true;
      unplace(best_ci, best_s, x);
      if (!ok) return false;
    }
    return true;
  }

  SquareSet extract() const {
    SquareSet ss;
    ss.order = n_;
    ss.hole = hole_;
    for (int s = 0; s < t_; ++s) {
      IncompleteSquare sq = IncompleteSquare::blank(n_, hole_);
      for (size_t ci = 0; ci < cells_.size(); ++ci)
        sq.set(cells_[ci].r, cells_[ci].c, assigned_[ci * t_ + s]);
      ss.squares.push_back(std::move(sq));
    }
    return ss;
  }

  int n_, t_;
  std::uint64_t budget_, nodes_ = 0;
  std::vector<int> hole_;
  std::uint64_t hole_mask_ = 0, full_mask_ = 0;
  std::vector<Cell> cells_;
  std::vector<std::uint64_t> row_used_, col_used_;
  std::vector<int> sym_count_;
  std::vector<int> assigned_;
  std::vector<std::vector<bool>> pair_used_;
  size_t filled_ = 0;
};

}  // namespace detail

/// Complete backtracking search for t mutually orthogonal incomplete latin
/// squares of order n with the given hole (default: the first m indices).
/// "exhausted-none" is a proof of nonexistence.
inline SquareSearchResult search_square_set(int n, int m, int t,
                                            std::vector<int> hole = {},
                                            std::uint64_t budget = 10'000'000) {
  if (n < 1 || n > 64) throw InputError("search supports orders 1..64");
  if (m < 0 || m > n) throw InputError("need 0 <= m <= n");
  if (t < 1) throw InputError("need t >= 1");
  if (hole.empty() && m > 0)
    for (int i = 0; i < m; ++i) hole.push_back(i);
  std::sort(hole.begin(), hole.end());
  if (static_cast<int>(hole.size()) != m) throw InputError("hole size must equal m");
  for (int h : hole)
    if (h < 0 || h >= n) throw InputError("hole index out of range");

  detail::SquareSetSearch search(n, std::move(hole), t, budget);
  SquareSearchResult res = search.run();
  if (res.set) {
    Report rep = verify_square_set(*res.set);
    if (!rep.pass()) throw ConstructError("search produced an invalid set:\n" + rep.to_string());
  }
  return res;
}

namespace detail {

class BlockDesignSearch {
 public:
  BlockDesignSearch(int v, int w, std::vector<int> sizes, std::uint64_t budget)
      : v_(v), w_(w), sizes_(std::move(sizes)), budget_(budget) {
    covered_.assign(static_cast<size_t>(v_) * v_, false);
  }

  DesignSearchResult run() {
    DesignSearchResult res;
    bool found = false;
    bool aborted = !dfs(found);
    res.nodes = nodes_;
    if (found) {
      res.outcome = SearchOutcome::Found;
      BlockDesign d;
      d.v = v_;
      for (int i = 0; i < w_; ++i) d.hole.push_back(i);
      d.blocks = chosen_;
      res.design = canonicalize(d);
    } else {
      res.outcome = aborted ? SearchOutcome::NoneWithinBudget : SearchOutcome::ExhaustedNone;
    }
    return res;
  }

 private:

  bool pair_covered(int a, int b) const {
    return covered_[static_cast<size_t>(std::min(a, b)) * v_ + std::max(a, b)];
  }

  void set_pair(int a, int b, bool val) {
    covered_[static_cast<size_t>(std::min(a, b)) * v_ + std::max(a, b)] = val;
  }

  bool find_target(int& ti, int& tj) const {
    for (int i = 0; i < v_; ++i)
      for (int j = i + 1; j < v_; ++j) {
        if (i < w_ && j < w_) continue;
        if (!pair_covered(i, j)) {
          ti = i;
          tj = j;
          return true;
        }
      }
    return false;
  }

  void cover_block(const std::vector<int>& b, bool val) {
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = i + 1; j < b.size(); ++j) set_pair(b[i], b[j], val);
  }

  // extend block to full size, points in ascending order
  bool extend(std::vector<int>& block, size_t k, int min_next, int hole_hits, bool& found) {
    if (block.size() == k) {
      if (nodes_ == budget_) return false;
      ++nodes_;
      cover_block(block, true);
      chosen_.push_back(block);
      bool ok = dfs(found);
      if (!found) {
        chosen_.pop_back();
        cover_block(block, false);
      }
      return ok;
    }
    for (int p = min_next; p < v_; ++p) {
      if (p < w_ && hole_hits > 0) continue;
      bool ok = true;
      for (int q : block)
        if (pair_covered(q, p) || q == p) {
          ok = false;
          break;
        }
      if (!ok) continue;
      block.push_back(p);
      bool cont = extend(block, k, p + 1, hole_hits + (p < w_ ? 1 : 0), found);
      block.pop_back();
      if (found || !cont) return cont;
    }
    return true;
  }

  bool dfs(bool& found) {
    int ti, tj;
    if (!find_target(ti, tj)) {
      found = true;
      return true;
    }
    int hole_hits = (ti < w_ ? 1 : 0) + (tj < w_ ? 1 : 0);
    for (int k : sizes_) {
      std::vector<int> block = {ti, tj};
      // Any point p < tj other than ti pairs with ti lexicographically
      // before (ti,tj), and that pair is already covered or lies in the
      // hole; either way no admissible block through (ti,tj) contains p.
      // Restricting candidates to points above tj therefore loses nothing.
      bool cont = extend(block, static_cast<size_t>(k), tj + 1, hole_hits, found);
      if (found || !cont) return cont;
    }
    return true;
  }

  int v_, w_;
  std::vector<int> sizes_;
  std::uint64_t budget_, nodes_ = 0;
  std::vector<bool> covered_;
  std::vector<std::vector<int>> chosen_;
};

}  // namespace detail

/// Complete pair-cover search for a PBD / IPBD on v points whose hole is
/// the first w points.  Branches over the blocks covering the smallest
/// uncovered pair, so exhaustion needs no symmetry argument.
inline DesignSearchResult search_block_design(int v, int w, const std::vector<long long>& K,
                                              std::uint64_t budget = 10'000'000) {
  if (v < 1) throw InputError("need v >= 1");
  if (w < 0 || w > v) throw InputError("need 0 <= w <= v");
  BlockSizeSet sizes = alpha_beta(K);
  std::vector<int> ks;
  for (long long k : sizes.sizes) {
    if (k > v) continue;
    ks.push_back(static_cast<int>(k));
  }
  detail::BlockDesignSearch search(v, w, ks, budget);
  DesignSearchResult res = search.run();
  if (res.design) {
    Report rep = verify_block_design(*res.design, sizes);
    if (!rep.pass())
      throw ConstructError("search produced an invalid design:\n" + rep.to_string());
  }
  return res;
}

}  // namespace latinkit
