#pragma once

// Exact verifiers for every design axiom.  Each check scans the whole
// object (no sampling; pair-coverage checks hold an O(v^2) count matrix)
// and reports every violation it finds rather than stopping at the first.

#include <sstream>
#include <string>
#include <vector>

#include "latinkit/core.hpp"

namespace latinkit {

struct Report {
  std::string subject;
  std::vector<std::string> violations;

  bool pass() const { return violations.empty(); }

  void fail(std::string msg) { violations.push_back(std::move(msg)); }

  std::string to_string() const {
    std::ostringstream os;
    os << subject << ": " << (pass() ? "pass" : "FAIL");
    for (const auto& v : violations) os << "\n  - " << v;
    return os.str();
  }
};

namespace detail {

inline std::string cell_name(int r, int c) {
  return "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
}

// Shape problems are reported, never thrown: verifiers are total.
inline bool square_shape_ok(const IncompleteSquare& s, Report& rep) {
  bool ok = true;
  if (s.order < 1) {
    rep.fail("order must be >= 1");
    return false;
  }
  if (s.cells.size() != static_cast<size_t>(s.order) * s.order) {
    rep.fail("cell grid is not order x order");
    ok = false;
  }
  if (!std::is_sorted(s.hole.begin(), s.hole.end()) ||
      std::adjacent_find(s.hole.begin(), s.hole.end()) != s.hole.end()) {
    rep.fail("hole must be a sorted set");
    ok = false;
  }
  for (int h : s.hole)
    if (h < 0 || h >= s.order) {
      rep.fail("hole index " + std::to_string(h + 1) + " out of range");
      ok = false;
    }
  if (!ok) return false;
  for (int r = 0; r < s.order; ++r)
    for (int c = 0; c < s.order; ++c) {
      int x = s.at(r, c);
      if (x != kEmptyCell && (x < 0 || x >= s.order)) {
        rep.fail("cell " + cell_name(r, c) + " holds out-of-range symbol");
        ok = false;
      }
    }
  return ok;
}

}  // namespace detail

/// Incomplete-latin axioms: hole cells empty, all other cells filled, no
/// row/column repeats, and hole symbols absent from hole rows and columns.
/// With an empty hole this is exactly the latin-square property.
inline Report verify_incomplete_latin(const IncompleteSquare& s) {
  Report rep{"incomplete latin square", {}};
  if (!detail::square_shape_ok(s, rep)) return rep;

  const int n = s.order;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      int x = s.at(r, c);
      bool hole_cell = s.in_hole(r) && s.in_hole(c);
      if (hole_cell && x != kEmptyCell)
        rep.fail("hole cell " + detail::cell_name(r, c) + " must be empty");
      if (!hole_cell && x == kEmptyCell)
        rep.fail("cell " + detail::cell_name(r, c) + " must hold a symbol");
    }

  std::vector<int> seen(static_cast<size_t>(n), 0);
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      int x = s.at(r, c);
      if (x == kEmptyCell || x < 0 || x >= n) continue;
      if (++seen[x] == 2)
        rep.fail("row " + std::to_string(r + 1) + " repeats symbol " + std::to_string(x + 1));
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      int x = s.at(r, c);
      if (x == kEmptyCell || x < 0 || x >= n) continue;
      if (++seen[x] == 2)
        rep.fail("column " + std::to_string(c + 1) + " repeats symbol " + std::to_string(x + 1));
    }
  }

  for (int h : s.hole) {
    for (int c = 0; c < n; ++c) {
      int x = s.at(h, c);
      if (x != kEmptyCell && s.in_hole(x))
        rep.fail("hole symbol " + std::to_string(x + 1) + " appears in hole row " +
                 std::to_string(h + 1));
    }
    for (int r = 0; r < n; ++r) {
      int x = s.at(r, h);
      if (x != kEmptyCell && s.in_hole(x))
        rep.fail("hole symbol " + std::to_string(x + 1) + " appears in hole column " +
                 std::to_string(h + 1));
    }
  }
  return rep;
}

/// Orthogonality of two squares sharing order and hole: superimposing them
/// over the visible cells must give every ordered pair outside hole x hole
/// exactly once.  Mismatched order or hole is an input error, not a report.
inline Report verify_orthogonal(const IncompleteSquare& a, const IncompleteSquare& b) {
  if (a.order != b.order) throw InputError("orthogonality check needs equal orders");
  if (a.hole != b.hole) throw InputError("orthogonality check needs identical holes");
  Report rep{"orthogonal pair", {}};
  bool shapes = detail::square_shape_ok(a, rep) && detail::square_shape_ok(b, rep);
  if (!shapes) return rep;

  const int n = a.order;
  std::vector<int> count(static_cast<size_t>(n) * n, 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (a.in_hole(r) && a.in_hole(c)) continue;
      int x = a.at(r, c), y = b.at(r, c);
      if (x == kEmptyCell || y == kEmptyCell) {
        rep.fail("visible cell " + detail::cell_name(r, c) + " is empty");
        continue;
      }
      ++count[static_cast<size_t>(x) * n + y];
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int got = count[static_cast<size_t>(x) * n + y];
      bool exempt = a.in_hole(x) && a.in_hole(y);
      std::string pair =
          "(" + std::to_string(x + 1) + "," + std::to_string(y + 1) + ")";
      if (exempt && got != 0)
        rep.fail("hole pair " + pair + " appears " + std::to_string(got) + " times");
      if (!exempt && got != 1)
        rep.fail("pair " + pair + " appears " + std::to_string(got) + " times");
    }
  return rep;
}

/// Mutual orthogonality of a whole set: every square individually valid,
/// every unordered pair orthogonal.  An empty set passes vacuously.
inline Report verify_square_set(const SquareSet& ss) {
  Report rep{"square set", {}};
  for (size_t i = 0; i < ss.squares.size(); ++i) {
    const auto& s = ss.squares[i];
    if (s.order != ss.order)
      rep.fail("square " + std::to_string(i + 1) + " has mismatched order");
    if (s.hole != ss.hole)
      rep.fail("square " + std::to_string(i + 1) + " has mismatched hole");
    Report r = verify_incomplete_latin(s);
    for (auto& v : r.violations)
      rep.fail("square " + std::to_string(i + 1) + ": " + v);
  }
  if (!rep.pass()) return rep;
  for (size_t i = 0; i < ss.squares.size(); ++i)
    for (size_t j = i + 1; j < ss.squares.size(); ++j) {
      Report r = verify_orthogonal(ss.squares[i], ss.squares[j]);
      for (auto& v : r.violations)
        rep.fail("squares " + std::to_string(i + 1) + "," + std::to_string(j + 1) + ": " + v);
    }
  return rep;
}

/// Idempotence: cell (i,i) holds i for every non-hole i; hole diagonal empty.
inline Report verify_idempotent(const IncompleteSquare& s) {
  Report rep{"idempotent diagonal", {}};
  if (!detail::square_shape_ok(s, rep)) return rep;
  for (int i = 0; i < s.order; ++i) {
    int x = s.at(i, i);
    if (s.in_hole(i)) {
      if (x != kEmptyCell)
        rep.fail("hole diagonal cell " + detail::cell_name(i, i) + " must be empty");
    } else if (x != i) {
      rep.fail("diagonal cell " + detail::cell_name(i, i) + " holds " +
               std::to_string(x + 1) + ", expected " + std::to_string(i + 1));
    }
  }
  return rep;
}

namespace detail {

inline bool design_shape_ok(const BlockDesign& d, Report& rep) {
  bool ok = true;
  if (d.v < 1) {
    rep.fail("point count must be >= 1");
    return false;
  }
  for (int p : d.hole)
    if (p < 0 || p >= d.v) {
      rep.fail("hole point out of range");
      ok = false;
    }
  if (!std::is_sorted(d.hole.begin(), d.hole.end()) ||
      std::adjacent_find(d.hole.begin(), d.hole.end()) != d.hole.end()) {
    rep.fail("hole must be a sorted set");
    ok = false;
  }
  for (size_t i = 0; i < d.blocks.size(); ++i) {
    const auto& b = d.blocks[i];
    auto sorted = b;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      rep.fail("block " + std::to_string(i + 1) + " repeats a point");
      ok = false;
    }
    for (int p : b)
      if (p < 0 || p >= d.v) {
        rep.fail("block " + std::to_string(i + 1) + " has a point out of range");
        ok = false;
      }
  }
  return ok;
}

inline std::string point_pair(int a, int b) {
  return "{" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "}";
}

}  // namespace detail

/// PBD/IPBD axioms against a block-size set: sizes within K, hole pairs
/// uncovered, every other pair covered exactly once.  An empty hole gives
/// exactly the PBD axioms.
inline Report verify_block_design(const BlockDesign& d, const BlockSizeSet& K) {
  Report rep{"block design", {}};
  if (!detail::design_shape_ok(d, rep)) return rep;

  for (size_t i = 0; i < d.blocks.size(); ++i)
    if (!K.contains(static_cast<long long>(d.blocks[i].size())))
      rep.fail("block " + std::to_string(i + 1) + " has size " +
               std::to_string(d.blocks[i].size()) + " outside K");

  const int v = d.v;
  std::vector<int> count(static_cast<size_t>(v) * v, 0);
  for (const auto& b : d.blocks)
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = i + 1; j < b.size(); ++j) {
        int x = std::min(b[i], b[j]), y = std::max(b[i], b[j]);
        ++count[static_cast<size_t>(x) * v + y];
      }
  for (int x = 0; x < v; ++x)
    for (int y = x + 1; y < v; ++y) {
      int got = count[static_cast<size_t>(x) * v + y];
      bool exempt = d.in_hole(x) && d.in_hole(y);
      if (exempt && got != 0)
        rep.fail("hole pair " + detail::point_pair(x, y) + " covered " +
                 std::to_string(got) + " times");
      if (!exempt && got != 1)
        rep.fail("pair " + detail::point_pair(x, y) + " covered " +
                 std::to_string(got) + " times");
    }
  return rep;
}

/// GDD/IGDD axioms: groups partition the points, blocks meet each group at
/// most once, and a cross-group pair is covered exactly once unless both
/// points lie in their groups' holes (then never).
inline Report verify_grouped_design(const GroupedDesign& d, const BlockSizeSet& K) {
  Report rep{"grouped design", {}};
  if (d.v < 1) {
    rep.fail("point count must be >= 1");
    return rep;
  }
  if (d.group_holes.size() != d.groups.size()) {
    rep.fail("group_holes must align with groups");
    return rep;
  }

  const int v = d.v;
  std::vector<int> group_of(static_cast<size_t>(v), -1);
  std::vector<bool> holed(static_cast<size_t>(v), false);
  for (size_t g = 0; g < d.groups.size(); ++g) {
    for (int p : d.groups[g]) {
      if (p < 0 || p >= v) {
        rep.fail("group " + std::to_string(g + 1) + " has a point out of range");
        return rep;
      }
      if (group_of[p] != -1)
        rep.fail("point " + std::to_string(p + 1) + " appears in two groups");
      group_of[p] = static_cast<int>(g);
    }
    for (int p : d.group_holes[g]) {
      if (p < 0 || p >= v) {
        rep.fail("group hole " + std::to_string(g + 1) + " has a point out of range");
        return rep;
      }
      if (group_of[p] != static_cast<int>(g))
        rep.fail("group hole point " + std::to_string(p + 1) + " not inside its group");
      holed[p] = true;
    }
  }
  for (int p = 0; p < v; ++p)
    if (group_of[p] == -1)
      rep.fail("point " + std::to_string(p + 1) + " lies in no group");
  if (!rep.pass()) return rep;

  for (size_t i = 0; i < d.blocks.size(); ++i) {
    const auto& b = d.blocks[i];
    if (!K.contains(static_cast<long long>(b.size())))
      rep.fail("block " + std::to_string(i + 1) + " has size " +
               std::to_string(b.size()) + " outside K");
    std::vector<int> met;
    for (int p : b) {
      if (p < 0 || p >= v) {
        rep.fail("block " + std::to_string(i + 1) + " has a point out of range");
        return rep;
      }
      met.push_back(group_of[p]);
    }
    std::sort(met.begin(), met.end());
    if (std::adjacent_find(met.begin(), met.end()) != met.end())
      rep.fail("block " + std::to_string(i + 1) + " meets a group twice");
  }

  std::vector<int> count(static_cast<size_t>(v) * v, 0);
  for (const auto& b : d.blocks)
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = i + 1; j < b.size(); ++j) {
        int x = std::min(b[i], b[j]), y = std::max(b[i], b[j]);
        ++count[static_cast<size_t>(x) * v + y];
      }
  for (int x = 0; x < v; ++x)
    for (int y = x + 1; y < v; ++y) {
      int got = count[static_cast<size_t>(x) * v + y];
      if (group_of[x] == group_of[y]) {
        if (got != 0)
          rep.fail("same-group pair " + detail::point_pair(x, y) + " covered " +
                   std::to_string(got) + " times");
        continue;
      }
      bool exempt = holed[x] && holed[y];
      if (exempt && got != 0)
        rep.fail("hole pair " + detail::point_pair(x, y) + " covered " +
                 std::to_string(got) + " times");
      if (!exempt && got != 1)
        rep.fail("cross-group pair " + detail::point_pair(x, y) + " covered " +
                 std::to_string(got) + " times");
    }
  return rep;
}

/// Resolvability: each parallel class must partition the full point set.
/// A design without a resolution is an input error.
inline Report verify_resolution(const BlockDesign& d) {
  if (!d.resolution) throw InputError("design carries no resolution");
  Report rep{"resolution", {}};
  if (!detail::design_shape_ok(d, rep)) return rep;
  if (d.resolution->size() != d.blocks.size()) {
    rep.fail("resolution must assign a class to every block");
    return rep;
  }
  int classes = d.class_count();
  std::vector<int> seen(static_cast<size_t>(d.v), 0);
  for (int c = 0; c < classes; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (size_t i = 0; i < d.blocks.size(); ++i)
      if ((*d.resolution)[i] == c)
        for (int p : d.blocks[i]) ++seen[p];
    for (int p = 0; p < d.v; ++p)
      if (seen[p] != 1)
        rep.fail("class " + std::to_string(c + 1) + " covers point " +
                 std::to_string(p + 1) + " " + std::to_string(seen[p]) + " times");
  }
  return rep;
}

/// Structural form of the hole-size bound's equality case: every block has
/// size exactly min K and meets the hole in exactly one point.
inline Report verify_equality_case(const BlockDesign& d, const BlockSizeSet& K) {
  Report rep{"hole-bound equality structure", {}};
  if (!detail::design_shape_ok(d, rep)) return rep;
  const long long k = K.min_size();
  for (size_t i = 0; i < d.blocks.size(); ++i) {
    const auto& b = d.blocks[i];
    if (static_cast<long long>(b.size()) != k)
      rep.fail("block " + std::to_string(i + 1) + " has size " +
               std::to_string(b.size()) + ", expected " + std::to_string(k));
    int met = 0;
    for (int p : b)
      if (d.in_hole(p)) ++met;
    if (met != 1)
      rep.fail("block " + std::to_string(i + 1) + " meets the hole " +
               std::to_string(met) + " times");
  }
  return rep;
}

}  // namespace latinkit
