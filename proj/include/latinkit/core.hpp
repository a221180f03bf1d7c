#pragma once

// Core value types for latin squares with holes and the block designs that
// generate them.  Everything here is a plain value: build once, then share
// freely across threads.  Rows, columns, symbols and points are 0-based in
// memory; the I/O layer converts to the 1-based external convention.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace latinkit {

using BigInt = boost::multiprecision::cpp_int;

/// Thrown when an operation is handed structurally unusable input.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a construction cannot produce (or verify) its output.
struct ConstructError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kEmptyCell = -1;

/// An n x n grid over symbols 0..n-1 with a hole M.  Cells with both
/// coordinates in M are empty; a plain latin square has an empty hole.
struct IncompleteSquare {
  int order = 0;
  std::vector<int> hole;   // sorted symbol/row/column indices
  std::vector<int> cells;  // row-major, kEmptyCell or 0..order-1

  static IncompleteSquare blank(int n, std::vector<int> hole_points = {}) {
    if (n < 1) throw InputError("square order must be >= 1");
    std::sort(hole_points.begin(), hole_points.end());
    for (int h : hole_points)
      if (h < 0 || h >= n) throw InputError("hole index out of range");
    if (std::adjacent_find(hole_points.begin(), hole_points.end()) != hole_points.end())
      throw InputError("repeated hole index");
    IncompleteSquare s;
    s.order = n;
    s.hole = std::move(hole_points);
    s.cells.assign(static_cast<size_t>(n) * n, kEmptyCell);
    return s;
  }

  int at(int r, int c) const { return cells[static_cast<size_t>(r) * order + c]; }
  void set(int r, int c, int symbol) { cells[static_cast<size_t>(r) * order + c] = symbol; }

  bool in_hole(int i) const { return std::binary_search(hole.begin(), hole.end(), i); }
  int hole_size() const { return static_cast<int>(hole.size()); }

  friend bool operator==(const IncompleteSquare&, const IncompleteSquare&) = default;
};

/// t squares sharing one order and one hole: a t-IMOLS(n;m) candidate.
/// The order and hole are stored explicitly so an empty set still carries
/// its parameters (a prime power q=2 yields q-2 = 0 idempotent squares).
struct SquareSet {
  int order = 0;
  std::vector<int> hole;
  std::vector<IncompleteSquare> squares;

  static SquareSet of(std::vector<IncompleteSquare> squares) {
    if (squares.empty()) throw InputError("square set needs at least one square");
    SquareSet ss;
    ss.order = squares.front().order;
    ss.hole = squares.front().hole;
    ss.squares = std::move(squares);
    return ss;
  }

  int count() const { return static_cast<int>(squares.size()); }
  int hole_size() const { return static_cast<int>(hole.size()); }

  friend bool operator==(const SquareSet&, const SquareSet&) = default;
};

/// Point set [v] with a block list; covers PBDs (empty hole), IPBDs (hole
/// pairs exempt from coverage) and, with `resolution`, resolvable designs.
/// `resolution`, when present, assigns a parallel-class id to each block.
struct BlockDesign {
  int v = 0;
  std::vector<int> hole;                  // sorted point indices
  std::vector<std::vector<int>> blocks;   // each sorted; list sorted lexicographically
  std::optional<std::vector<int>> resolution;  // class id per block

  bool in_hole(int p) const { return std::binary_search(hole.begin(), hole.end(), p); }
  int hole_size() const { return static_cast<int>(hole.size()); }

  int class_count() const {
    if (!resolution || resolution->empty()) return 0;
    return *std::max_element(resolution->begin(), resolution->end()) + 1;
  }

  friend bool operator==(const BlockDesign&, const BlockDesign&) = default;
};

/// Point set partitioned into groups, each group with an optional hole
/// subset; covers GDDs, IGDDs and transversal designs.
struct GroupedDesign {
  int v = 0;
  std::vector<std::vector<int>> groups;
  std::vector<std::vector<int>> group_holes;  // group_holes[i] subset of groups[i]
  std::vector<std::vector<int>> blocks;

  int group_count() const { return static_cast<int>(groups.size()); }

  std::vector<int> type() const {
    std::vector<int> t;
    t.reserve(groups.size());
    for (const auto& g : groups) t.push_back(static_cast<int>(g.size()));
    return t;
  }

  int total_hole_size() const {
    int w = 0;
    for (const auto& h : group_holes) w += static_cast<int>(h.size());
    return w;
  }

  friend bool operator==(const GroupedDesign&, const GroupedDesign&) = default;
};

/// A set K of block sizes with its divisibility invariants
/// alpha = gcd{k-1}, beta = gcd{k(k-1)}, gamma = beta/alpha.
struct BlockSizeSet {
  std::vector<long long> sizes;  // sorted, each >= 2
  BigInt alpha;
  BigInt beta;
  BigInt gamma;

  long long min_size() const { return sizes.front(); }
  bool contains(long long k) const {
    return std::binary_search(sizes.begin(), sizes.end(), k);
  }
};

enum class PlanStatus { Materialized, CertificateOnly };

/// One step of a construction plan: a named step, its integer parameters,
/// and the ingredient steps below it.  Certificate-only nodes record the
/// hypothesis they rely on instead of a concrete design.
struct PlanNode {
  std::string step;
  std::vector<std::pair<std::string, BigInt>> params;
  PlanStatus status = PlanStatus::CertificateOnly;
  std::string note;  // hypothesis or remark carried by the node
  std::vector<PlanNode> children;

  PlanNode& with(const std::string& key, BigInt value) {
    params.emplace_back(key, std::move(value));
    return *this;
  }
};

struct ConstructionPlan {
  PlanNode root;

  bool materialized() const { return root.status == PlanStatus::Materialized; }
};

namespace detail {

inline void check_point_list(const std::vector<int>& pts, int v, const char* what) {
  for (int p : pts)
    if (p < 0 || p >= v) throw InputError(std::string(what) + ": point index out of range");
  for (size_t i = 1; i < pts.size(); ++i)
    if (pts[i] == pts[i - 1]) throw InputError(std::string(what) + ": repeated point");
}

}  // namespace detail

/// Sorts blocks (and groups) into the canonical order used for design
/// equality.  Throws InputError on malformed input; idempotent otherwise.
inline BlockDesign canonicalize(const BlockDesign& d) {
  if (d.v < 0) throw InputError("negative point count");
  BlockDesign out = d;
  std::sort(out.hole.begin(), out.hole.end());
  detail::check_point_list(out.hole, out.v, "hole");
  for (auto& b : out.blocks) {
    std::sort(b.begin(), b.end());
    detail::check_point_list(b, out.v, "block");
    if (b.size() < 2) throw InputError("block with fewer than 2 points");
  }
  if (out.resolution) {
    if (out.resolution->size() != out.blocks.size())
      throw InputError("resolution must assign a class to every block");
    for (int c : *out.resolution)
      if (c < 0) throw InputError("negative parallel-class id");
  }

  if (out.resolution) {
    std::vector<size_t> idx(out.blocks.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
      return out.blocks[a] < out.blocks[b];
    });
    std::vector<std::vector<int>> blocks;
    std::vector<int> raw_class;
    blocks.reserve(idx.size());
    raw_class.reserve(idx.size());
    for (size_t i : idx) {
      blocks.push_back(std::move(out.blocks[i]));
      raw_class.push_back((*out.resolution)[i]);
    }
    // renumber classes in order of first appearance
    std::map<int, int> renumber;
    std::vector<int> classes;
    classes.reserve(raw_class.size());
    for (int c : raw_class) {
      auto [it, inserted] = renumber.emplace(c, static_cast<int>(renumber.size()));
      classes.push_back(it->second);
    }
    out.blocks = std::move(blocks);
    out.resolution = std::move(classes);
  } else {
    std::sort(out.blocks.begin(), out.blocks.end());
  }
  return out;
}

inline GroupedDesign canonicalize(const GroupedDesign& d) {
  if (d.v < 0) throw InputError("negative point count");
  if (d.group_holes.size() != d.groups.size())
    throw InputError("group_holes must align with groups");
  GroupedDesign out = d;
  for (size_t i = 0; i < out.groups.size(); ++i) {
    std::sort(out.groups[i].begin(), out.groups[i].end());
    detail::check_point_list(out.groups[i], out.v, "group");
    std::sort(out.group_holes[i].begin(), out.group_holes[i].end());
    detail::check_point_list(out.group_holes[i], out.v, "group hole");
    if (!std::includes(out.groups[i].begin(), out.groups[i].end(),
                       out.group_holes[i].begin(), out.group_holes[i].end()))
      throw InputError("group hole not inside its group");
  }
  for (auto& b : out.blocks) {
    std::sort(b.begin(), b.end());
    detail::check_point_list(b, out.v, "block");
    if (b.size() < 2) throw InputError("block with fewer than 2 points");
  }
  std::vector<size_t> idx(out.groups.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    return out.groups[a] < out.groups[b];
  });
  std::vector<std::vector<int>> groups, holes;
  groups.reserve(idx.size());
  holes.reserve(idx.size());
  for (size_t i : idx) {
    groups.push_back(std::move(out.groups[i]));
    holes.push_back(std::move(out.group_holes[i]));
  }
  out.groups = std::move(groups);
  out.group_holes = std::move(holes);
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

/// Design equality: equality of canonical forms.
inline bool design_equal(const BlockDesign& a, const BlockDesign& b) {
  return canonicalize(a) == canonicalize(b);
}

inline bool design_equal(const GroupedDesign& a, const GroupedDesign& b) {
  return canonicalize(a) == canonicalize(b);
}

/// Block sizes actually present in a design, sorted and deduplicated.
inline std::vector<long long> observed_sizes(const std::vector<std::vector<int>>& blocks) {
  std::set<long long> s;
  for (const auto& b : blocks) s.insert(static_cast<long long>(b.size()));
  return {s.begin(), s.end()};
}

}  // namespace latinkit
