#pragma once

// Shared fixtures: the worked examples every suite leans on, written with
// 1-based symbols (0 marks an empty cell) so they can be eyeballed against
// the reference grids they reproduce.

#include <vector>

#include "latinkit/latinkit.hpp"

namespace fixtures {

inline latinkit::IncompleteSquare square_from(int n, std::vector<int> hole_1based,
                                              const std::vector<std::vector<int>>& rows) {
  for (auto& h : hole_1based) --h;
  latinkit::IncompleteSquare s = latinkit::IncompleteSquare::blank(n, hole_1based);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (rows[r][c] != 0) s.set(r, c, rows[r][c] - 1);
  return s;
}

inline latinkit::BlockDesign design_from(int v, std::vector<int> hole_1based,
                                         std::vector<std::vector<int>> blocks_1based) {
  latinkit::BlockDesign d;
  d.v = v;
  for (int h : hole_1based) d.hole.push_back(h - 1);
  for (auto& b : blocks_1based) {
    for (auto& p : b) --p;
    d.blocks.push_back(std::move(b));
  }
  return latinkit::canonicalize(d);
}

// the order-5 incomplete square with hole {1,2} framing no subsquare
inline latinkit::IncompleteSquare hole5_example() {
  return square_from(5, {1, 2},
                     {{0, 0, 3, 4, 5},
                      {0, 0, 4, 5, 3},
                      {3, 4, 5, 2, 1},
                      {4, 5, 1, 3, 2},
                      {5, 3, 2, 1, 4}});
}

// the two orthogonal squares of order 4 hiding in the playing-card layout
// (ranks and suits)
inline latinkit::IncompleteSquare card_ranks() {
  return square_from(4, {},
                     {{1, 2, 3, 4}, {2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}});
}

inline latinkit::IncompleteSquare card_suits() {
  return square_from(4, {},
                     {{1, 2, 3, 4}, {3, 4, 1, 2}, {4, 3, 2, 1}, {2, 1, 4, 3}});
}

inline std::vector<std::vector<int>> fano_blocks_1based() {
  return {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
}

inline latinkit::BlockDesign fano() { return design_from(7, {}, fano_blocks_1based()); }

// the idempotent order-7 square glued from the Fano plane and the order-3
// template
inline std::vector<std::vector<int>> glued7_rows() {
  return {{1, 3, 2, 5, 4, 7, 6},
          {3, 2, 1, 6, 7, 4, 5},
          {2, 1, 3, 7, 6, 5, 4},
          {5, 6, 7, 4, 1, 2, 3},
          {4, 7, 6, 1, 5, 3, 2},
          {7, 4, 5, 2, 3, 6, 1},
          {6, 5, 4, 3, 2, 1, 7}};
}

inline latinkit::IncompleteSquare glued7() { return square_from(7, {}, glued7_rows()); }

// single-class resolvable design on two points
inline latinkit::BlockDesign two_point_resolvable() {
  latinkit::BlockDesign d;
  d.v = 2;
  d.blocks = {{0, 1}};
  d.resolution = std::vector<int>{0};
  return d;
}

// one-factorization of K8 by the circle method: point 8 fixed, the others
// rotated; 7 parallel classes of 4 disjoint edges
inline latinkit::BlockDesign k8_one_factorization() {
  latinkit::BlockDesign d;
  d.v = 8;
  d.resolution = std::vector<int>{};
  for (int c = 0; c < 7; ++c) {
    d.blocks.push_back({7, c});
    d.resolution->push_back(c);
    for (int i = 1; i <= 3; ++i) {
      int a = (c + i) % 7, b = (c + 7 - i) % 7;
      d.blocks.push_back({std::min(a, b), std::max(a, b)});
      d.resolution->push_back(c);
    }
  }
  return latinkit::canonicalize(d);
}

inline latinkit::GroupedDesign td(int k, int n) {
  latinkit::SquareSet ss;
  ss.order = n;
  if (k > 2) {
    ss = latinkit::mols_from_field(n);
    ss.squares.resize(static_cast<size_t>(k - 2));
  }
  return latinkit::td_from_mols(ss);
}

}  // namespace fixtures
