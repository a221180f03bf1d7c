#pragma once

// The gluing, expansion, filling, truncation and replacement constructions.
// Every operation takes explicit ingredient designs (or a supplier callback)
// and, unless verification is switched off, refuses to emit an output that
// fails its own verifier.  Nothing here invokes asymptotic existence: if an
// ingredient is missing, the operation fails loudly.

#include <functional>
#include <map>
#include <numeric>

#include "latinkit/admissible.hpp"
#include "latinkit/core.hpp"
#include "latinkit/galois.hpp"
#include "latinkit/verify.hpp"

namespace latinkit {

/// Idempotent template squares keyed by block size.
using GlueTemplates = std::map<int, SquareSet>;

/// Ingredient callback for Wilson expansion: receives the weight vector of
/// a master block (aligned with its sorted points; zero weights included)
/// and must return a group divisible design of exactly that type.
using GddSupplier = std::function<GroupedDesign(const std::vector<int>&)>;

/// Filler callbacks for the two filling constructions.
using GddFiller = std::function<BlockDesign(int group_size)>;
using IgddFiller = std::function<BlockDesign(int group_size, int hole_size)>;
using PbdFiller = std::function<BlockDesign(int block_size)>;

namespace detail {

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw ConstructError(msg);
}

inline void require_clean(const Report& rep, const std::string& what) {
  if (!rep.pass()) throw ConstructError(what + " failed verification:\n" + rep.to_string());
}

inline BlockSizeSet observed_K(const std::vector<std::vector<int>>& blocks) {
  return observed_size_set(blocks);
}

}  // namespace detail

/// Builds the standard template map: for every requested size k, the q-2
/// idempotent squares of the prime power k, truncated to the first t.
inline GlueTemplates auto_templates(const std::vector<long long>& sizes, int t) {
  if (t < 1) throw InputError("need t >= 1 template squares");
  GlueTemplates out;
  for (long long k : sizes) {
    if (k < 3 || k > (1 << 12))
      throw ConstructError("no idempotent templates of order " + std::to_string(k));
    SquareSet ss = idempotent_mols(static_cast<int>(k));  // throws unless prime power
    if (ss.count() < t)
      throw ConstructError("only " + std::to_string(ss.count()) +
                           " idempotent squares of order " + std::to_string(k) +
                           ", need " + std::to_string(t));
    ss.squares.resize(static_cast<size_t>(t));
    out.emplace(static_cast<int>(k), std::move(ss));
  }
  return out;
}

/// Glues idempotent template squares along the blocks of an incomplete
/// pairwise balanced design, producing t-IMOLS whose hole is the design's
/// hole.  A block through a hole point contributes its template with the
/// corresponding diagonal cell removed.  With an empty hole this is the
/// plain gluing of idempotent MOLS along a PBD.
inline SquareSet glue_ipbd(const BlockDesign& d_in, const GlueTemplates& templates, int t,
                           bool verify = true) {
  if (t < 1) throw InputError("need t >= 1");
  BlockDesign d = canonicalize(d_in);
  if (verify)
    detail::require_clean(verify_block_design(d, detail::observed_K(d.blocks)),
                          "glue input design");

  for (long long k : observed_sizes(d.blocks)) {
    auto it = templates.find(static_cast<int>(k));
    detail::require(it != templates.end(),
                    "no template of order " + std::to_string(k));
    const SquareSet& ts = it->second;
    detail::require(ts.order == static_cast<int>(k) && ts.hole.empty(),
                    "template of order " + std::to_string(k) + " malformed");
    detail::require(ts.count() >= t, "template of order " + std::to_string(k) +
                                         " has fewer than t squares");
    if (verify)
      for (int s = 0; s < t; ++s)
        detail::require_clean(verify_idempotent(ts.squares[s]),
                              "template square of order " + std::to_string(k));
  }

  SquareSet out;
  out.order = d.v;
  out.hole = d.hole;
  for (int s = 0; s < t; ++s) {
    IncompleteSquare sq = IncompleteSquare::blank(d.v, d.hole);
    for (int i = 0; i < d.v; ++i)
      if (!sq.in_hole(i)) sq.set(i, i, i);
    for (const auto& b : d.blocks) {
      const IncompleteSquare& T = templates.at(static_cast<int>(b.size())).squares[s];
      const int k = static_cast<int>(b.size());
      for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q)
          if (p != q) sq.set(b[p], b[q], b[T.at(p, q)]);
    }
    out.squares.push_back(std::move(sq));
  }

  if (verify) {
    detail::require_clean(verify_square_set(out), "glued square set");
    for (const auto& sq : out.squares)
      detail::require_clean(verify_idempotent(sq), "glued square diagonal");
  }
  return out;
}

/// Gluing along a design without a hole; the classical construction of
/// idempotent MOLS from a pairwise balanced design.
inline SquareSet glue_pbd(const BlockDesign& d, const GlueTemplates& templates, int t,
                          bool verify = true) {
  if (!d.hole.empty()) throw InputError("glue_pbd needs an empty hole; use glue_ipbd");
  return glue_ipbd(d, templates, t, verify);
}

/// Wilson's fundamental construction: replicate each point of a master GDD
/// by its weight and replace every master block by an ingredient GDD of the
/// matching type.  Weight-0 points vanish.
inline GroupedDesign wilson_expand(const GroupedDesign& master_in,
                                   const std::vector<int>& weights,
                                   const GddSupplier& ingredients, bool verify = true) {
  GroupedDesign master = canonicalize(master_in);
  if (weights.size() != static_cast<size_t>(master.v))
    throw InputError("need one weight per master point");
  for (int w : weights)
    if (w < 0) throw InputError("weights must be nonnegative");
  for (const auto& h : master.group_holes)
    if (!h.empty()) throw InputError("master must be a GDD (no group holes)");
  if (verify)
    detail::require_clean(verify_grouped_design(master, detail::observed_K(master.blocks)),
                          "master design");

  std::vector<int> offset(static_cast<size_t>(master.v) + 1, 0);
  for (int p = 0; p < master.v; ++p) offset[p + 1] = offset[p] + weights[p];

  GroupedDesign out;
  out.v = offset[master.v];
  for (const auto& g : master.groups) {
    std::vector<int> grp;
    for (int p : g)
      for (int c = 0; c < weights[p]; ++c) grp.push_back(offset[p] + c);
    if (!grp.empty()) {
      out.groups.push_back(std::move(grp));
      out.group_holes.emplace_back();
    }
  }

  for (const auto& b : master.blocks) {
    std::vector<int> wv;
    wv.reserve(b.size());
    for (int p : b) wv.push_back(weights[p]);
    GroupedDesign ing = canonicalize(ingredients(wv));
    for (const auto& h : ing.group_holes)
      detail::require(h.empty(), "ingredient must be a GDD (no group holes)");

    // match ingredient groups to the block's nonzero-weight points by size
    std::vector<std::pair<int, int>> want;  // (weight, master point)
    for (size_t i = 0; i < b.size(); ++i)
      if (wv[i] > 0) want.emplace_back(wv[i], b[i]);
    std::sort(want.begin(), want.end());
    detail::require(ing.groups.size() == want.size(),
                    "ingredient type mismatch for a master block");
    std::vector<size_t> order(ing.groups.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t a, size_t c) {
      if (ing.groups[a].size() != ing.groups[c].size())
        return ing.groups[a].size() < ing.groups[c].size();
      return ing.groups[a] < ing.groups[c];
    });
    std::vector<int> point_map(static_cast<size_t>(ing.v), -1);
    for (size_t i = 0; i < order.size(); ++i) {
      const auto& grp = ing.groups[order[i]];
      detail::require(static_cast<int>(grp.size()) == want[i].first,
                      "ingredient type mismatch for a master block");
      for (size_t r = 0; r < grp.size(); ++r)
        point_map[grp[r]] = offset[want[i].second] + static_cast<int>(r);
    }
    if (verify)
      detail::require_clean(verify_grouped_design(ing, detail::observed_K(ing.blocks)),
                            "ingredient design");
    for (const auto& ib : ing.blocks) {
      std::vector<int> nb;
      nb.reserve(ib.size());
      for (int p : ib) nb.push_back(point_map[p]);
      out.blocks.push_back(std::move(nb));
    }
  }

  out = canonicalize(out);
  if (verify)
    detail::require_clean(verify_grouped_design(out, detail::observed_K(out.blocks)),
                          "expanded design");
  return out;
}

/// Fills every group of a GDD except one, adding `extra` new points shared
/// by all fillers.  The distinguished group plus the new points become the
/// hole of the resulting incomplete pairwise balanced design.
inline BlockDesign fill_gdd(const GroupedDesign& d_in, int distinguished, int extra,
                            const GddFiller& filler, bool verify = true) {
  GroupedDesign d = canonicalize(d_in);
  if (distinguished < 0 || distinguished >= d.group_count())
    throw InputError("distinguished group index out of range");
  if (extra < 0) throw InputError("extra point count must be >= 0");
  for (const auto& h : d.group_holes)
    if (!h.empty()) throw InputError("fill_gdd needs a GDD (no group holes); use fill_igdd");
  if (verify)
    detail::require_clean(verify_grouped_design(d, detail::observed_K(d.blocks)),
                          "group divisible design");

  BlockDesign out;
  out.v = d.v + extra;
  out.blocks = d.blocks;
  out.hole = d.groups[distinguished];
  std::vector<int> fresh;
  for (int i = 0; i < extra; ++i) fresh.push_back(d.v + i);
  out.hole.insert(out.hole.end(), fresh.begin(), fresh.end());

  for (int j = 0; j < d.group_count(); ++j) {
    if (j == distinguished) continue;
    const auto& grp = d.groups[j];
    const int g = static_cast<int>(grp.size());
    BlockDesign f = canonicalize(filler(g));
    detail::require(f.v == g + extra,
                    "filler for group size " + std::to_string(g) + " has wrong point count");
    if (extra == 0)
      detail::require(f.hole_size() <= 1, "filler must be a PBD when no points are added");
    else
      detail::require(f.hole_size() == extra,
                      "filler hole must consist of the new points");
    if (verify)
      detail::require_clean(verify_block_design(f, detail::observed_K(f.blocks)),
                            "filler design");

    std::vector<int> point_map(static_cast<size_t>(f.v), -1);
    if (extra == 0) {
      for (int p = 0; p < f.v; ++p) point_map[p] = grp[p];
    } else {
      size_t at_old = 0, at_new = 0;
      for (int p = 0; p < f.v; ++p)
        if (f.in_hole(p))
          point_map[p] = fresh[at_new++];
        else
          point_map[p] = grp[at_old++];
    }
    for (const auto& fb : f.blocks) {
      std::vector<int> nb;
      nb.reserve(fb.size());
      for (int p : fb) nb.push_back(point_map[p]);
      out.blocks.push_back(std::move(nb));
    }
  }

  out = canonicalize(out);
  if (verify)
    detail::require_clean(verify_block_design(out, detail::observed_K(out.blocks)),
                          "filled design");
  return out;
}

/// Merges the holes of an IGDD into one: every group is filled with an
/// incomplete design whose hole covers the group's own hole plus the
/// `extra` new points shared by all fillers.
inline BlockDesign fill_igdd(const GroupedDesign& d_in, int extra, const IgddFiller& filler,
                             bool verify = true) {
  GroupedDesign d = canonicalize(d_in);
  if (extra < 0) throw InputError("extra point count must be >= 0");
  if (verify)
    detail::require_clean(verify_grouped_design(d, detail::observed_K(d.blocks)),
                          "incomplete group divisible design");

  BlockDesign out;
  out.v = d.v + extra;
  out.blocks = d.blocks;
  std::vector<int> fresh;
  for (int i = 0; i < extra; ++i) fresh.push_back(d.v + i);
  for (const auto& h : d.group_holes) out.hole.insert(out.hole.end(), h.begin(), h.end());
  out.hole.insert(out.hole.end(), fresh.begin(), fresh.end());

  for (int j = 0; j < d.group_count(); ++j) {
    const auto& grp = d.groups[j];
    const auto& grp_hole = d.group_holes[j];
    const int g = static_cast<int>(grp.size());
    const int h = static_cast<int>(grp_hole.size());
    BlockDesign f = canonicalize(filler(g, h));
    detail::require(f.v == g + extra, "filler for group size " + std::to_string(g) +
                                          " has wrong point count");
    if (h + extra == 0)
      detail::require(f.hole_size() <= 1, "filler must be a PBD when the merged hole is empty");
    else
      detail::require(f.hole_size() == h + extra,
                      "filler hole must cover the group hole plus the new points");
    if (verify)
      detail::require_clean(verify_block_design(f, detail::observed_K(f.blocks)),
                            "filler design");

    // hole points map onto (group hole, then new points); the rest onto the
    // group's non-hole points, all order-preservingly
    std::vector<int> hole_targets = grp_hole;
    hole_targets.insert(hole_targets.end(), fresh.begin(), fresh.end());
    std::vector<int> body_targets;
    std::set_difference(grp.begin(), grp.end(), grp_hole.begin(), grp_hole.end(),
                        std::back_inserter(body_targets));
    std::vector<int> point_map(static_cast<size_t>(f.v), -1);
    if (h + extra == 0) {
      for (int p = 0; p < f.v; ++p) point_map[p] = body_targets[p];
    } else {
      size_t at_hole = 0, at_body = 0;
      for (int p = 0; p < f.v; ++p)
        if (f.in_hole(p))
          point_map[p] = hole_targets[at_hole++];
        else
          point_map[p] = body_targets[at_body++];
    }
    for (const auto& fb : f.blocks) {
      std::vector<int> nb;
      nb.reserve(fb.size());
      for (int p : fb) nb.push_back(point_map[p]);
      out.blocks.push_back(std::move(nb));
    }
  }

  out = canonicalize(out);
  if (verify)
    detail::require_clean(verify_block_design(out, detail::observed_K(out.blocks)),
                          "filled design");
  return out;
}

/// Turns a resolvable design with uniform block size k-1 into an incomplete
/// design with block size k: one new point per parallel class, appended to
/// every block of its class; the new points form the hole.
inline BlockDesign ipbd_from_resolvable(const BlockDesign& d_in, bool verify = true) {
  BlockDesign d = canonicalize(d_in);
  if (!d.resolution) throw InputError("design carries no resolution");
  if (!d.hole.empty()) throw InputError("resolvable input must not have a hole");
  detail::require_clean(verify_resolution(d), "resolution");
  if (verify)
    detail::require_clean(verify_block_design(d, detail::observed_K(d.blocks)),
                          "resolvable design");
  auto sizes = observed_sizes(d.blocks);
  if (sizes.size() != 1) throw InputError("blocks must have one uniform size");

  const int classes = d.class_count();
  BlockDesign out;
  out.v = d.v + classes;
  for (int c = 0; c < classes; ++c) out.hole.push_back(d.v + c);
  for (size_t i = 0; i < d.blocks.size(); ++i) {
    std::vector<int> b = d.blocks[i];
    b.push_back(d.v + (*d.resolution)[i]);
    out.blocks.push_back(std::move(b));
  }

  out = canonicalize(out);
  if (verify)
    detail::require_clean(verify_block_design(out, detail::observed_K(out.blocks)),
                          "hole-completed design");
  return out;
}

/// Breaks every block into the blocks of a same-sized filler design, mapped
/// order-preservingly onto the block's points.  Point set and hole are kept.
inline BlockDesign replace_blocks(const BlockDesign& d_in, const PbdFiller& filler,
                                  bool verify = true) {
  BlockDesign d = canonicalize(d_in);
  if (verify)
    detail::require_clean(verify_block_design(d, detail::observed_K(d.blocks)),
                          "design to refine");

  std::map<int, BlockDesign> cache;
  BlockDesign out;
  out.v = d.v;
  out.hole = d.hole;
  for (const auto& b : d.blocks) {
    const int s = static_cast<int>(b.size());
    auto it = cache.find(s);
    if (it == cache.end()) {
      BlockDesign f = canonicalize(filler(s));
      detail::require(f.v == s, "filler for block size " + std::to_string(s) +
                                    " has wrong point count");
      detail::require(f.hole_size() <= 1, "filler must be a PBD");
      if (verify)
        detail::require_clean(verify_block_design(f, detail::observed_K(f.blocks)),
                              "filler design");
      it = cache.emplace(s, std::move(f)).first;
    }
    for (const auto& fb : it->second.blocks) {
      std::vector<int> nb;
      nb.reserve(fb.size());
      for (int p : fb) nb.push_back(b[p]);
      out.blocks.push_back(std::move(nb));
    }
  }

  out = canonicalize(out);
  if (verify)
    detail::require_clean(verify_block_design(out, detail::observed_K(out.blocks)),
                          "refined design");
  return out;
}

/// Deletes all but `keep` points of one group (the smallest-indexed points
/// stay).  Blocks shrink accordingly; blocks left with fewer than two
/// points vanish, as does the group if emptied.  Points are renumbered
/// contiguously.
inline GroupedDesign truncate_group(const GroupedDesign& d_in, int group_index, int keep,
                                    bool verify = true) {
  GroupedDesign d = canonicalize(d_in);
  if (group_index < 0 || group_index >= d.group_count())
    throw InputError("group index out of range");
  const auto& grp = d.groups[group_index];
  if (keep < 0 || keep > static_cast<int>(grp.size()))
    throw InputError("keep count out of range");
  if (verify)
    detail::require_clean(verify_grouped_design(d, detail::observed_K(d.blocks)),
                          "design to truncate");

  std::vector<bool> dead(static_cast<size_t>(d.v), false);
  for (size_t i = keep; i < grp.size(); ++i) dead[grp[i]] = true;
  std::vector<int> remap(static_cast<size_t>(d.v), -1);
  int next = 0;
  for (int p = 0; p < d.v; ++p)
    if (!dead[p]) remap[p] = next++;

  GroupedDesign out;
  out.v = next;
  for (size_t g = 0; g < d.groups.size(); ++g) {
    std::vector<int> ng, nh;
    for (int p : d.groups[g])
      if (!dead[p]) ng.push_back(remap[p]);
    for (int p : d.group_holes[g])
      if (!dead[p]) nh.push_back(remap[p]);
    if (!ng.empty()) {
      out.groups.push_back(std::move(ng));
      out.group_holes.push_back(std::move(nh));
    }
  }
  for (const auto& b : d.blocks) {
    std::vector<int> nb;
    for (int p : b)
      if (!dead[p]) nb.push_back(remap[p]);
    if (nb.size() >= 2) out.blocks.push_back(std::move(nb));
  }

  out = canonicalize(out);
  if (verify)
    detail::require_clean(verify_grouped_design(out, detail::observed_K(out.blocks)),
                          "truncated design");
  return out;
}

/// Fills the hole of an incomplete design with a design on exactly the hole
/// points.  The inner design's own hole (possibly empty) becomes the hole
/// of the result.
inline BlockDesign fill_hole(const BlockDesign& outer_in, const BlockDesign& inner_in,
                             bool verify = true) {
  BlockDesign outer = canonicalize(outer_in);
  BlockDesign inner = canonicalize(inner_in);
  if (inner.v != outer.hole_size())
    throw InputError("inner design must live on exactly the hole points");
  if (verify) {
    detail::require_clean(verify_block_design(outer, detail::observed_K(outer.blocks)),
                          "outer design");
    detail::require_clean(verify_block_design(inner, detail::observed_K(inner.blocks)),
                          "inner design");
  }

  BlockDesign out;
  out.v = outer.v;
  out.blocks = outer.blocks;
  for (int p : inner.hole) out.hole.push_back(outer.hole[p]);
  for (const auto& b : inner.blocks) {
    std::vector<int> nb;
    nb.reserve(b.size());
    for (int p : b) nb.push_back(outer.hole[p]);
    out.blocks.push_back(std::move(nb));
  }

  out = canonicalize(out);
  if (verify)
    detail::require_clean(verify_block_design(out, detail::observed_K(out.blocks)),
                          "filled design");
  return out;
}

}  // namespace latinkit
