#pragma once

// File formats.  Squares travel as human-diffable text grids, designs as
// JSON with sorted arrays and fixed key order; both emit canonical bytes so
// identical objects always serialize identically.  Everything external is
// 1-based; conversion happens here and nowhere else.
//
// Square format:  line 1 "n m", line 2 the hole indices (blank when m = 0),
// then n rows of n tokens, each a symbol or "." for an empty cell.  A set
// of squares shares one header, grids separated by single blank lines.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "latinkit/core.hpp"
#include "latinkit/plan.hpp"
#include "latinkit/search.hpp"

namespace latinkit {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

inline std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

inline int parse_int(const std::string& tok, int line_no, const char* what) {
  try {
    size_t used = 0;
    int value = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("trailing");
    return value;
  } catch (const std::exception&) {
    throw InputError("line " + std::to_string(line_no) + ": " + what + " '" + tok +
                     "' is not an integer");
  }
}

}  // namespace detail

inline SquareSet parse_square_set(const std::string& text) {
  auto lines = detail::split_lines(text);
  if (lines.size() < 2) throw InputError("square file needs a header and a hole line");
  auto head = detail::tokens_of(lines[0]);
  if (head.size() != 2) throw InputError("line 1: expected 'n m'");
  int n = detail::parse_int(head[0], 1, "order");
  int m = detail::parse_int(head[1], 1, "hole size");
  if (n < 1) throw InputError("line 1: order must be >= 1");
  if (m < 0 || m > n) throw InputError("line 1: hole size out of range");

  auto hole_tokens = detail::tokens_of(lines[1]);
  if (static_cast<int>(hole_tokens.size()) != m)
    throw InputError("line 2: expected " + std::to_string(m) + " hole indices");
  std::vector<int> hole;
  for (const auto& tok : hole_tokens) {
    int h = detail::parse_int(tok, 2, "hole index");
    if (h < 1 || h > n) throw InputError("line 2: hole index out of range 1.." +
                                         std::to_string(n));
    hole.push_back(h - 1);
  }
  std::sort(hole.begin(), hole.end());
  if (std::adjacent_find(hole.begin(), hole.end()) != hole.end())
    throw InputError("line 2: repeated hole index");

  SquareSet ss;
  ss.order = n;
  ss.hole = hole;
  size_t at = 2;
  bool expect_grid = true;
  while (at < lines.size()) {
    if (!expect_grid) {
      if (!detail::tokens_of(lines[at]).empty())
        throw InputError("line " + std::to_string(at + 1) + ": expected a blank separator");
      ++at;
      expect_grid = true;
      if (at == lines.size())
        throw InputError("line " + std::to_string(at) + ": expected another grid after separator");
      continue;
    }
    if (lines.size() - at < static_cast<size_t>(n))
      throw InputError("line " + std::to_string(at + 1) + ": truncated grid");
    IncompleteSquare sq = IncompleteSquare::blank(n, hole);
    for (int r = 0; r < n; ++r) {
      int line_no = static_cast<int>(at) + r + 1;
      auto toks = detail::tokens_of(lines[at + r]);
      if (toks.size() != static_cast<size_t>(n))
        throw InputError("line " + std::to_string(line_no) + ": expected " +
                         std::to_string(n) + " cells");
      for (int c = 0; c < n; ++c) {
        bool hole_cell = sq.in_hole(r) && sq.in_hole(c);
        if (toks[c] == ".") {
          if (!hole_cell)
            throw InputError("line " + std::to_string(line_no) + ": cell (" +
                             std::to_string(r + 1) + "," + std::to_string(c + 1) +
                             ") outside the hole must hold a symbol");
          continue;
        }
        int x = detail::parse_int(toks[c], line_no, "symbol");
        if (x < 1 || x > n)
          throw InputError("line " + std::to_string(line_no) + ": symbol out of range 1.." +
                           std::to_string(n));
        if (hole_cell)
          throw InputError("line " + std::to_string(line_no) + ": hole cell (" +
                           std::to_string(r + 1) + "," + std::to_string(c + 1) +
                           ") must be empty");
        sq.set(r, c, x - 1);
      }
    }
    ss.squares.push_back(std::move(sq));
    at += static_cast<size_t>(n);
    expect_grid = false;
  }
  if (ss.squares.empty()) throw InputError("square file holds no grid");
  return ss;
}

inline IncompleteSquare parse_square(const std::string& text) {
  SquareSet ss = parse_square_set(text);
  if (ss.count() != 1) throw InputError("expected exactly one grid");
  return ss.squares.front();
}

inline std::string emit_square_set(const SquareSet& ss) {
  std::ostringstream os;
  os << ss.order << " " << ss.hole.size() << "\n";
  for (size_t i = 0; i < ss.hole.size(); ++i) os << (i ? " " : "") << ss.hole[i] + 1;
  os << "\n";
  bool first = true;
  for (const auto& sq : ss.squares) {
    if (!first) os << "\n";
    first = false;
    for (int r = 0; r < ss.order; ++r) {
      for (int c = 0; c < ss.order; ++c) {
        if (c) os << " ";
        int x = sq.at(r, c);
        if (x == kEmptyCell)
          os << ".";
        else
          os << x + 1;
      }
      os << "\n";
    }
  }
  return os.str();
}

inline std::string emit_square(const IncompleteSquare& sq) {
  SquareSet ss;
  ss.order = sq.order;
  ss.hole = sq.hole;
  ss.squares.push_back(sq);
  return emit_square_set(ss);
}

namespace detail {

inline const Json& expect_field(const Json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) throw InputError(path + ": missing key '" + key + "'");
  return *it;
}

inline int json_point(const Json& j, int v, const std::string& path) {
  if (!j.is_number_integer())
    throw InputError(path + ": expected an integer point");
  long long p = j.get<long long>();
  if (p < 1 || p > v)
    throw InputError(path + ": point " + std::to_string(p) + " out of range 1.." +
                     std::to_string(v));
  return static_cast<int>(p - 1);
}

inline std::vector<int> json_point_list(const Json& j, int v, const std::string& path) {
  if (!j.is_array()) throw InputError(path + ": expected an array");
  std::vector<int> out;
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(json_point(j[i], v, path + "[" + std::to_string(i) + "]"));
  return out;
}

inline std::vector<std::vector<int>> json_block_list(const Json& j, int v,
                                                     const std::string& path) {
  if (!j.is_array()) throw InputError(path + ": expected an array");
  std::vector<std::vector<int>> out;
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(json_point_list(j[i], v, path + "[" + std::to_string(i) + "]"));
  return out;
}

inline Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("$: not valid JSON");
  if (!j.is_object()) throw InputError("$: expected a JSON object");
  return j;
}

inline int json_v(const Json& j) {
  const Json& jv = expect_field(j, "v", "$");
  if (!jv.is_number_integer() || jv.get<long long>() < 1)
    throw InputError("$.v: expected a positive integer");
  return static_cast<int>(jv.get<long long>());
}

}  // namespace detail

inline bool json_is_grouped(const std::string& text) {
  Json j = detail::parse_json(text);
  return j.contains("groups");
}

inline BlockDesign parse_design(const std::string& text) {
  Json j = detail::parse_json(text);
  if (j.contains("groups"))
    throw InputError("$: found 'groups'; this is a grouped design");
  BlockDesign d;
  d.v = detail::json_v(j);
  if (j.contains("hole")) d.hole = detail::json_point_list(j["hole"], d.v, "$.hole");
  d.blocks = detail::json_block_list(detail::expect_field(j, "blocks", "$"), d.v, "$.blocks");
  for (size_t i = 0; i < d.blocks.size(); ++i)
    if (d.blocks[i].size() < 2)
      throw InputError("$.blocks[" + std::to_string(i) + "]: blocks need at least 2 points");
  if (j.contains("resolution")) {
    const Json& jr = j["resolution"];
    if (!jr.is_array() || jr.size() != d.blocks.size())
      throw InputError("$.resolution: expected one class id per block");
    std::vector<int> res;
    for (size_t i = 0; i < jr.size(); ++i) {
      if (!jr[i].is_number_integer() || jr[i].get<long long>() < 1)
        throw InputError("$.resolution[" + std::to_string(i) +
                         "]: expected a positive class id");
      res.push_back(static_cast<int>(jr[i].get<long long>() - 1));
    }
    d.resolution = std::move(res);
  }
  try {
    return canonicalize(d);
  } catch (const InputError& e) {
    throw InputError("$: " + std::string(e.what()));
  }
}

inline GroupedDesign parse_grouped(const std::string& text) {
  Json j = detail::parse_json(text);
  if (!j.contains("groups"))
    throw InputError("$: missing 'groups'; this is not a grouped design");
  GroupedDesign d;
  d.v = detail::json_v(j);
  const Json& jg = j["groups"];
  if (!jg.is_array()) throw InputError("$.groups: expected an array");
  for (size_t i = 0; i < jg.size(); ++i)
    d.groups.push_back(
        detail::json_point_list(jg[i], d.v, "$.groups[" + std::to_string(i) + "]"));
  if (j.contains("group_holes")) {
    const Json& jh = j["group_holes"];
    if (!jh.is_array() || jh.size() != d.groups.size())
      throw InputError("$.group_holes: expected one hole list per group");
    for (size_t i = 0; i < jh.size(); ++i)
      d.group_holes.push_back(
          detail::json_point_list(jh[i], d.v, "$.group_holes[" + std::to_string(i) + "]"));
  } else {
    d.group_holes.assign(d.groups.size(), {});
  }
  d.blocks = detail::json_block_list(detail::expect_field(j, "blocks", "$"), d.v, "$.blocks");
  for (size_t i = 0; i < d.blocks.size(); ++i)
    if (d.blocks[i].size() < 2)
      throw InputError("$.blocks[" + std::to_string(i) + "]: blocks need at least 2 points");
  try {
    return canonicalize(d);
  } catch (const InputError& e) {
    throw InputError("$: " + std::string(e.what()));
  }
}

namespace detail {

inline Json points_json(const std::vector<int>& pts) {
  Json arr = Json::array();
  for (int p : pts) arr.push_back(p + 1);
  return arr;
}

inline Json blocks_json(const std::vector<std::vector<int>>& blocks) {
  Json arr = Json::array();
  for (const auto& b : blocks) arr.push_back(points_json(b));
  return arr;
}

}  // namespace detail

inline std::string emit_design(const BlockDesign& d_in) {
  BlockDesign d = canonicalize(d_in);
  Json j;
  j["v"] = d.v;
  j["hole"] = detail::points_json(d.hole);
  j["blocks"] = detail::blocks_json(d.blocks);
  if (d.resolution) {
    Json res = Json::array();
    for (int c : *d.resolution) res.push_back(c + 1);
    j["resolution"] = std::move(res);
  }
  return j.dump(2) + "\n";
}

inline std::string emit_grouped(const GroupedDesign& d_in) {
  GroupedDesign d = canonicalize(d_in);
  Json j;
  j["v"] = d.v;
  Json groups = Json::array(), holes = Json::array();
  for (const auto& g : d.groups) groups.push_back(detail::points_json(g));
  for (const auto& h : d.group_holes) holes.push_back(detail::points_json(h));
  j["groups"] = std::move(groups);
  j["group_holes"] = std::move(holes);
  j["blocks"] = detail::blocks_json(d.blocks);
  return j.dump(2) + "\n";
}

namespace detail {

inline Json param_json(const BigInt& value) {
  static const BigInt lo = std::numeric_limits<long long>::min();
  static const BigInt hi = std::numeric_limits<long long>::max();
  if (value >= lo && value <= hi) return Json(static_cast<long long>(value));
  return Json(value.str());
}

inline Json plan_node_json(const PlanNode& node) {
  Json j;
  j["step"] = node.step;
  Json params = Json::object();
  for (const auto& [key, value] : node.params) params[key] = param_json(value);
  j["params"] = std::move(params);
  j["status"] =
      node.status == PlanStatus::Materialized ? "materialized" : "certificate-only";
  if (!node.note.empty()) j["note"] = node.note;
  if (!node.children.empty()) {
    Json kids = Json::array();
    for (const auto& child : node.children) kids.push_back(plan_node_json(child));
    j["children"] = std::move(kids);
  }
  return j;
}

}  // namespace detail

inline std::string emit_plan(const ConstructionPlan& plan) {
  return detail::plan_node_json(plan.root).dump(2) + "\n";
}

/// Run manifest for a search: parameters, outcome, node count.
inline std::string emit_manifest(const std::string& kind,
                                 const std::vector<std::pair<std::string, BigInt>>& params,
                                 SearchOutcome outcome, std::uint64_t nodes) {
  Json j;
  j["search"] = kind;
  Json p = Json::object();
  for (const auto& [key, value] : params) p[key] = detail::param_json(value);
  j["params"] = std::move(p);
  j["outcome"] = to_string(outcome);
  j["nodes"] = nodes;
  return j.dump(2) + "\n";
}

}  // namespace latinkit
