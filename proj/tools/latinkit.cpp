// latinkit: construct, verify, plan and search latin squares with holes and
// the block designs that generate them.
//
// Exit codes: 0 success / verification pass, 1 construction or verification
// failure (including a search that finds nothing), 2 usage errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "latinkit/latinkit.hpp"

namespace lk = latinkit;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lk::InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw lk::InputError("cannot write " + path);
  out << content;
}

std::vector<long long> parse_sizes(const std::string& csv) {
  std::vector<long long> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoll(tok));
  }
  if (out.empty()) throw lk::InputError("empty block size list");
  return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoi(tok));
  }
  return out;
}

int report_and_exit(const lk::Report& rep) {
  std::cout << rep.to_string() << "\n";
  return rep.pass() ? 0 : 1;
}

int print_conditions(const std::vector<lk::Condition>& cs) {
  bool all = true;
  for (const auto& c : cs) {
    std::cout << (c.holds ? "PASS" : "FAIL") << "  " << c.name << ": " << c.detail << "\n";
    all = all && c.holds;
  }
  std::cout << (all ? "admissible" : "not admissible") << "\n";
  return all ? 0 : 1;
}

bool looks_like_json(const std::string& text) {
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
    return ch == '{';
  }
  return false;
}

// --- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string file;
  std::string kind = "auto";
  std::string sizes_csv;
};

int run_verify(const VerifyArgs& args) {
  std::string text = read_file(args.file);
  std::string kind = args.kind;
  if (kind == "auto") {
    if (looks_like_json(text))
      kind = lk::json_is_grouped(text) ? "grouped" : "design";
    else
      kind = lk::parse_square_set(text).count() == 1 ? "square" : "set";
  }

  if (kind == "square") {
    return report_and_exit(lk::verify_incomplete_latin(lk::parse_square(text)));
  }
  if (kind == "set") {
    return report_and_exit(lk::verify_square_set(lk::parse_square_set(text)));
  }
  if (kind == "design") {
    lk::BlockDesign d = lk::parse_design(text);
    auto sizes =
        args.sizes_csv.empty() ? lk::observed_sizes(d.blocks) : parse_sizes(args.sizes_csv);
    if (sizes.empty()) sizes.push_back(2);
    lk::Report rep = lk::verify_block_design(d, lk::alpha_beta(sizes));
    if (d.resolution) {
      lk::Report res = lk::verify_resolution(d);
      for (const auto& v : res.violations) rep.fail("resolution: " + v);
    }
    return report_and_exit(rep);
  }
  if (kind == "grouped") {
    lk::GroupedDesign d = lk::parse_grouped(text);
    auto sizes =
        args.sizes_csv.empty() ? lk::observed_sizes(d.blocks) : parse_sizes(args.sizes_csv);
    if (sizes.empty()) sizes.push_back(2);
    return report_and_exit(lk::verify_grouped_design(d, lk::alpha_beta(sizes)));
  }
  throw lk::InputError("unknown kind '" + kind + "'");
}

// --- construct helpers ------------------------------------------------------

lk::Report verify_any_squares(const lk::SquareSet& ss) { return lk::verify_square_set(ss); }

void emit_squares(const lk::SquareSet& ss, const std::string& out_path) {
  std::string text = lk::emit_square_set(ss);
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

void emit_block(const lk::BlockDesign& d, const std::string& out_path) {
  std::string text = lk::emit_design(d);
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

void emit_group(const lk::GroupedDesign& d, const std::string& out_path) {
  std::string text = lk::emit_grouped(d);
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

lk::GddFiller filler_from_files(const std::vector<std::string>& files, int extra) {
  auto designs = std::make_shared<std::vector<lk::BlockDesign>>();
  for (const auto& f : files) designs->push_back(lk::parse_design(read_file(f)));
  return [designs, extra](int g) -> lk::BlockDesign {
    for (const auto& d : *designs)
      if (d.v == g + extra) return d;
    throw lk::ConstructError("no filler file for group size " + std::to_string(g));
  };
}

lk::IgddFiller igdd_filler_from_files(const std::vector<std::string>& files, int extra) {
  auto designs = std::make_shared<std::vector<lk::BlockDesign>>();
  for (const auto& f : files) designs->push_back(lk::parse_design(read_file(f)));
  return [designs, extra](int g, int h) -> lk::BlockDesign {
    for (const auto& d : *designs)
      if (d.v == g + extra && d.hole_size() == h + extra) return d;
    throw lk::ConstructError("no filler file for group size " + std::to_string(g) +
                             " with hole " + std::to_string(h));
  };
}

lk::PbdFiller pbd_filler_from_files(const std::vector<std::string>& files) {
  auto designs = std::make_shared<std::vector<lk::BlockDesign>>();
  for (const auto& f : files) designs->push_back(lk::parse_design(read_file(f)));
  return [designs](int s) -> lk::BlockDesign {
    for (const auto& d : *designs)
      if (d.v == s) return d;
    throw lk::ConstructError("no filler file for block size " + std::to_string(s));
  };
}

lk::GddSupplier supplier_from_files(const std::vector<std::string>& files) {
  auto designs = std::make_shared<std::vector<lk::GroupedDesign>>();
  for (const auto& f : files) designs->push_back(lk::parse_grouped(read_file(f)));
  return [designs](const std::vector<int>& weights) -> lk::GroupedDesign {
    std::vector<int> want;
    for (int w : weights)
      if (w > 0) want.push_back(w);
    std::sort(want.begin(), want.end());
    for (const auto& d : *designs) {
      std::vector<int> have = d.type();
      std::sort(have.begin(), have.end());
      if (have == want) return d;
    }
    std::string type;
    for (size_t i = 0; i < want.size(); ++i)
      type += (i ? "," : "") + std::to_string(want[i]);
    throw lk::ConstructError("no ingredient file of type (" + type + ")");
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construction and verification toolkit for latin squares with holes"};
  app.require_subcommand(1);

  // verify
  VerifyArgs vargs;
  auto* verify = app.add_subcommand("verify", "check a file against its design axioms");
  verify->add_option("file", vargs.file, "square/set text file or design JSON")->required();
  verify->add_option("--kind", vargs.kind, "square|set|design|grouped (default: auto)")
      ->check(CLI::IsMember({"auto", "square", "set", "design", "grouped"}));
  verify->add_option("--K", vargs.sizes_csv, "block sizes, e.g. 3,4");

  // admissible
  auto* adm = app.add_subcommand("admissible", "evaluate divisibility/inequality conditions");
  adm->require_subcommand(1);
  long long a_v = 0, a_w = 0, a_g = 0, a_h = 0, a_u = 0, a_t = 0, a_n = 0, a_m = 0, a_k = 0;
  std::string a_sizes;
  auto* adm_pbd = adm->add_subcommand("pbd", "pairwise balanced design conditions");
  adm_pbd->add_option("--v", a_v)->required();
  adm_pbd->add_option("--K", a_sizes)->required();
  auto* adm_ipbd = adm->add_subcommand("ipbd", "incomplete design conditions");
  adm_ipbd->add_option("--v", a_v)->required();
  adm_ipbd->add_option("--w", a_w)->required();
  adm_ipbd->add_option("--K", a_sizes)->required();
  auto* adm_gdd = adm->add_subcommand("gdd", "uniform group divisible design conditions");
  adm_gdd->add_option("--g", a_g)->required();
  adm_gdd->add_option("--u", a_u)->required();
  adm_gdd->add_option("--K", a_sizes)->required();
  auto* adm_igdd = adm->add_subcommand("igdd", "uniform incomplete GDD conditions");
  adm_igdd->set_help_flag("--help", "print help");  // frees -h for the hole size
  adm_igdd->add_option("--g", a_g)->required();
  adm_igdd->add_option("--h", a_h)->required();
  adm_igdd->add_option("--u", a_u)->required();
  adm_igdd->add_option("--K", a_sizes)->required();
  auto* adm_imols = adm->add_subcommand("imols", "counting bound for squares with holes");
  adm_imols->add_option("--t", a_t)->required();
  adm_imols->add_option("--n", a_n)->required();
  adm_imols->add_option("--m", a_m)->required();
  auto* adm_rpbd = adm->add_subcommand("rpbd", "resolvable design congruence");
  adm_rpbd->add_option("--v", a_v)->required();
  adm_rpbd->add_option("--k", a_k)->required();

  // construct
  auto* con = app.add_subcommand("construct", "run a construction and verify its output");
  con->require_subcommand(1);
  long long c_q = 0, c_t = 0, c_k = 0, c_n = 0;
  int c_group = 0, c_keep = 0, c_extra = 0;
  std::string c_out, c_ipbd, c_templates = "auto", c_master, c_weights, c_design;
  std::string c_outer, c_inner, c_gdd, c_igdd;
  std::vector<std::string> c_ingredients, c_fillers;

  auto* con_mols = con->add_subcommand("mols", "complete set of MOLS from a field");
  con_mols->add_option("--q", c_q, "prime power order")->required();
  con_mols->add_option("--t", c_t, "keep only the first t squares");
  con_mols->add_option("--out", c_out);
  auto* con_idem = con->add_subcommand("idempotent-mols", "idempotent MOLS from a field");
  con_idem->add_option("--q", c_q, "prime power order")->required();
  con_idem->add_option("--t", c_t, "keep only the first t squares");
  con_idem->add_option("--out", c_out);
  auto* con_td = con->add_subcommand("td", "transversal design from field MOLS");
  con_td->add_option("--k", c_k, "group count")->required();
  con_td->add_option("--n", c_n, "group size (prime power unless k <= 3)")->required();
  con_td->add_option("--out", c_out);
  auto* con_imols = con->add_subcommand("imols", "glue idempotent templates along a design");
  con_imols->add_option("--ipbd", c_ipbd, "design JSON supplying the hole")->required();
  con_imols->add_option("--t", c_t, "number of squares")->required();
  con_imols->add_option("--templates", c_templates, "template source (auto)");
  con_imols->add_option("--out", c_out);
  auto* con_wilson = con->add_subcommand("wilson", "weighted expansion of a master design");
  con_wilson->add_option("--master", c_master)->required();
  con_wilson->add_option("--weights", c_weights, "uniform weight or one per point")->required();
  con_wilson->add_option("--ingredient", c_ingredients, "ingredient design JSON")->required();
  con_wilson->add_option("--out", c_out);
  auto* con_fill = con->add_subcommand("fill-gdd", "fill all groups but one");
  con_fill->add_option("--gdd", c_gdd)->required();
  con_fill->add_option("--group", c_group, "index of the group kept as hole")->required();
  con_fill->add_option("--extra", c_extra, "new points shared by the fillers");
  con_fill->add_option("--filler", c_fillers, "filler design JSON")->required();
  con_fill->add_option("--out", c_out);
  auto* con_filli = con->add_subcommand("fill-igdd", "merge the holes of an incomplete GDD");
  con_filli->add_option("--igdd", c_igdd)->required();
  con_filli->add_option("--extra", c_extra, "new points shared by the fillers");
  con_filli->add_option("--filler", c_fillers, "filler design JSON")->required();
  con_filli->add_option("--out", c_out);
  auto* con_res = con->add_subcommand("from-resolvable", "grow a hole from parallel classes");
  con_res->add_option("--design", c_design)->required();
  con_res->add_option("--out", c_out);
  auto* con_rep = con->add_subcommand("replace-blocks", "refine blocks through fillers");
  con_rep->add_option("--design", c_design)->required();
  con_rep->add_option("--filler", c_fillers, "filler design JSON")->required();
  con_rep->add_option("--out", c_out);
  auto* con_trunc = con->add_subcommand("truncate", "delete points from one group");
  con_trunc->add_option("--design", c_design)->required();
  con_trunc->add_option("--group", c_group)->required();
  con_trunc->add_option("--keep", c_keep)->required();
  con_trunc->add_option("--out", c_out);
  auto* con_fh = con->add_subcommand("fill-hole", "fill a hole with an inner design");
  con_fh->add_option("--outer", c_outer)->required();
  con_fh->add_option("--inner", c_inner)->required();
  con_fh->add_option("--out", c_out);

  // plan
  auto* plan = app.add_subcommand("plan", "emit a construction plan");
  plan->require_subcommand(1);
  long long p_t = 0, p_n = 0, p_m = 0;
  bool p_mat = false;
  std::string p_ipbd, p_out, p_plan_out;
  auto* plan_imols_cmd = plan->add_subcommand("imols", "plan t squares of order n, hole m");
  plan_imols_cmd->add_option("--t", p_t)->required();
  plan_imols_cmd->add_option("--n", p_n)->required();
  plan_imols_cmd->add_option("--m", p_m)->required();
  plan_imols_cmd->add_flag("--materialize", p_mat, "execute the plan and write squares");
  plan_imols_cmd->add_option("--ipbd", p_ipbd, "caller-supplied hole design JSON");
  plan_imols_cmd->add_option("--out", p_out, "square set output path");
  plan_imols_cmd->add_option("--plan-out", p_plan_out, "plan JSON output path");

  // search
  auto* search = app.add_subcommand("search", "complete backtracking oracle");
  search->require_subcommand(1);
  long long s_n = 0, s_m = 0, s_t = 1, s_v = 0, s_w = 0;
  std::uint64_t s_budget = 10'000'000;
  std::string s_out, s_manifest, s_sizes, s_hole;
  auto* search_imols = search->add_subcommand("imols", "search squares with a common hole");
  search_imols->add_option("--n", s_n)->required();
  search_imols->add_option("--m", s_m)->required();
  search_imols->add_option("--t", s_t)->required();
  search_imols->add_option("--hole", s_hole, "explicit hole indices, e.g. 1,2");
  search_imols->add_option("--budget", s_budget, "node expansion budget");
  search_imols->add_option("--out", s_out);
  search_imols->add_option("--manifest", s_manifest);
  auto* search_design = search->add_subcommand("design", "search a (holey) block design");
  search_design->add_option("--v", s_v)->required();
  search_design->add_option("--w", s_w);
  search_design->add_option("--K", s_sizes)->required();
  search_design->add_option("--budget", s_budget, "node expansion budget");
  search_design->add_option("--out", s_out);
  search_design->add_option("--manifest", s_manifest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) return run_verify(vargs);

    if (*adm_pbd) return print_conditions(lk::pbd_conditions(a_v, lk::alpha_beta(parse_sizes(a_sizes))));
    if (*adm_ipbd) {
      auto K = lk::alpha_beta(parse_sizes(a_sizes));
      auto cs = lk::ipbd_conditions(a_v, a_w, K);
      cs.push_back(lk::ipbd_inequality_condition(a_v, a_w, K));
      return print_conditions(cs);
    }
    if (*adm_gdd) return print_conditions(lk::gdd_conditions(a_g, a_u, lk::alpha_beta(parse_sizes(a_sizes))));
    if (*adm_igdd)
      return print_conditions(lk::igdd_conditions(a_g, a_h, a_u, lk::alpha_beta(parse_sizes(a_sizes))));
    if (*adm_imols) return print_conditions({lk::imols_condition(a_t, a_n, a_m)});
    if (*adm_rpbd) return print_conditions({lk::rpbd_condition(a_v, a_k)});

    if (*con_mols || *con_idem) {
      lk::SquareSet ss = *con_mols ? lk::mols_from_field(static_cast<int>(c_q))
                                   : lk::idempotent_mols(static_cast<int>(c_q));
      if (c_t > 0) {
        if (c_t > ss.count())
          throw lk::ConstructError("only " + std::to_string(ss.count()) + " squares available");
        ss.squares.resize(static_cast<size_t>(c_t));
      }
      if (ss.squares.empty())
        std::cout << "warning: 0 squares at this order; nothing written\n";
      lk::Report rep = verify_any_squares(ss);
      std::cout << rep.to_string() << "\n";
      if (!rep.pass()) return 1;
      if (!ss.squares.empty()) emit_squares(ss, c_out);
      return 0;
    }
    if (*con_td) {
      lk::SquareSet ss;
      if (c_k < 2) throw lk::InputError("need k >= 2");
      if (c_k == 2) {
        ss.order = static_cast<int>(c_n);
      } else {
        ss = lk::mols_from_field(static_cast<int>(c_n));
        if (c_k - 2 > ss.count())
          throw lk::ConstructError("not enough squares for k = " + std::to_string(c_k));
        ss.squares.resize(static_cast<size_t>(c_k - 2));
      }
      lk::GroupedDesign td = lk::td_from_mols(ss);
      lk::Report rep = lk::verify_grouped_design(td, lk::alpha_beta({c_k}));
      std::cout << rep.to_string() << "\n";
      if (!rep.pass()) return 1;
      emit_group(td, c_out);
      return 0;
    }
    if (*con_imols) {
      lk::BlockDesign d = lk::parse_design(read_file(c_ipbd));
      if (c_templates != "auto") throw lk::InputError("only --templates auto is supported");
      auto templates = lk::auto_templates(lk::observed_sizes(d.blocks), static_cast<int>(c_t));
      lk::SquareSet ss = lk::glue_ipbd(d, templates, static_cast<int>(c_t));
      lk::Report rep = verify_any_squares(ss);
      std::cout << rep.to_string() << "\n";
      if (!rep.pass()) return 1;
      emit_squares(ss, c_out);
      return 0;
    }
    if (*con_wilson) {
      lk::GroupedDesign master = lk::parse_grouped(read_file(c_master));
      std::vector<int> weights = parse_int_list(c_weights);
      if (weights.size() == 1) weights.assign(static_cast<size_t>(master.v), weights[0]);
      lk::GroupedDesign out = lk::wilson_expand(master, weights, supplier_from_files(c_ingredients));
      lk::Report rep = lk::verify_grouped_design(out, lk::observed_size_set(out.blocks));
      std::cout << rep.to_string() << "\n";
      if (!rep.pass()) return 1;
      emit_group(out, c_out);
      return 0;
    }
    if (*con_fill) {
      lk::GroupedDesign d = lk::parse_grouped(read_file(c_gdd));
      lk::BlockDesign out =
          lk::fill_gdd(d, c_group - 1, c_extra, filler_from_files(c_fillers, c_extra));
      lk::Report rep = lk::verify_block_design(out, lk::observed_size_set(out.blocks));
      std::cout << rep.to_string() << "\n";
      if (!rep.pass()) return 1;
      emit_block(out, c_out);
      return 0;
    }
    if (*con_filli) {
      lk::GroupedDesign d = lk::parse_grouped(read_file(c_igdd));
      lk::BlockDesign out =
          lk::fill_igdd(d, c_extra, igdd_filler_from_files(c_fillers, c_extra));
      lk::Report rep = lk::verify_block_design(out, lk::observed_size_set(out.blocks));
      std::cout << rep.to_string() << "\n";
      if (!rep.pass()) return 1;
      emit_block(out, c_out);
      return 0;
    }
    if (*con_res) {
      lk::BlockDesign d = lk::parse_design(read_file(c_design));
      lk::BlockDesign out = lk::ipbd_from_resolvable(d);
      lk::Report rep = lk::verify_block_design(out, lk::observed_size_set(out.blocks));
      std::cout << rep.to_string() << "\n";
      if (!rep.pass()) return 1;
      emit_block(out, c_out);
      return 0;
    }
    if (*con_rep) {
      lk::BlockDesign d = lk::parse_design(read_file(c_design));
      lk::BlockDesign out = lk::replace_blocks(d, pbd_filler_from_files(c_fillers));
      lk::Report rep = lk::verify_block_design(out, lk::observed_size_set(out.blocks));
      std::cout << rep.to_string() << "\n";
      if (!rep.pass()) return 1;
      emit_block(out, c_out);
      return 0;
    }
    if (*con_trunc) {
      lk::GroupedDesign d = lk::parse_grouped(read_file(c_design));
      lk::GroupedDesign out = lk::truncate_group(d, c_group - 1, c_keep);
      lk::Report rep = lk::verify_grouped_design(out, lk::observed_size_set(out.blocks));
      std::cout << rep.to_string() << "\n";
      if (!rep.pass()) return 1;
      emit_group(out, c_out);
      return 0;
    }
    if (*con_fh) {
      lk::BlockDesign outer = lk::parse_design(read_file(c_outer));
      lk::BlockDesign inner = lk::parse_design(read_file(c_inner));
      lk::BlockDesign out = lk::fill_hole(outer, inner);
      lk::Report rep = lk::verify_block_design(out, lk::observed_size_set(out.blocks));
      std::cout << rep.to_string() << "\n";
      if (!rep.pass()) return 1;
      emit_block(out, c_out);
      return 0;
    }

    if (*plan_imols_cmd) {
      lk::PlanOptions opts;
      opts.materialize = p_mat;
      if (!p_ipbd.empty()) opts.supplied_ipbd = lk::parse_design(read_file(p_ipbd));
      lk::PlanResult res = lk::plan_imols(p_t, p_n, p_m, opts);
      std::string plan_text = lk::emit_plan(res.plan);
      if (p_plan_out.empty())
        std::cout << plan_text;
      else
        write_file(p_plan_out, plan_text);
      if (p_mat) {
        if (!res.squares) {
          std::cout << "plan not materialized\n";
          return 1;
        }
        lk::Report rep = verify_any_squares(*res.squares);
        std::cout << rep.to_string() << "\n";
        if (!rep.pass()) return 1;
        emit_squares(*res.squares, p_out);
      }
      return 0;
    }

    if (*search_imols) {
      std::vector<int> hole;
      for (int h : parse_int_list(s_hole)) hole.push_back(h - 1);
      auto res = lk::search_square_set(static_cast<int>(s_n), static_cast<int>(s_m),
                                       static_cast<int>(s_t), hole, s_budget);
      std::string manifest = lk::emit_manifest(
          "imols", {{"n", s_n}, {"m", s_m}, {"t", s_t}, {"budget", lk::BigInt(s_budget)}},
          res.outcome, res.nodes);
      if (s_manifest.empty())
        std::cout << manifest;
      else
        write_file(s_manifest, manifest);
      if (res.outcome != lk::SearchOutcome::Found) return 1;
      emit_squares(*res.set, s_out);
      return 0;
    }
    if (*search_design) {
      auto res = lk::search_block_design(static_cast<int>(s_v), static_cast<int>(s_w),
                                         parse_sizes(s_sizes), s_budget);
      std::string manifest = lk::emit_manifest(
          "design", {{"v", s_v}, {"w", s_w}, {"budget", lk::BigInt(s_budget)}}, res.outcome,
          res.nodes);
      if (s_manifest.empty())
        std::cout << manifest;
      else
        write_file(s_manifest, manifest);
      if (res.outcome != lk::SearchOutcome::Found) return 1;
      emit_block(*res.design, s_out);
      return 0;
    }
  } catch (const lk::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const lk::ConstructError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
