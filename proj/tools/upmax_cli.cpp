#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "upmax/search.hpp"

using namespace upmax;
using nlohmann::json;

namespace {

GenParams add_shape_options(CLI::App* cmd, std::vector<std::string>& p_text) {
  GenParams gp;
  cmd->add_option("--seed", gp.seed, "RNG seed");
  cmd->add_option("--n", gp.n, "dimension (1..3)");
  cmd->add_option("--m", gp.m, "number of functions/weights (1..3)");
  cmd->add_option("--p", p_text, "exponents, each > 1 (rational like 3/2)");
  cmd->add_option("--L0", gp.L0, "domain is [0, 2^L0)^n");
  cmd->add_option("--L", gp.L, "cell resolution 2^-L");
  cmd->add_option("--B", gp.B, "weight range 2^[-B..B]");
  cmd->add_option("--atoms", gp.n_atoms, "number of measure atoms");
  cmd->add_option("--zero-pct", gp.zero_pct, "percent of zero function cells");
  cmd->add_flag("--lift", gp.lift, "add boundary mass to every cell");
  return gp;
}

void apply_p(GenParams& gp, const std::vector<std::string>& p_text) {
  if (p_text.empty()) {
    gp.p.assign(gp.m, Rat(2));
    return;
  }
  gp.p.clear();
  for (auto& s : p_text) gp.p.push_back(parse_rat(s));
  gp.m = (int)gp.p.size();
}

json report_json(const ConstantReport& r) {
  json j;
  j["kind"] = r.kind;
  j["mode"] = r.mode;
  j["infinite"] = r.infinite;
  j["value"] = r.value;
  if (r.has_witness) {
    j["witness"] = {{"grid", r.witness.grid},
                    {"level", r.witness.level},
                    {"j", {r.witness.j[0], r.witness.j[1], r.witness.j[2]}}};
  }
  return j;
}

int run_constants(const std::string& path, const std::string& mode) {
  Workspace ws = build_workspace(load_instance_file(path));
  Constants C(ws, ws.fam);
  json out;
  out["instance"] = ws.inst.digest();
  out["a_p"] = report_json(C.a_p());
  out["a_p_prime"] = report_json(C.a_p_prime());
  out["c_zero"] = report_json(C.c_zero());
  out["c_infty"] = report_json(C.c_infty());
  out["rh_p"] = report_json(C.reverse_holder());
  out["b_prime"] = report_json(C.b_prime(false));
  out["b_prime_dual"] = report_json(C.b_prime(true));
  out["s_prime"] = json::array();
  out["w_infty"] = json::array();
  for (int g = 0; g < ws.fam.grids(); ++g) {
    out["s_prime"].push_back(report_json(C.s_prime(g)));
    out["w_infty"].push_back(report_json(C.w_infty_grid(g, false)));
  }
  if (mode == "oracle") out["w_infty_oracle"] = report_json(C.w_infty_oracle(false));
  std::cout << out.dump(1) << "\n";
  return 0;
}

int run_decompose(const std::string& path, int grid) {
  Workspace ws = build_workspace(load_instance_file(path));
  SparseFamily sf = decompose(ws.fam, ws.fsig, ws.mu, grid);
  auto bad = check_sparse_invariants(sf, ws.fam, ws.fsig, ws.mu);
  json out;
  out["instance"] = ws.inst.digest();
  out["grid"] = grid;
  out["empty"] = sf.empty();
  out["k_min"] = sf.k_min;
  out["k_max"] = sf.k_max;
  out["level_top"] = sf.level_top;
  out["levels"] = json::array();
  for (auto& lvl : sf.levels) {
    json jl;
    jl["k"] = lvl.k;
    jl["cubes"] = json::array();
    for (auto& sc : lvl.cubes)
      jl["cubes"].push_back({{"level", sc.cube.level},
                             {"j", {sc.cube.j[0], sc.cube.j[1], sc.cube.j[2]}},
                             {"avg", to_d(sc.avg)},
                             {"e_vol", to_d(sc.e_vol)},
                             {"box_mu", to_d(sc.box_mu)},
                             {"ehat_mu", to_d(sc.ehat_mu)}});
    out["levels"].push_back(std::move(jl));
  }
  out["violations"] = bad;
  std::cout << out.dump(1) << "\n";
  return bad.empty() ? 0 : 1;
}

int run_verify(const std::string& path, const std::string& theorem, int grid,
               int batch, GenParams gp, const std::string& csv_path) {
  std::vector<Workspace> wss;
  if (!path.empty()) {
    wss.push_back(build_workspace(load_instance_file(path)));
  } else {
    for (int b = 0; b < batch; ++b) {
      GenParams g2 = gp;
      g2.seed = gp.seed + (std::uint64_t)b;
      wss.push_back(build_workspace(generate_instance(g2)));
    }
  }
  std::vector<std::string> ids;
  if (theorem == "all")
    ids = theorem_ids();
  else
    ids.push_back(theorem);
  bool all_pass = true;
  std::ofstream csv;
  if (!csv_path.empty()) {
    csv.open(csv_path);
    csv << "theorem,instance,grid,lhs,rhs,margin,status\n";
  }
  for (auto& ws : wss)
    for (auto& id : ids) {
      VerificationResult r = verify_theorem(ws, id, grid);
      std::cout << r.to_json_line() << "\n";
      if (csv.is_open()) csv << r.to_csv_line() << "\n";
      if (!r.pass) all_pass = false;
    }
  return all_pass ? 0 : 1;
}

int run_search(const SearchParams& sp, const std::string& out_path) {
  SearchResult res = stress_search(sp);
  json out;
  out["theorem"] = sp.theorem;
  out["seed"] = sp.seed;
  out["iters"] = sp.iters;
  out["best_ratio"] = res.best_ratio;
  out["accepted"] = res.accepted;
  out["rejected_invalid"] = res.rejected_invalid;
  out["any_fail"] = res.any_fail;
  if (res.any_fail) out["first_fail"] = json::parse(res.first_fail_json);
  out["trajectory"] = res.trajectory;
  std::cout << out.dump(1) << "\n";
  if (!out_path.empty()) save_instance_file(res.best_instance, out_path);
  return res.any_fail ? 1 : 0;
}

int run_report(const std::string& dir) {
  std::map<std::string, std::pair<int, int>> tally;  // theorem -> (pass, fail)
  double worst_margin = std::numeric_limits<double>::infinity();
  std::string worst_line;
  for (auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".jsonl") continue;
    std::ifstream in(entry.path());
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      json j = json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.contains("theorem")) continue;
      auto& t = tally[j["theorem"].get<std::string>()];
      if (j.value("pass", false))
        ++t.first;
      else
        ++t.second;
      double m = j.value("margin", 0.0);
      if (m < worst_margin) {
        worst_margin = m;
        worst_line = line;
      }
    }
  }
  std::cout << "theorem,pass,fail\n";
  bool any_fail = false;
  for (auto& [t, pf] : tally) {
    std::cout << t << "," << pf.first << "," << pf.second << "\n";
    if (pf.second) any_fail = true;
  }
  if (!worst_line.empty())
    std::cout << "# tightest margin " << worst_margin << ": " << worst_line
              << "\n";
  return any_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"half-space multilinear maximal bounds: instances, constants, "
               "decompositions, theorem verification"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "generate a random instance");
  std::vector<std::string> gen_p;
  GenParams gen_gp = add_shape_options(gen, gen_p);
  std::string gen_out = "instance.json";
  gen->add_option("--out", gen_out, "output path");

  auto* cons = app.add_subcommand("constants", "weight characteristics");
  std::string cons_in, cons_mode = "dyadic";
  cons->add_option("--in", cons_in, "instance file")->required();
  cons->add_option("--mode", cons_mode, "dyadic or oracle")
      ->check(CLI::IsMember({"dyadic", "oracle"}));

  auto* dec = app.add_subcommand("decompose", "stopping-time decomposition");
  std::string dec_in;
  int dec_grid = 0;
  dec->add_option("--in", dec_in, "instance file")->required();
  dec->add_option("--grid", dec_grid, "shifted grid index");

  auto* ver = app.add_subcommand("verify", "verify theorem bounds");
  std::string ver_in, ver_theorem = "all", ver_csv;
  int ver_grid = 0, ver_batch = 1;
  ver->add_option("--in", ver_in, "instance file (omit to generate a batch)");
  ver->add_option("--theorem", ver_theorem, "theorem id or 'all'");
  ver->add_option("--grid", ver_grid, "shifted grid index");
  ver->add_option("--batch", ver_batch, "number of generated instances");
  ver->add_option("--csv", ver_csv, "also write a CSV summary here");
  std::vector<std::string> ver_p;
  GenParams ver_gp = add_shape_options(ver, ver_p);

  auto* sea = app.add_subcommand("search", "randomized stress search");
  SearchParams sp;
  sea->add_option("--theorem", sp.theorem, "theorem id");
  sea->add_option("--iters", sp.iters, "hill climb iterations");
  sea->add_option("--grid", sp.grid, "shifted grid index");
  std::vector<std::string> sea_p;
  sp.gen = add_shape_options(sea, sea_p);
  std::string sea_out;
  sea->add_option("--out", sea_out, "save best instance here");

  auto* rep = app.add_subcommand("report", "summarize verify output files");
  std::string rep_dir = ".";
  rep->add_option("--dir", rep_dir, "directory of .jsonl files");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      apply_p(gen_gp, gen_p);
      Instance inst = generate_instance(gen_gp);
      save_instance_file(inst, gen_out);
      std::cout << "wrote " << gen_out << " (" << inst.digest() << ")\n";
      return 0;
    }
    if (cons->parsed()) return run_constants(cons_in, cons_mode);
    if (dec->parsed()) return run_decompose(dec_in, dec_grid);
    if (ver->parsed()) {
      apply_p(ver_gp, ver_p);
      return run_verify(ver_in, ver_theorem, ver_grid, ver_batch, ver_gp,
                        ver_csv);
    }
    if (sea->parsed()) {
      apply_p(sp.gen, sea_p);
      sp.seed = sp.gen.seed;
      return run_search(sp, sea_out);
    }
    if (rep->parsed()) return run_report(rep_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
