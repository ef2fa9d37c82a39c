#include "upmax/instance.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"

namespace upmax {

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw BadInstance("zero denominator: " + s);
    return Rat(num, den);
  }
  if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
      s.find('E') != std::string::npos)
    return rat_of(std::stod(s));
  return Rat(Int(s));
}

std::vector<Cube> enumerate_level(const GridFamily& fam, int grid, int level) {
  std::vector<Cube> out;
  std::int64_t S = std::int64_t(1) << (level + fam.L);
  std::int64_t Nref = fam.nref();
  int e = level_sign(level);
  std::array<std::int64_t, 3> jmin{0, 0, 0}, jmax{0, 0, 0};
  for (int d = 0; d < fam.n; ++d) {
    int b = e * shift3(grid, d);
    std::int64_t qmax = (Nref - 1) / S;  // largest q with q*S < Nref
    std::int64_t t = qmax - b;
    jmax[d] = (t >= 0) ? t / 3 : -((-t + 2) / 3);
    std::int64_t u = -b - 2;  // smallest j with 3j >= u
    jmin[d] = (u >= 0) ? (u + 2) / 3 : -((-u) / 3);
  }
  Cube q;
  q.grid = grid;
  q.level = level;
  q.n = fam.n;
  std::int64_t z0 = fam.n >= 3 ? jmin[2] : 0, z1 = fam.n >= 3 ? jmax[2] : 0;
  std::int64_t y0 = fam.n >= 2 ? jmin[1] : 0, y1 = fam.n >= 2 ? jmax[1] : 0;
  for (std::int64_t z = z0; z <= z1; ++z)
    for (std::int64_t y = y0; y <= y1; ++y)
      for (std::int64_t x = jmin[0]; x <= jmax[0]; ++x) {
        q.j = {x, y, z};
        out.push_back(q);
      }
  return out;
}

std::vector<Cube> enumerate_all(const GridFamily& fam) {
  std::vector<Cube> out;
  for (int g = 0; g < fam.grids(); ++g)
    for (int k = fam.level_min(); k <= fam.level_max[g]; ++k) {
      auto lvl = enumerate_level(fam, g, k);
      out.insert(out.end(), lvl.begin(), lvl.end());
    }
  return out;
}

Cube covering_cube(const GridFamily& fam, const std::vector<Rat>& lo,
                   const Rat& side) {
  if (side <= 0) throw SubResolutionCube("covering_cube: side must be positive");
  int k0 = -fam.L;
  while (pow2r(k0) < side) ++k0;
  int kmax = fam.level_max[0];
  for (int g = 1; g < fam.grids(); ++g) kmax = std::max(kmax, fam.level_max[g]);
  for (int k = k0; k <= kmax; ++k) {
    Rat sk = pow2r(k);
    for (int g = 0; g < fam.grids(); ++g) {
      Cube q;
      q.grid = g;
      q.level = k;
      q.n = fam.n;
      bool ok = true;
      for (int d = 0; d < fam.n; ++d) {
        Rat off = Rat(level_sign(k) * shift3(g, d), 3);
        q.j[d] = ifloor(lo[d] / sk - off);
        Rat cube_lo = sk * (Rat(q.j[d]) + off);
        if (lo[d] + side > cube_lo + sk) {
          ok = false;
          break;
        }
      }
      if (ok) return q;
    }
  }
  throw NotCovered("no enumerated cube covers the requested box");
}

void Instance::validate() const {
  if (n < 1 || n > 3) throw BadInstance("n must be 1..3");
  if (m < 1 || m > 3) throw BadInstance("m must be 1..3");
  if (L0 < 0 || L < 0 || L0 + L > 8) throw BadInstance("need L0,L >= 0, L0+L <= 8");
  std::int64_t refined = 1;
  for (int d = 0; d < n; ++d) refined *= 3 * dyadic_per_dim();
  if (refined > 20000000) throw GuardExceeded("refined lattice too large");
  if ((int)p_raw.size() != m) throw BadInstance("exponent count != m");
  if ((int)weight_cells.size() != m || (int)func_cells.size() != m)
    throw BadInstance("weight/function array count != m");
  for (int i = 0; i < m; ++i) {
    if ((std::int64_t)weight_cells[i].size() != dyadic_cells() ||
        (std::int64_t)func_cells[i].size() != dyadic_cells())
      throw MixedResolution("cell array size does not match lattice");
    for (auto& c : weight_cells[i])
      if (c <= 0) throw ZeroWeightCell("weights must be strictly positive");
    for (auto& c : func_cells[i])
      if (c < 0) throw BadInstance("functions must be nonnegative");
  }
  if (!lift_cells.empty()) {
    if ((std::int64_t)lift_cells.size() != dyadic_cells())
      throw MixedResolution("boundary lift size does not match lattice");
    for (auto& c : lift_cells)
      if (c < 0) throw BadInstance("boundary lift must be nonnegative");
  }
  Rat dom = pow2r(L0);
  for (auto& a : atoms) {
    if ((int)a.x.size() != n) throw BadInstance("atom dimension mismatch");
    if (a.t < 0 || a.mass <= 0) throw BadInstance("atom needs t >= 0, mass > 0");
    for (auto& c : a.x)
      if (c < 0 || c >= dom) throw BadInstance("atom base point outside domain");
  }
}

std::string Instance::digest() const {
  std::ostringstream os;
  os << "n" << n << "m" << m << "L0" << L0 << "L" << L << "s" << seed;
  return os.str();
}

static std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;  // determinism matters here, not equidistribution
}

Instance generate_instance(const GenParams& gp) {
  Instance inst;
  inst.n = gp.n;
  inst.m = gp.m;
  inst.L0 = gp.L0;
  inst.L = gp.L;
  inst.p_raw = gp.p;
  inst.seed = gp.seed;
  Exponents::derive(gp.p);  // admissibility check
  std::mt19937_64 rng(gp.seed);
  std::int64_t cells = inst.dyadic_cells();
  for (int i = 0; i < gp.m; ++i) {
    std::vector<Rat> wv(cells), fv(cells);
    for (auto& c : wv) {
      long e = gp.B == 0 ? 0 : (long)draw(rng, 2 * gp.B + 1) - gp.B;
      c = pow2r(e);
    }
    bool any = false;
    for (auto& c : fv) {
      if ((int)draw(rng, 100) < gp.zero_pct) {
        c = 0;
        continue;
      }
      long e = (long)draw(rng, 2 * gp.B + 1) - gp.B;
      c = pow2r(e) * (Rat(4 + (long)draw(rng, 4)) / 4);
      any = true;
    }
    if (!any) fv[draw(rng, cells)] = 1;
    inst.weight_cells.push_back(std::move(wv));
    inst.func_cells.push_back(std::move(fv));
  }
  std::int64_t grid4 = inst.dyadic_per_dim() * 4;
  for (int a = 0; a < gp.n_atoms; ++a) {
    Atom at;
    for (int d = 0; d < gp.n; ++d)
      at.x.push_back(Rat((long)draw(rng, grid4)) * pow2r(inst.L0) / grid4);
    // heights hit exact dyadic side lengths sometimes, boundary sometimes
    std::uint64_t kind = draw(rng, 4);
    if (kind == 0)
      at.t = 0;
    else if (kind == 1)
      at.t = pow2r((long)draw(rng, inst.L0 + inst.L + 1) - inst.L);
    else
      at.t = Rat((long)draw(rng, 8 * (std::int64_t(1) << inst.L0))) / 8;
    long e = gp.B == 0 ? 0 : (long)draw(rng, 2 * gp.B + 1) - gp.B;
    at.mass = pow2r(e) * (Rat(8 + (long)draw(rng, 8)) / 8);
    inst.atoms.push_back(std::move(at));
  }
  if (gp.lift) {
    inst.lift_cells.resize(cells);
    for (auto& c : inst.lift_cells) {
      long e = gp.B == 0 ? 0 : (long)draw(rng, 2 * gp.B + 1) - gp.B;
      c = pow2r(e - 3);
    }
  }
  inst.validate();
  return inst;
}

using nlohmann::json;

static json rat_json(const Rat& r) { return rat_str(r); }

static Rat rat_from_json(const json& j) {
  if (j.is_number()) return rat_of(j.get<double>());
  return parse_rat(j.get<std::string>());
}

std::string instance_to_json_string(const Instance& inst) {
  json j;
  j["n"] = inst.n;
  j["m"] = inst.m;
  j["L0"] = inst.L0;
  j["L"] = inst.L;
  j["seed"] = inst.seed;
  j["p"] = json::array();
  for (auto& p : inst.p_raw) j["p"].push_back(rat_json(p));
  j["weights"] = json::array();
  j["functions"] = json::array();
  for (int i = 0; i < inst.m; ++i) {
    json wv = json::array(), fv = json::array();
    for (auto& c : inst.weight_cells[i]) wv.push_back(rat_json(c));
    for (auto& c : inst.func_cells[i]) fv.push_back(rat_json(c));
    j["weights"].push_back(std::move(wv));
    j["functions"].push_back(std::move(fv));
  }
  if (!inst.lift_cells.empty()) {
    json lv = json::array();
    for (auto& c : inst.lift_cells) lv.push_back(rat_json(c));
    j["boundary_lift"] = std::move(lv);
  }
  j["mu_atoms"] = json::array();
  for (auto& a : inst.atoms) {
    json ja;
    ja["x"] = json::array();
    for (auto& c : a.x) ja["x"].push_back(rat_json(c));
    ja["t"] = rat_json(a.t);
    ja["mass"] = rat_json(a.mass);
    j["mu_atoms"].push_back(std::move(ja));
  }
  return j.dump(1);
}

Instance instance_from_json_string(const std::string& text) {
  json j = json::parse(text);
  Instance inst;
  inst.n = j.at("n").get<int>();
  inst.m = j.at("m").get<int>();
  inst.L0 = j.at("L0").get<int>();
  inst.L = j.at("L").get<int>();
  inst.seed = j.value("seed", std::uint64_t(0));
  for (auto& p : j.at("p")) inst.p_raw.push_back(rat_from_json(p));
  for (auto& arr : j.at("weights")) {
    std::vector<Rat> v;
    for (auto& c : arr) v.push_back(rat_from_json(c));
    inst.weight_cells.push_back(std::move(v));
  }
  for (auto& arr : j.at("functions")) {
    std::vector<Rat> v;
    for (auto& c : arr) v.push_back(rat_from_json(c));
    inst.func_cells.push_back(std::move(v));
  }
  if (j.contains("boundary_lift"))
    for (auto& c : j.at("boundary_lift"))
      inst.lift_cells.push_back(rat_from_json(c));
  if (j.contains("mu_atoms"))
    for (auto& ja : j.at("mu_atoms")) {
      Atom a;
      for (auto& c : ja.at("x")) a.x.push_back(rat_from_json(c));
      a.t = rat_from_json(ja.at("t"));
      a.mass = rat_from_json(ja.at("mass"));
      inst.atoms.push_back(std::move(a));
    }
  inst.validate();
  return inst;
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInstance("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return instance_from_json_string(ss.str());
}

void save_instance_file(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw BadInstance("cannot write " + path);
  out << instance_to_json_string(inst) << "\n";
}

Workspace build_workspace(Instance inst) {
  inst.validate();
  Workspace ws;
  ws.inst = inst;
  ws.ex = Exponents::derive(inst.p_raw);
  ws.fam.n = inst.n;
  ws.fam.L0 = inst.L0;
  ws.fam.L = inst.L;
  ws.mu.atoms = inst.atoms;
  for (auto& a : ws.mu.atoms) cache_refined(a, inst.L);
  if (!inst.lift_cells.empty()) {
    Rat split = Rat(1);
    for (int d = 0; d < inst.n; ++d) split /= 3;
    std::vector<Rat> scaled(inst.lift_cells.size());
    for (std::size_t c = 0; c < scaled.size(); ++c)
      scaled[c] = inst.lift_cells[c] * split;
    ws.mu.lift = expand_to_refined(inst.n, inst.L0, inst.L, scaled, Rat(0));
  }
  // default top level: one root cube holds the domain and every atom box
  int T = inst.L0 + 2;
  Rat tmax(0);
  for (auto& a : ws.mu.atoms)
    if (a.t > tmax) tmax = a.t;
  while (pow2r(T) <= tmax) ++T;
  for (auto& t : ws.fam.level_max) t = T;

  std::int64_t cells = inst.dyadic_cells();
  std::vector<std::vector<Rat>> sig_cells(inst.m);
  std::vector<Rat> v_cells(cells, Rat(1)), g_cells(cells, Rat(1));
  std::vector<double> ldw(cells, 0.0), lds(cells, 0.0), lg(cells, 0.0);
  for (int i = 0; i < inst.m; ++i) {
    double pc = ws.ex.p_conj_d[i];
    double ppi = ws.ex.p_d / ws.ex.p_i_d[i];
    sig_cells[i].resize(cells);
    for (std::int64_t c = 0; c < cells; ++c) {
      double wd = to_d(inst.weight_cells[i][c]);
      double sd = std::pow(wd, 1.0 - pc);
      sig_cells[i][c] = rat_of(sd);
      v_cells[c] *= rat_of(std::pow(wd, ppi));
      g_cells[c] *= rat_of(std::pow(sd, ppi));
      ldw[c] += -std::log(wd) / ws.ex.p_i_d[i];
      lds[c] += -std::log(sd) / ws.ex.p_i_d[i];
      lg[c] += ppi * std::log(sd);
    }
  }
  for (int i = 0; i < inst.m; ++i) {
    ws.w.push_back(expand_to_refined(inst.n, inst.L0, inst.L,
                                     inst.weight_cells[i], Rat(1)));
    ws.f.push_back(expand_to_refined(inst.n, inst.L0, inst.L,
                                     inst.func_cells[i], Rat(0)));
    ws.sigma.push_back(
        expand_to_refined(inst.n, inst.L0, inst.L, sig_cells[i], Rat(1)));
    std::vector<Rat> fs(cells);
    for (std::int64_t c = 0; c < cells; ++c)
      fs[c] = inst.func_cells[i][c] * sig_cells[i][c];
    ws.fsig.push_back(expand_to_refined(inst.n, inst.L0, inst.L, fs, Rat(0)));
  }
  ws.v = expand_to_refined(inst.n, inst.L0, inst.L, v_cells, Rat(1));
  ws.gprod = expand_to_refined(inst.n, inst.L0, inst.L, g_cells, Rat(1));
  ws.log_dual_w = expand_to_refined(inst.n, inst.L0, inst.L, ldw, 0.0);
  ws.log_dual_sig = expand_to_refined(inst.n, inst.L0, inst.L, lds, 0.0);
  ws.log_g = expand_to_refined(inst.n, inst.L0, inst.L, lg, 0.0);
  return ws;
}

}  // namespace upmax
