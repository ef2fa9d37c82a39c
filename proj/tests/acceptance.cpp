// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerance for floating comparisons is 1e-9 relative throughout;
// combinatorial identities are checked in exact arithmetic.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "upmax/search.hpp"

using namespace upmax;

namespace {

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double secs() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

void report(int id, const char* desc, bool ok, double secs) {
  std::printf("criterion %d (%s): %s (%.1fs)\n", id, desc,
              ok ? "PASS" : "FAIL", secs);
  if (!ok) ++failures;
}

GenParams shape_for(std::uint64_t seed) {
  GenParams gp;
  gp.seed = seed;
  gp.n = (seed % 3 == 0) ? 2 : 1;
  gp.m = 1 + (int)(seed % 3);
  switch (gp.m) {
    case 1: gp.p = {(seed % 2) ? Rat(2) : Rat(3, 2)}; break;
    case 2: gp.p = {Rat(3), Rat(3, 2)}; break;
    default: gp.p = {Rat(3), Rat(3), Rat(3)}; break;
  }
  if (gp.n == 1) {
    gp.L0 = 2 + (int)(seed % 3);
    gp.L = (seed % 2) ? 1 : 0;  // L0 + L in 2..5
  } else {
    gp.L0 = 1 + (int)(seed % 2);
    gp.L = 1;  // L0 + L in 2..3
  }
  gp.n_atoms = 4 + (int)(seed % 5);
  gp.lift = (seed % 3 == 1);
  return gp;
}

std::vector<std::pair<std::vector<Rat>, Rat>> lattice_samples(
    const Workspace& ws, std::mt19937_64& rng, int count) {
  std::vector<std::pair<std::vector<Rat>, Rat>> pts;
  for (auto& at : ws.mu.atoms) pts.push_back({at.x_ref, at.t});
  for (int i = 0; i < count; ++i) {
    std::vector<Rat> x_ref;
    for (int d = 0; d < ws.inst.n; ++d)
      x_ref.push_back(Rat((long)(rng() % (4 * ws.fam.nref())) * 2 + 1, 8));
    Rat t = Rat((long)(rng() % (16 << ws.inst.L0)), 8);
    pts.push_back({std::move(x_ref), t});
  }
  return pts;
}

bool criterion1() {
  std::mt19937_64 rng(1);
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    Workspace ws = build_workspace(generate_instance(shape_for(seed)));
    int g = (int)(seed % ws.fam.grids());
    SparseFamily sf = decompose(ws.fam, ws.fsig, ws.mu, g);
    if (!check_sparse_invariants(sf, ws.fam, ws.fsig, ws.mu).empty())
      return false;
    auto pts = lattice_samples(ws, rng, 25);
    if (!level_set_identity_check(sf, ws.fam, ws.fsig, pts).empty())
      return false;
    if (!sparse_domination_check(sf, ws.fam, ws.fsig, ws.ex.p_d, pts).empty())
      return false;
  }
  return true;
}

bool criterion2() {
  // covering factor: exhaustive in 1d, dense grid of boxes in 2d
  GridFamily f1;
  f1.n = 1;
  f1.L0 = 2;
  f1.L = 2;
  for (auto& t : f1.level_max) t = 5;
  for (long den = 1; den <= 16; den *= 2)
    for (long num = 1; num <= den * 4; ++num) {
      Rat side(num, den);
      for (long a = 0; Rat(a, den) + side <= 4; ++a) {
        Cube q = covering_cube(f1, {Rat(a, den)}, side);
        if (cube_side(q) > 6 * side) return false;
      }
    }
  GridFamily f2;
  f2.n = 2;
  f2.L0 = 2;
  f2.L = 1;
  for (auto& t : f2.level_max) t = 5;
  for (long num = 1; num <= 16; ++num)
    for (long ax = 0; ax <= 32; ++ax)
      for (long ay = 0; ay <= 32; ++ay) {
        Rat side(num, 8);
        std::vector<Rat> lo{Rat(ax, 8), Rat(ay, 8)};
        if (lo[0] + side > 4 || lo[1] + side > 4) continue;
        Cube q = covering_cube(f2, lo, side);
        if (cube_side(q) > 6 * side) return false;
      }

  // free maximal vs shifted grids, exact arithmetic
  std::mt19937_64 rng(2);
  int points = 0;
  for (std::uint64_t seed = 1; points < 10000; ++seed) {
    GenParams gp = shape_for(3 * seed);  // n == 2 shapes included
    gp.n_atoms = 0;
    if (gp.n == 2) gp.L0 = 1;
    Workspace ws = build_workspace(generate_instance(gp));
    OracleTable ot = build_oracle(ws.f, ws.inst.n, ws.inst.L0, ws.inst.L);
    Rat factor = rpow(Rat(6), (unsigned long)(ws.ex.m * ws.inst.n));
    for (int i = 0; i < 500; ++i, ++points) {
      std::vector<Rat> x;
      for (int d = 0; d < ws.inst.n; ++d)
        x.push_back(Rat((long)(rng() % (8 << ws.inst.L0)), 8));
      Rat t = Rat((long)(rng() % (8 << ws.inst.L0)), 8);
      Rat best(0);
      for (int g = 0; g < ws.fam.grids(); ++g) {
        Rat v = halfspace_value(ws.f, ws.fam, g, x, t);
        if (v > best) best = v;
      }
      if (ot.query(x, t) > factor * best) return false;
    }
  }
  return true;
}

bool criterion3() {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Workspace ws = build_workspace(generate_instance(shape_for(seed + 1000)));
    int g = (int)(seed % ws.fam.grids());
    VerificationResult wk = verify_weak_type(ws, g);
    if (!wk.pass) return false;
    VerificationResult du = verify_ap_duality(ws);
    if (!du.pass || du.lhs >= 1e-9) return false;
  }
  return true;
}

bool criterion4() {
  const char* strong[] = {"strong_c0", "strong_cinf", "sawyer", "bprime",
                          "aprime_winfty"};
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    GenParams gp = shape_for(seed + 2000);
    gp.lift = true;  // keeps the C0 route non-vacuous
    Workspace ws = build_workspace(generate_instance(gp));
    int g = (int)(seed % ws.fam.grids());
    for (const char* id : strong) {
      VerificationResult r = verify_theorem(ws, id, g);
      if (!r.pass) return false;
      if (std::string(id) == "strong_c0" && r.vacuous) return false;
    }
  }
  for (const char* id : strong) {
    SearchParams sp;
    sp.theorem = id;
    sp.seed = 31;
    sp.iters = 500;
    sp.gen.n = 1;
    sp.gen.m = 2;
    sp.gen.p = {Rat(3), Rat(3, 2)};
    sp.gen.L0 = 2;
    sp.gen.L = 1;
    sp.gen.n_atoms = 5;
    sp.gen.lift = true;
    SearchResult r = stress_search(sp);
    if (r.any_fail || r.best_ratio > 1.0) return false;
  }
  return true;
}

bool criterion5() {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Workspace ws = build_workspace(generate_instance(shape_for(seed + 3000)));
    int g = (int)(seed % ws.fam.grids());
    VerificationResult r = verify_carleson(ws, g);
    if (!r.pass) return false;
  }
  return true;
}

bool criterion6() {
  std::mt19937_64 rng(6);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    GenParams gp = shape_for(seed + 4000);
    Instance inst = generate_instance(gp);
    Workspace ws = build_workspace(inst);
    int g = (int)(seed % ws.fam.grids());
    // boundary table equals the operator at height zero
    ChainTables ct = build_chain_tables(ws.fsig, ws.fam, g);
    std::int64_t N = ws.fam.nref();
    for (int i = 0; i < 10; ++i) {
      std::vector<Rat> x_ref;
      std::int64_t idx = 0, stride = 1;
      for (int d = 0; d < ws.inst.n; ++d) {
        std::int64_t c = (std::int64_t)(rng() % N);
        x_ref.push_back(Rat(2 * c + 1, 2));
        idx += c * stride;
        stride *= N;
      }
      if (ct.boundary()[idx] !=
          halfspace_value_ref(ws.fsig, ws.fam, g, x_ref, Rat(0)))
        return false;
    }
    // exact homogeneity in the first factor
    Instance scaled = inst;
    for (auto& c : scaled.func_cells[0]) c *= 3;
    Workspace ws3 = build_workspace(scaled);
    for (int i = 0; i < 5; ++i) {
      std::vector<Rat> x;
      for (int d = 0; d < ws.inst.n; ++d)
        x.push_back(Rat((long)(rng() % (8 << ws.inst.L0)), 8));
      Rat t = Rat((long)(rng() % (8 << ws.inst.L0)), 8);
      if (halfspace_value(ws3.f, ws3.fam, g, x, t) !=
          3 * halfspace_value(ws.f, ws.fam, g, x, t))
        return false;
    }
    // substitution f -> f/sigma moves sigma-norms to w-norms
    for (int i = 0; i < ws.ex.m; ++i) {
      double pi = ws.ex.p_i_d[i];
      double acc = 0, cv = to_d(ws.sigma[i].cellvol);
      for (std::size_t c = 0; c < ws.f[i].cells.size(); ++c) {
        if (ws.f[i].cells[c] == 0) continue;
        double gval = to_d(ws.f[i].cells[c]) / to_d(ws.sigma[i].cells[c]);
        acc += std::pow(gval, pi) * to_d(ws.sigma[i].cells[c]) * cv;
      }
      double direct = std::pow(lp_norm(ws.f[i], ws.w[i], pi), pi);
      if (std::abs(acc - direct) > 1e-9 * std::max(direct, 1e-300))
        return false;
    }
  }
  return true;
}

bool criterion7() {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Workspace ws = build_workspace(generate_instance(shape_for(seed + 5000)));
    int g = (int)(seed % ws.fam.grids());
    // martingale maximal bound with constant p_i'
    for (int i = 0; i < ws.ex.m; ++i) {
      double pi = ws.ex.p_i_d[i];
      auto score = [&](const Cube& q) {
        Rat s = ws.sigma[i].cube_integral(q);
        if (s == 0) return 0.0;
        return to_d(ws.fsig[i].cube_integral(q)) / to_d(s);
      };
      auto nu = [&](const Cube& q) {
        return to_d(ws.sigma[i].cube_integral(q));
      };
      double lhs =
          std::pow(chainmax_lp_integral(ws.fam, g, score, nu, pi), 1.0 / pi);
      double rhs = ws.ex.p_conj_d[i] * lp_norm(ws.f[i], ws.sigma[i], pi);
      if (lhs > rhs * (1 + 1e-9)) return false;
    }
    // geometric maximal of a localized function integrates to at most e
    // times its mass
    GeoData geo = make_geo(ws.gprod);
    Cube R = grid_root(ws.fam, g);
    for (int rep = 0; rep < 2; ++rep) {
      auto score = [&](const Cube& q) {
        if (!cube_contains_cube(R, q, ws.fam.L)) return 0.0;
        return geo.cube_geomean(q, ws.fam);
      };
      auto nu = [&](const Cube& q) {
        return std::ldexp(1.0, q.level * q.n);
      };
      double gi = chainmax_lp_integral(ws.fam, g, score, nu, 1.0);
      double mass = to_d(ws.gprod.cube_integral(R));
      if (gi > std::exp(1.0) * mass * (1 + 1e-9)) return false;
      R = cube_child(R, (int)(seed % (1u << ws.inst.n)));  // smaller window
    }
  }
  return true;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* desc;
    bool (*run)();
  };
  const Entry entries[] = {
      {1, "decomposition invariants and level-set identity, 500 seeds",
       criterion1},
      {2, "covering factor 6 and shifted-grid domination, 10000 points",
       criterion2},
      {3, "weak type bound and duality identity, 200 seeds", criterion3},
      {4, "five strong-type chains, 200 seeds plus 500-step search",
       criterion4},
      {5, "carleson embedding with tightness, 200 seeds", criterion5},
      {6, "operator identities: height zero, homogeneity, substitution",
       criterion6},
      {7, "auxiliary maximal bounds: martingale and geometric, 200 seeds",
       criterion7},
  };
  for (auto& e : entries) {
    Timer t;
    bool ok = e.run();
    report(e.id, e.desc, ok, t.secs());
  }
  return failures == 0 ? 0 : 1;
}
