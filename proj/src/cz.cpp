#include "upmax/cz.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace upmax {

namespace {

// largest k with a^k < val, for a = 2^E
long window_index(const Rat& val, long E) {
  double lg = std::log2(std::max(to_d(val), 1e-300));
  long k = (long)std::floor(lg / (double)E);
  while (pow2r(E * (k + 1)) < val) ++k;
  while (!(pow2r(E * k) < val)) --k;
  return k;
}

Rat total_integral(const Field<Rat>& f) {
  std::array<std::int64_t, 3> lo{0, 0, 0}, hi{1, 1, 1};
  for (int d = 0; d < f.n; ++d) hi[d] = f.N;
  return f.clipped_sum(lo, hi);
}

struct AvgCache {
  const FieldVec& F;
  const GridFamily& fam;
  std::unordered_map<Cube, Rat, CubeKey> val;
  Rat maxval{0};

  void fill(const Cube& q) {
    Rat v = avg_product(F, q);
    if (v > maxval) maxval = v;
    bool live = v > 0 && q.level > fam.level_min();
    val.emplace(q, std::move(v));
    if (!live) return;
    for (int c = 0; c < (1 << fam.n); ++c) {
      Cube ch = cube_child(q, c);
      if (cube_intersects_domain(ch, fam)) fill(ch);
    }
  }
};

}  // namespace

GridFamily family_with_top(GridFamily fam, const SparseFamily& sf) {
  fam.level_max[sf.grid] = std::max(fam.level_max[sf.grid], sf.level_top);
  return fam;
}

std::vector<Cube> select_level_cubes(const GridFamily& fam, const FieldVec& F,
                                     int grid, const Rat& threshold) {
  std::vector<Cube> out;
  struct Rec {
    const GridFamily& fam;
    const FieldVec& F;
    const Rat& thr;
    std::vector<Cube>& out;
    void visit(const Cube& q) {
      Rat v = avg_product(F, q);
      if (v > thr) {
        out.push_back(q);
        return;
      }
      if (v == 0 || q.level == fam.level_min()) return;
      for (int c = 0; c < (1 << fam.n); ++c) {
        Cube ch = cube_child(q, c);
        if (cube_intersects_domain(ch, fam)) visit(ch);
      }
    }
  } rec{fam, F, threshold, out};
  rec.visit(grid_root(fam, grid));
  return out;
}

SparseFamily decompose(const GridFamily& fam0, const FieldVec& F,
                       const Measure& mu, int grid) {
  GridFamily fm = fam0;
  SparseFamily sf;
  sf.grid = grid;
  sf.n = fm.n;
  sf.m = (int)F.size();
  long E = (long)sf.m * (sf.n + 1);
  sf.a = pow2r(E);
  sf.window = pow2r((long)sf.m * sf.n);
  sf.level_top = fm.level_max[grid];
  for (auto& f : F)
    if (total_integral(f) == 0) return sf;  // empty family, M == 0

  Cube root = grid_root(fm, grid);
  Rat rootval = avg_product(F, root);
  int guard = 4 * (fm.n + 3);
  long k;
  while (true) {
    k = window_index(rootval, E);
    if (rootval <= sf.a_pow(k) * sf.window) break;
    if (--guard < 0) throw GuardExceeded("root never entered a window");
    ++fm.level_max[grid];
    root = grid_root(fm, grid);
    rootval = avg_product(F, root);
  }
  sf.k_min = k;
  sf.level_top = fm.level_max[grid];

  AvgCache cache{F, fm};
  cache.fill(root);
  sf.k_max = window_index(cache.maxval, E);

  for (long kk = sf.k_min; kk <= sf.k_max; ++kk) {
    SparseLevel lvl;
    lvl.k = kk;
    Rat thr = sf.a_pow(kk);
    struct Rec {
      const GridFamily& fm;
      AvgCache& cache;
      const Rat& thr;
      SparseLevel& lvl;
      const Measure& mu;
      void visit(const Cube& q) {
        const Rat& v = cache.val.at(q);
        if (v > thr) {
          SelectedCube sc;
          sc.cube = q;
          sc.avg = v;
          sc.vol = cube_volume(q);
          sc.box_mu = box_mass(mu, q, fm.L);
          lvl.cubes.push_back(std::move(sc));
          return;
        }
        if (v == 0 || q.level == fm.level_min()) return;
        for (int c = 0; c < (1 << fm.n); ++c) {
          Cube ch = cube_child(q, c);
          if (cube_intersects_domain(ch, fm)) visit(ch);
        }
      }
    } rec{fm, cache, thr, lvl, mu};
    rec.visit(root);
    int li = (int)sf.levels.size();
    for (int ci = 0; ci < (int)lvl.cubes.size(); ++ci)
      sf.index.emplace(lvl.cubes[ci].cube, std::make_pair(li, ci));
    sf.levels.push_back(std::move(lvl));
  }

  // link generations and compute leftover volumes and masses
  for (int li = 0; li + 1 <= (int)sf.levels.size(); ++li) {
    auto& lvl = sf.levels[li];
    if (li + 1 < (int)sf.levels.size()) {
      auto& nxt = sf.levels[li + 1];
      for (int ci = 0; ci < (int)nxt.cubes.size(); ++ci) {
        Cube c = nxt.cubes[ci].cube;
        bool found = false;
        while (c.level < sf.level_top) {
          c = cube_parent(c);
          auto it = sf.index.find(c);
          if (it != sf.index.end() && it->second.first == li) {
            lvl.cubes[it->second.second].children.push_back(ci);
            found = true;
            break;
          }
        }
        if (!found)
          throw GuardExceeded("selected cube without enclosing selection");
      }
    }
    for (auto& sc : lvl.cubes) {
      Rat cv(0), cm(0);
      if (li + 1 < (int)sf.levels.size())
        for (int ci : sc.children) {
          cv += sf.levels[li + 1].cubes[ci].vol;
          cm += sf.levels[li + 1].cubes[ci].box_mu;
        }
      sc.e_vol = sc.vol - cv;
      sc.ehat_mu = sc.box_mu - cm;
    }
  }
  return sf;
}

std::vector<std::string> check_sparse_invariants(const SparseFamily& sf,
                                                 const GridFamily& fam0,
                                                 const FieldVec& F,
                                                 const Measure& mu) {
  std::vector<std::string> bad;
  if (sf.empty()) return bad;
  GridFamily fm = family_with_top(fam0, sf);
  auto complain = [&](const std::string& s) { bad.push_back(s); };
  for (int li = 0; li < (int)sf.levels.size(); ++li) {
    auto& lvl = sf.levels[li];
    Rat thr = sf.a_pow(lvl.k);
    Rat cap = thr * sf.window;
    std::set<std::array<std::int64_t, 4>> seen;
    for (auto& sc : lvl.cubes) {
      Rat v = avg_product(F, sc.cube);
      if (v != sc.avg) complain("cached average mismatch");
      if (!(v > thr)) complain("window lower bound fails");
      if (!(v <= cap)) complain("window upper bound fails");
      if (!seen.insert({sc.cube.level, sc.cube.j[0], sc.cube.j[1],
                        sc.cube.j[2]})
               .second)
        complain("duplicate selection at one scale");
      if (box_mass(mu, sc.cube, fm.L) != sc.box_mu)
        complain("box mass mismatch");
      Rat cv(0);
      if (li + 1 < (int)sf.levels.size())
        for (int ci : sc.children) {
          auto& ch = sf.levels[li + 1].cubes[ci];
          if (!cube_contains_cube(sc.cube, ch.cube, fm.L))
            complain("linked child not inside parent");
          cv += ch.vol;
        }
      if (sc.e_vol != sc.vol - cv) complain("E volume accounting fails");
      if (!(2 * sc.e_vol >= sc.vol)) complain("|E_Q| < |Q|/2");
      if (!(2 * cv <= sc.vol)) complain("sparsity ratio above 1/2");
      if (sc.ehat_mu < 0) complain("negative Ehat mass");
    }
    // independent route to the boundary level set measure
    auto maximal = select_level_cubes(fm, F, sf.grid, thr);
    Rat direct(0), stored(0);
    for (auto& q : maximal) direct += cube_volume(q);
    for (auto& sc : lvl.cubes) stored += sc.vol;
    if (direct != stored) complain("level set volume identity fails");
  }
  return bad;
}

std::vector<std::string> level_set_identity_check(
    const SparseFamily& sf, const GridFamily& fam0, const FieldVec& F,
    const std::vector<std::pair<std::vector<Rat>, Rat>>& samples) {
  std::vector<std::string> bad;
  if (sf.empty()) return bad;
  GridFamily fm = family_with_top(fam0, sf);
  for (auto& [x_ref, t] : samples) {
    Rat val = halfspace_value_ref(F, fm, sf.grid, x_ref, t);
    auto chain = point_chain(fm, sf.grid, x_ref, t);
    for (auto& lvl : sf.levels) {
      bool member = false;
      for (auto& c : chain)
        if (sf.k_of(c) == lvl.k) {
          member = true;
          break;
        }
      bool above = val > sf.a_pow(lvl.k);
      if (member != above) {
        std::ostringstream os;
        os << "level set identity fails at k=" << lvl.k;
        bad.push_back(os.str());
      }
    }
  }
  return bad;
}

std::vector<std::string> sparse_domination_check(
    const SparseFamily& sf, const GridFamily& fam0, const FieldVec& F,
    double q, const std::vector<std::pair<std::vector<Rat>, Rat>>& samples) {
  std::vector<std::string> bad;
  if (sf.empty()) return bad;
  GridFamily fm = family_with_top(fam0, sf);
  long E = (long)sf.m * (sf.n + 1);
  double aq = std::pow(to_d(sf.a), q);
  for (auto& [x_ref, t] : samples) {
    Rat val = halfspace_value_ref(F, fm, sf.grid, x_ref, t);
    if (val == 0) continue;
    auto chain = point_chain(fm, sf.grid, x_ref, t);
    double covered = 0;
    for (auto& c : chain)
      if (const SelectedCube* sc = sf.find(c))
        covered += std::pow(to_d(sc->avg), q);
    double lhs = std::pow(to_d(val), q);
    if (lhs > aq * covered * (1 + 1e-9))
      bad.push_back("sparse domination sum fails");
    long kv = window_index(val, E);
    if (kv < sf.k_min || kv > sf.k_max) {
      bad.push_back("value escapes the stopping scale range");
      continue;
    }
    const SelectedCube* host = nullptr;
    for (auto& c : chain)
      if (const SelectedCube* sc = sf.find(c))
        if (sf.k_of(c) == kv) host = sc;
    if (!host) {
      bad.push_back("no selected cube hosts the point at its scale");
      continue;
    }
    if (val > sf.a * host->avg)
      bad.push_back("sharp single-cube domination fails");
  }
  return bad;
}

}  // namespace upmax
