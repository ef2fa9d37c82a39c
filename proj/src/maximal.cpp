#include "upmax/maximal.hpp"

#include <cmath>

namespace upmax {

Rat avg_product(const FieldVec& F, const Cube& q) {
  Rat vol = cube_volume(q);
  Rat prod(1);
  for (auto& f : F) {
    Rat integ = f.cube_integral(q);
    if (integ == 0) return Rat(0);
    prod *= integ;
  }
  return prod / rpow(vol, F.size());
}

Cube grid_root(const GridFamily& fam, int grid) {
  int T = fam.level_max[grid];
  if (T < fam.L0 + 2) throw GuardExceeded("grid top below L0 + 2");
  auto cubes = enumerate_level(fam, grid, T);
  if (cubes.size() != 1) throw GuardExceeded("expected a unique root cube");
  return cubes[0];
}

std::vector<Cube> point_chain(const GridFamily& fam, int grid,
                              const std::vector<Rat>& x_ref, const Rat& t) {
  std::vector<Cube> out;
  Cube c = leaf_of_point(x_ref, grid, fam.n, fam.L);
  Rat side = pow2r(-fam.L);
  for (int k = -fam.L; k <= fam.level_max[grid]; ++k) {
    if (t < side && cube_intersects_domain(c, fam)) out.push_back(c);
    c = cube_parent(c);
    side *= 2;
  }
  return out;
}

Rat halfspace_value_ref(const FieldVec& F, const GridFamily& fam, int grid,
                        const std::vector<Rat>& x_ref, const Rat& t) {
  Rat best(0);
  for (auto& c : point_chain(fam, grid, x_ref, t)) {
    Rat v = avg_product(F, c);
    if (v > best) best = v;
  }
  return best;
}

Rat halfspace_value(const FieldVec& F, const GridFamily& fam, int grid,
                    const std::vector<Rat>& x, const Rat& t) {
  std::vector<Rat> x_ref(x.size());
  Rat scale = Rat(3) * pow2r(fam.L);
  for (std::size_t d = 0; d < x.size(); ++d) x_ref[d] = x[d] * scale;
  return halfspace_value_ref(F, fam, grid, x_ref, t);
}

Rat level_set_mass(const Measure& mu, const FieldVec& F, const GridFamily& fam,
                   int grid, const Rat& lambda, bool strict) {
  Rat s(0);
  for (auto& a : mu.atoms) {
    Rat v = halfspace_value_ref(F, fam, grid, a.x_ref, a.t);
    if (strict ? v > lambda : v >= lambda) s += a.mass;
  }
  if (mu.lift) {
    // lift points sit at refined cell centers with t = 0; their chain value
    // is the boundary table entry of the cell
    ChainTables ct = build_chain_tables(F, fam, grid);
    auto& lf = *mu.lift;
    std::int64_t N = lf.N;
    std::int64_t n1 = lf.n >= 2 ? N : 1, n2 = lf.n >= 3 ? N : 1;
    for (std::int64_t z = 0; z < n2; ++z)
      for (std::int64_t y = 0; y < n1; ++y)
        for (std::int64_t x = 0; x < N; ++x) {
          std::int64_t idx = x + N * (y + N * z);
          const Rat& mass = lf.cells[idx];
          if (mass == 0) continue;
          const Rat& v = ct.boundary()[idx];
          if (strict ? v > lambda : v >= lambda) s += mass;
        }
  }
  return s;
}

namespace {

struct TableBuilder {
  const FieldVec& F;
  const GridFamily& fam;
  ChainTables& ct;
  std::int64_t N;
  std::vector<Rat> stack;  // value per level, level_lo first

  void visit(const Cube& q, int depth) {
    stack[depth] = avg_product(F, q);
    if (q.level == fam.level_min()) {
      // running maxima down the chain (depth 0 = root); level k admits the
      // chain cubes of depth <= level_hi - k
      int levels = (int)stack.size();
      std::vector<Rat> pref(levels);
      Rat run(0);
      for (int i = 0; i < levels; ++i) {
        if (stack[i] > run) run = stack[i];
        pref[i] = run;
      }
      std::array<std::int64_t, 3> lo{0, 0, 0}, hi{0, 0, 0};
      std::int64_t s = side_ref(q.level, fam.L);
      for (int d = 0; d < fam.n; ++d) {
        lo[d] = std::max<std::int64_t>(0, cube_lo_ref(q, d, fam.L));
        hi[d] = std::min<std::int64_t>(N, cube_lo_ref(q, d, fam.L) + s);
      }
      std::int64_t y0 = fam.n >= 2 ? lo[1] : 0, y1 = fam.n >= 2 ? hi[1] : 1;
      std::int64_t z0 = fam.n >= 3 ? lo[2] : 0, z1 = fam.n >= 3 ? hi[2] : 1;
      for (std::int64_t z = z0; z < z1; ++z)
        for (std::int64_t y = y0; y < y1; ++y)
          for (std::int64_t x = lo[0]; x < hi[0]; ++x) {
            std::int64_t idx = x + N * (y + N * z);
            for (int i = 0; i < levels; ++i)
              ct.by_level[i][idx] = pref[levels - 1 - i];
          }
      return;
    }
    for (int c = 0; c < (1 << fam.n); ++c) {
      Cube ch = cube_child(q, c);
      if (cube_intersects_domain(ch, fam)) visit(ch, depth + 1);
    }
  }
};

}  // namespace

ChainTables build_chain_tables(const FieldVec& F, const GridFamily& fam,
                               int grid) {
  ChainTables ct;
  ct.grid = grid;
  ct.level_lo = fam.level_min();
  ct.level_hi = fam.level_max[grid];
  std::int64_t N = fam.nref();
  std::int64_t cells = 1;
  for (int d = 0; d < fam.n; ++d) cells *= N;
  int levels = ct.level_hi - ct.level_lo + 1;
  ct.by_level.assign(levels, std::vector<Rat>(cells, Rat(0)));
  TableBuilder tb{F, fam, ct, N, std::vector<Rat>(levels)};
  tb.visit(grid_root(fam, grid), 0);
  return ct;
}

std::vector<Rat> weighted_max_boundary(const Field<Rat>& f,
                                       const Field<Rat>& sigma,
                                       const GridFamily& fam, int grid) {
  std::int64_t N = fam.nref();
  std::int64_t cells = 1;
  for (int d = 0; d < fam.n; ++d) cells *= N;
  std::vector<Rat> out(cells, Rat(0));
  struct Rec {
    const Field<Rat>&f;
    const Field<Rat>& s;
    const GridFamily& fam;
    std::vector<Rat>& out;
    std::int64_t N;
    void visit(const Cube& q, Rat best) {
      Rat sq = s.cube_integral(q);
      if (sq > 0) {
        Rat v = f.cube_integral(q) / sq;
        if (v > best) best = v;
      }
      if (q.level == fam.level_min()) {
        std::array<std::int64_t, 3> lo{0, 0, 0}, hi{0, 0, 0};
        std::int64_t sr = side_ref(q.level, fam.L);
        for (int d = 0; d < fam.n; ++d) {
          lo[d] = std::max<std::int64_t>(0, cube_lo_ref(q, d, fam.L));
          hi[d] = std::min<std::int64_t>(N, cube_lo_ref(q, d, fam.L) + sr);
        }
        std::int64_t y0 = fam.n >= 2 ? lo[1] : 0, y1 = fam.n >= 2 ? hi[1] : 1;
        std::int64_t z0 = fam.n >= 3 ? lo[2] : 0, z1 = fam.n >= 3 ? hi[2] : 1;
        for (std::int64_t z = z0; z < z1; ++z)
          for (std::int64_t y = y0; y < y1; ++y)
            for (std::int64_t x = lo[0]; x < hi[0]; ++x)
              out[x + N * (y + N * z)] = best;
        return;
      }
      for (int c = 0; c < (1 << fam.n); ++c) {
        Cube ch = cube_child(q, c);
        if (cube_intersects_domain(ch, fam)) visit(ch, best);
      }
    }
  } rec{f, sigma, fam, out, N};
  rec.visit(grid_root(fam, grid), Rat(0));
  return out;
}

GeoData make_geo(const Field<Rat>& f) {
  GeoData g;
  std::vector<double> logs(f.cells.size()), zeros(f.cells.size());
  for (std::size_t i = 0; i < f.cells.size(); ++i) {
    if (f.cells[i] == 0) {
      logs[i] = 0;
      zeros[i] = 1;
    } else {
      logs[i] = std::log(to_d(f.cells[i]));
      zeros[i] = 0;
    }
  }
  g.outside_zero = (f.outside == 0);
  double lo = g.outside_zero ? 0.0 : std::log(to_d(f.outside));
  g.logs = Field<double>::make(f.n, f.L, f.N, std::move(logs), lo);
  g.zeros =
      Field<double>::make(f.n, f.L, f.N, std::move(zeros), g.outside_zero ? 1.0 : 0.0);
  return g;
}

double GeoData::cube_geomean(const Cube& q, const GridFamily& fam) const {
  std::array<std::int64_t, 3> lo{0, 0, 0}, hi{0, 0, 0};
  std::int64_t s = side_ref(q.level, fam.L);
  for (int d = 0; d < q.n; ++d) {
    lo[d] = cube_lo_ref(q, d, fam.L);
    hi[d] = lo[d] + s;
  }
  if (zeros.box_integral(lo, hi) > 0) return 0.0;
  double vol = std::ldexp(1.0, q.level * q.n);
  return std::exp(logs.box_integral(lo, hi) / vol);
}

double geo_value_ref(const GeoData& g, const GridFamily& fam, int grid,
                     const std::vector<Rat>& x_ref) {
  double best = 0;
  for (auto& c : point_chain(fam, grid, x_ref, Rat(0)))
    best = std::max(best, g.cube_geomean(c, fam));
  return best;
}

double chainmax_lp_integral(const GridFamily& fam, int grid,
                            const std::function<double(const Cube&)>& score,
                            const std::function<double(const Cube&)>& nu,
                            double p) {
  struct Rec {
    const GridFamily& fam;
    const std::function<double(const Cube&)>& score;
    const std::function<double(const Cube&)>& nu;
    double p;
    double visit(const Cube& q, double best) {
      best = std::max(best, score(q));
      if (q.level == fam.level_min())
        return best > 0 ? std::pow(best, p) * nu(q) : 0.0;
      double acc = 0;
      for (int c = 0; c < (1 << fam.n); ++c) {
        Cube ch = cube_child(q, c);
        if (cube_intersects_domain(ch, fam))
          acc += visit(ch, best);
        else if (best > 0)
          acc += std::pow(best, p) * nu(ch);
      }
      return acc;
    }
  } rec{fam, score, nu, p};
  return rec.visit(grid_root(fam, grid), 0.0);
}

OracleTable build_oracle(const FieldVec& F, int n, int L0, int L) {
  if (n > 2) throw GuardExceeded("oracle maximal supports n <= 2");
  OracleTable ot;
  ot.n = n;
  ot.L0 = L0;
  ot.L = L;
  ot.Ncell = std::int64_t(1) << (L0 + L);
  std::int64_t N = ot.Ncell;
  if ((n == 1 && N > 256) || (n == 2 && N > 64))
    throw GuardExceeded("oracle precompute too large at this resolution");
  std::int64_t cells = (n == 1) ? N : N * N;
  ot.best.assign(N, std::vector<Rat>(cells, Rat(0)));
  for (std::int64_t c = N; c >= 1; --c) {
    std::vector<Rat>& cur = ot.best[c - 1];
    std::int64_t P = N - c + 1;  // admissible positions per dim
    std::vector<Rat> val((n == 1) ? P : P * P);
    Rat vol = rpow(Rat(c) * pow2r(-L), n);
    std::int64_t p1 = (n == 2) ? P : 1;
    for (std::int64_t b = 0; b < p1; ++b)
      for (std::int64_t a = 0; a < P; ++a) {
        std::array<std::int64_t, 3> lo{3 * a, 3 * b, 0},
            hi{3 * (a + c), 3 * (b + c), 1};
        if (n == 1) {
          lo[1] = 0;
          hi[1] = 1;
        }
        Rat prod(1);
        for (auto& f : F) {
          Rat integ = f.box_integral(lo, hi);
          if (integ == 0) {
            prod = 0;
            break;
          }
          prod *= integ;
        }
        if (prod != 0) prod /= rpow(vol, F.size());
        val[a + P * b] = prod;
      }
    // window max: cell q sees positions a in [q-c+1, q] clipped to [0, P-1]
    auto wlo = [&](std::int64_t q) {
      return std::max<std::int64_t>(0, q - c + 1);
    };
    auto whi = [&](std::int64_t q) { return std::min<std::int64_t>(P - 1, q); };
    if (n == 1) {
      for (std::int64_t q = 0; q < N; ++q) {
        Rat m(0);
        for (std::int64_t a = wlo(q); a <= whi(q); ++a)
          if (val[a] > m) m = val[a];
        cur[q] = m;
      }
    } else {
      std::vector<Rat> rowmax(N * P);  // max over a1, per (q1, a2)
      for (std::int64_t b = 0; b < P; ++b)
        for (std::int64_t q = 0; q < N; ++q) {
          Rat m(0);
          for (std::int64_t a = wlo(q); a <= whi(q); ++a)
            if (val[a + P * b] > m) m = val[a + P * b];
          rowmax[q + N * b] = m;
        }
      for (std::int64_t q2 = 0; q2 < N; ++q2)
        for (std::int64_t q1 = 0; q1 < N; ++q1) {
          Rat m(0);
          for (std::int64_t b = wlo(q2); b <= whi(q2); ++b)
            if (rowmax[q1 + N * b] > m) m = rowmax[q1 + N * b];
          cur[q1 + N * q2] = m;
        }
    }
    if (c < N) {  // suffix max across side classes
      const std::vector<Rat>& nxt = ot.best[c];
      for (std::int64_t i = 0; i < cells; ++i)
        if (nxt[i] > cur[i]) cur[i] = nxt[i];
    }
  }
  return ot;
}

Rat OracleTable::query(const std::vector<Rat>& x, const Rat& t) const {
  Rat t_scaled = t * pow2r(L);
  std::int64_t cmin = ifloor(t_scaled) + 1;
  if (cmin > Ncell) return Rat(0);
  if (cmin < 1) cmin = 1;
  std::int64_t idx = 0, stride = 1;
  for (int d = 0; d < n; ++d) {
    std::int64_t q = ifloor(x[d] * pow2r(L));
    if (q < 0 || q >= Ncell) throw GuardExceeded("oracle query outside domain");
    idx += q * stride;
    stride *= Ncell;
  }
  return best[cmin - 1][idx];
}

}  // namespace upmax
