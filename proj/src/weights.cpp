#include "upmax/weights.hpp"

#include <cmath>

namespace upmax {

Constants::Constants(const Workspace& ws, GridFamily fam)
    : ws_(ws), fam_(fam), cubes_(enumerate_all(fam)) {}

double Constants::mu_box(const Cube& q) const {
  return to_d(box_mass(ws_.mu, q, fam_.L));
}

double Constants::vol(const Cube& q) const {
  return std::ldexp(1.0, q.level * q.n);
}

double Constants::sig_int(int i, const Cube& q) const {
  return to_d(ws_.sigma[i].cube_integral(q));
}

double Constants::w_int(int i, const Cube& q) const {
  return to_d(ws_.w[i].cube_integral(q));
}

template <class Fn>
ConstantReport Constants::scan(const char* kind, Fn&& per_cube) const {
  ConstantReport r;
  r.kind = kind;
  for (auto& q : cubes_) {
    auto [val, inf] = per_cube(q);
    if (inf) {
      r.infinite = true;
      r.witness = q;
      r.has_witness = true;
      continue;
    }
    if (val > r.value) {
      r.value = val;
      r.witness = q;
      r.has_witness = true;
    }
  }
  return r;
}

template <class Fn>
ConstantReport Constants::scan_grid(const char* kind, int grid,
                                    Fn&& per_cube) const {
  ConstantReport r;
  r.kind = kind;
  for (auto& q : cubes_) {
    if (q.grid != grid) continue;
    auto [val, inf] = per_cube(q);
    if (inf) {
      r.infinite = true;
      r.witness = q;
      r.has_witness = true;
      continue;
    }
    if (val > r.value) {
      r.value = val;
      r.witness = q;
      r.has_witness = true;
    }
  }
  return r;
}

double Constants::apexpr(const Cube& q, bool prime) const {
  double V = vol(q);
  double lead = prime ? mu_box(q) / V : to_d(ws_.v.cube_integral(q)) / V;
  double acc = std::pow(lead, 1.0 / ws_.ex.p_d);
  for (int i = 0; i < ws_.ex.m; ++i)
    acc *= std::pow(sig_int(i, q) / V, 1.0 / ws_.ex.p_conj_d[i]);
  return acc;
}

ConstantReport Constants::a_p() const {
  return scan("a_p", [&](const Cube& q) {
    return std::make_pair(apexpr(q, false), false);
  });
}

ConstantReport Constants::a_p_prime() const {
  return scan("a_p_prime", [&](const Cube& q) {
    return std::make_pair(apexpr(q, true), false);
  });
}

ConstantReport Constants::c_zero() const {
  return scan("c_zero", [&](const Cube& q) {
    double mu = mu_box(q);
    if (mu <= 0) return std::make_pair(0.0, true);
    return std::make_pair(to_d(ws_.v.cube_integral(q)) / mu, false);
  });
}

ConstantReport Constants::c_infty() const {
  return scan("c_infty", [&](const Cube& q) {
    return std::make_pair(mu_box(q) / to_d(ws_.v.cube_integral(q)), false);
  });
}

ConstantReport Constants::reverse_holder() const {
  return scan("rh_p", [&](const Cube& q) {
    double V = vol(q);
    double num = 1;
    for (int i = 0; i < ws_.ex.m; ++i)
      num *= std::pow(sig_int(i, q) / V,
                      ws_.ex.p_d / ws_.ex.p_i_d[i]);
    double den = to_d(ws_.gprod.cube_integral(q)) / V;
    return std::make_pair(num / den, false);
  });
}

ConstantReport Constants::b_prime(bool dual) const {
  const Field<double>& lg = dual ? ws_.log_dual_sig : ws_.log_dual_w;
  auto r = scan(dual ? "b_prime_dual" : "b_prime", [&](const Cube& q) {
    double V = vol(q);
    double mu = mu_box(q);
    if (mu <= 0) return std::make_pair(0.0, false);
    double acc = std::pow(mu / V, 1.0 / ws_.ex.p_d);
    for (int i = 0; i < ws_.ex.m; ++i)
      acc *= (dual ? sig_int(i, q) : w_int(i, q)) / V;
    acc *= std::exp(lg.cube_integral(q) / V);
    return std::make_pair(acc, false);
  });
  return r;
}

namespace {

// sum over the lift points in the subtree of top of mass * best^p, where
// best is the running max of prod_i sigma_i(C)/|C| down the chain
struct LiftTestingSum {
  const Workspace& ws;
  const GridFamily& fam;
  double p;
  std::int64_t N;
  double acc = 0;

  double score(const Cube& c) const {
    double V = std::ldexp(1.0, c.level * c.n);
    double s = 1;
    for (int i = 0; i < ws.ex.m; ++i)
      s *= to_d(ws.sigma[i].cube_integral(c)) / V;
    return s;
  }

  void visit(const Cube& c, double best) {
    best = std::max(best, score(c));
    if (c.level == fam.level_min()) {
      if (!ws.mu.lift) return;
      std::array<std::int64_t, 3> lo{0, 0, 0}, hi{0, 0, 0};
      std::int64_t sr = side_ref(c.level, fam.L);
      for (int d = 0; d < fam.n; ++d) {
        lo[d] = std::max<std::int64_t>(0, cube_lo_ref(c, d, fam.L));
        hi[d] = std::min<std::int64_t>(N, cube_lo_ref(c, d, fam.L) + sr);
      }
      double mass = to_d(ws.mu.lift->clipped_sum(lo, hi));
      if (mass > 0 && best > 0) acc += std::pow(best, p) * mass;
      return;
    }
    for (int b = 0; b < (1 << fam.n); ++b) {
      Cube ch = cube_child(c, b);
      if (cube_intersects_domain(ch, fam)) visit(ch, best);
    }
  }
};

}  // namespace

ConstantReport Constants::s_prime(int grid) const {
  double p = ws_.ex.p_d;
  return scan_grid("s_prime", grid, [&](const Cube& q) {
    double den = 1;
    for (int i = 0; i < ws_.ex.m; ++i)
      den *= std::pow(sig_int(i, q), 1.0 / ws_.ex.p_i_d[i]);
    double num = 0;
    Rat side = cube_side(q);
    for (auto& at : ws_.mu.atoms) {
      if (at.t >= side || !cube_contains_point(q, at.x_ref, fam_.L)) continue;
      // chain of the atom clipped to cubes meeting Q; C inside Q uses
      // sigma(C), C containing Q uses sigma(Q), both via box intersection
      Rat best(0);
      for (auto& c : point_chain(fam_, q.grid, at.x_ref, at.t)) {
        Rat v(1);
        for (int i = 0; i < ws_.ex.m; ++i)
          v *= ws_.sigma[i].cube_intersection_integral(c, q);
        v /= rpow(cube_volume(c), ws_.ex.m);
        if (v > best) best = v;
      }
      if (best > 0) num += std::pow(to_d(best), p) * to_d(at.mass);
    }
    if (ws_.mu.lift) {
      LiftTestingSum lt{ws_, fam_, p, fam_.nref()};
      lt.visit(q, 0.0);
      num += lt.acc;
    }
    return std::make_pair(std::pow(num, 1.0 / p) / den, false);
  });
}

namespace {

// int over Q of prod_i M(sigma_i chi_Q)^(p/p_i) dx by recursion; best_i is
// the running chain max of sigma_i(C)/|C| for C between Q and the current
// cube. Regions past the enumerated family keep the running value.
struct WinftyNum {
  const Workspace& ws;
  const GridFamily& fam;
  const std::vector<Field<Rat>>& wts;
  double acc = 0;

  double integrand(const std::array<double, 3>& best) const {
    double v = 1;
    for (int i = 0; i < ws.ex.m; ++i)
      v *= std::pow(best[i], ws.ex.p_d / ws.ex.p_i_d[i]);
    return v;
  }

  void visit(const Cube& c, std::array<double, 3> best) {
    double V = std::ldexp(1.0, c.level * c.n);
    for (int i = 0; i < ws.ex.m; ++i)
      best[i] = std::max(best[i], to_d(wts[i].cube_integral(c)) / V);
    if (c.level == fam.level_min()) {
      acc += integrand(best) * V;
      return;
    }
    for (int b = 0; b < (1 << fam.n); ++b) {
      Cube ch = cube_child(c, b);
      if (cube_intersects_domain(ch, fam))
        visit(ch, best);
      else
        acc += integrand(best) * std::ldexp(1.0, ch.level * ch.n);
    }
  }
};

}  // namespace

ConstantReport Constants::w_infty_grid(int grid, bool dual) const {
  const std::vector<Field<Rat>>& wts = dual ? ws_.sigma : ws_.w;
  const Field<Rat>& den_field = dual ? ws_.gprod : ws_.v;
  auto r = scan_grid("w_infty", grid, [&](const Cube& q) {
    WinftyNum wn{ws_, fam_, wts};
    wn.visit(q, {0, 0, 0});
    double den = to_d(den_field.cube_integral(q));
    return std::make_pair(wn.acc / den, false);
  });
  r.mode = dual ? "grid_dual" : "grid";
  return r;
}

ConstantReport Constants::w_infty_oracle(bool dual) const {
  ConstantReport r;
  r.kind = "w_infty";
  r.mode = dual ? "oracle_dual" : "oracle";
  if (fam_.n != 1) throw GuardExceeded("oracle W_infty supports n = 1 only");
  std::int64_t N = std::int64_t(1) << (fam_.L0 + fam_.L);
  if (N > 16) throw GuardExceeded("oracle W_infty limited to 16 cells");
  const std::vector<Field<Rat>>& wts = dual ? ws_.sigma : ws_.w;
  const Field<Rat>& den_field = dual ? ws_.gprod : ws_.v;
  double cw = std::ldexp(1.0, -fam_.L);
  auto seg_int = [&](const Field<Rat>& f, std::int64_t a, std::int64_t b) {
    std::array<std::int64_t, 3> lo{3 * a, 0, 0}, hi{3 * b, 1, 1};
    return to_d(f.box_integral(lo, hi));
  };
  for (std::int64_t c = 1; c <= N; ++c)
    for (std::int64_t a = 0; a + c <= N; ++a) {
      double num = 0;
      for (std::int64_t r1 = a; r1 < a + c; ++r1) {
        double cellmax[3] = {0, 0, 0};
        for (std::int64_t cc = 1; cc <= N; ++cc)
          for (std::int64_t aa = std::max<std::int64_t>(0, r1 - cc + 1);
               aa <= std::min(r1, N - cc); ++aa)
            for (int i = 0; i < ws_.ex.m; ++i) {
              std::int64_t il = std::max(aa, a), ih = std::min(aa + cc, a + c);
              double v = il < ih ? seg_int(wts[i], il, ih) / (cc * cw) : 0;
              cellmax[i] = std::max(cellmax[i], v);
            }
        double best = 1;
        for (int i = 0; i < ws_.ex.m; ++i)
          best *= std::pow(cellmax[i], ws_.ex.p_d / ws_.ex.p_i_d[i]);
        num += best * cw;
      }
      double den = seg_int(den_field, a, a + c);
      double val = num / den;
      if (val > r.value) {
        r.value = val;
        r.has_witness = false;
      }
    }
  return r;
}

}  // namespace upmax
