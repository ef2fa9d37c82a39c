#pragma once

#include <array>
#include <optional>

#include "upmax/common.hpp"

namespace upmax {

// Shifted dyadic grids (one-third trick): grid id beta in [0, 2^n), bit d of
// beta means a 1/3 shift in dimension d, applied with sign (-1)^k at level k.
// Cube (beta, k, j) realizes 2^k([0,1)^n + j + (-1)^k s_beta), half open.
//
// Internal coordinates use a thirds-refined lattice of cell width 2^-L/3, so
// every cube at level >= -L has integer refined corners:
//   lo_ref[d] = (3 j_d + (-1)^k s3_d) * 2^(k+L),  side_ref = 3 * 2^(k+L),
// where s3_d in {0,1}. The domain is [0, 3*2^(L0+L))^n in refined units.

inline int level_sign(int k) { return (k & 1) ? -1 : 1; }

struct Cube {
  int grid = 0;
  int level = 0;
  int n = 1;
  std::array<std::int64_t, 3> j{{0, 0, 0}};

  bool operator==(const Cube& o) const {
    return grid == o.grid && level == o.level && n == o.n && j == o.j;
  }
};

struct CubeKey {
  std::size_t operator()(const Cube& q) const {
    std::size_t h = (std::size_t)q.level * 1000003u + q.grid;
    for (int d = 0; d < q.n; ++d)
      h = h * 1469598103934665603ull + (std::size_t)(q.j[d] + (1ll << 40));
    return h;
  }
};

struct GridFamily {
  int n = 1;
  int L0 = 2;
  int L = 1;
  std::array<int, 8> level_max{};  // per grid id
  int level_min() const { return -L; }
  int grids() const { return 1 << n; }
  std::int64_t nref() const { return std::int64_t(3) << (L0 + L); }
  Rat cell_width() const { return pow2r(-L) / 3; }
};

inline int shift3(int grid, int d) { return (grid >> d) & 1; }

inline std::int64_t side_ref(int level, int L) {
  return std::int64_t(3) * (std::int64_t(1) << (level + L));
}

inline std::int64_t cube_lo_ref(const Cube& q, int d, int L) {
  std::int64_t base = 3 * q.j[d] + level_sign(q.level) * shift3(q.grid, d);
  return base * (std::int64_t(1) << (q.level + L));
}

inline Rat cube_side(const Cube& q) { return pow2r(q.level); }

inline Rat cube_volume(const Cube& q) { return pow2r((long)q.level * q.n); }

// Children of (k, J) at level k-1 have per-dim index 2 J_d + (-1)^k s3_d + b,
// b in {0,1}.
inline Cube cube_child(const Cube& q, int corner) {
  Cube c = q;
  c.level = q.level - 1;
  for (int d = 0; d < q.n; ++d)
    c.j[d] = 2 * q.j[d] + level_sign(q.level) * shift3(q.grid, d) +
             ((corner >> d) & 1);
  return c;
}

inline Cube cube_parent(const Cube& q) {
  Cube p = q;
  p.level = q.level + 1;
  for (int d = 0; d < q.n; ++d) {
    std::int64_t t = q.j[d] - level_sign(p.level) * shift3(q.grid, d);
    p.j[d] = (t >= 0) ? t / 2 : -((-t + 1) / 2);
  }
  return p;
}

// x given in refined units.
inline bool cube_contains_point(const Cube& q, const std::vector<Rat>& x_ref,
                                int L) {
  std::int64_t s = side_ref(q.level, L);
  for (int d = 0; d < q.n; ++d) {
    std::int64_t lo = cube_lo_ref(q, d, L);
    if (x_ref[d] < lo || x_ref[d] >= lo + s) return false;
  }
  return true;
}

inline bool cube_intersects_domain(const Cube& q, const GridFamily& fam) {
  std::int64_t s = side_ref(q.level, fam.L);
  for (int d = 0; d < q.n; ++d) {
    std::int64_t lo = cube_lo_ref(q, d, fam.L);
    if (lo >= fam.nref() || lo + s <= 0) return false;
  }
  return true;
}

inline bool cube_inside_domain(const Cube& q, const GridFamily& fam) {
  std::int64_t s = side_ref(q.level, fam.L);
  for (int d = 0; d < q.n; ++d) {
    std::int64_t lo = cube_lo_ref(q, d, fam.L);
    if (lo < 0 || lo + s > fam.nref()) return false;
  }
  return true;
}

// Same-grid containment: inner inside outer.
inline bool cube_contains_cube(const Cube& outer, const Cube& inner, int L) {
  if (outer.level < inner.level) return false;
  std::int64_t so = side_ref(outer.level, L), si = side_ref(inner.level, L);
  for (int d = 0; d < outer.n; ++d) {
    std::int64_t lo = cube_lo_ref(outer, d, L), li = cube_lo_ref(inner, d, L);
    if (li < lo || li + si > lo + so) return false;
  }
  return true;
}

// Level -L cube of the given grid containing x (refined units).
inline Cube leaf_of_point(const std::vector<Rat>& x_ref, int grid, int n,
                          int L) {
  Cube q;
  q.grid = grid;
  q.level = -L;
  q.n = n;
  int e = level_sign(-L);
  for (int d = 0; d < n; ++d) {
    long xi = ifloor(x_ref[d]);
    long t = xi - e * shift3(grid, d);
    q.j[d] = (t >= 0) ? t / 3 : -((-t + 2) / 3);
  }
  return q;
}

// Enumerated family cube list: cubes of one grid and level intersecting the
// domain, lexicographic in j.
std::vector<Cube> enumerate_level(const GridFamily& fam, int grid, int level);

// All cubes of the family, ordered by (grid, level ascending, lex index).
std::vector<Cube> enumerate_all(const GridFamily& fam);

// Smallest enumerated cube containing the axis box [lo, lo+side)^n (real
// units); side-length guarantee is 6x. Throws NotCovered past level_max.
Cube covering_cube(const GridFamily& fam, const std::vector<Rat>& lo,
                   const Rat& side);

}  // namespace upmax
