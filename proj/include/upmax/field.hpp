#pragma once

#include <cmath>

#include "upmax/grid.hpp"

namespace upmax {

template <class T>
struct num_traits;

template <>
struct num_traits<Rat> {
  static Rat pow2(long e) { return pow2r(e); }
  static Rat of_int(std::int64_t v) { return Rat(v); }
};

template <>
struct num_traits<double> {
  static double pow2(long e) { return std::ldexp(1.0, e); }
  static double of_int(std::int64_t v) { return double(v); }
};

// Step function on the thirds-refined lattice over the domain [0, 2^L0)^n,
// extended by a constant outside the domain. Cell width 2^-L/3; N cells per
// dimension; row-major index x0 + N*(x1 + N*x2).
template <class T>
struct Field {
  int n = 1;
  int L = 0;
  std::int64_t N = 0;
  std::vector<T> cells;
  std::vector<T> prefix;  // (N+1)^n cumulative sums
  T outside{};
  T cellvol{};

  static Field make(int n, int L, std::int64_t N, std::vector<T> cells,
                    T outside) {
    Field f;
    f.n = n;
    f.L = L;
    f.N = N;
    f.cells = std::move(cells);
    f.outside = outside;
    f.cellvol = num_traits<T>::pow2((long)(-L) * n);
    for (int d = 0; d < n; ++d) f.cellvol /= 3;
    f.build_prefix();
    return f;
  }

  std::int64_t cell_count() const {
    std::int64_t c = 1;
    for (int d = 0; d < n; ++d) c *= N;
    return c;
  }

  std::int64_t cell_index(std::int64_t x0, std::int64_t x1 = 0,
                          std::int64_t x2 = 0) const {
    return x0 + N * (x1 + N * x2);
  }

  void build_prefix() {
    std::int64_t M = N + 1;
    std::int64_t sz = M;
    for (int d = 1; d < n; ++d) sz *= M;
    prefix.assign(sz, T{});
    auto P = [&](std::int64_t a, std::int64_t b, std::int64_t c) -> T& {
      return prefix[a + M * (b + M * c)];
    };
    std::int64_t ymax = (n >= 2) ? N : 0, zmax = (n >= 3) ? N : 0;
    for (std::int64_t z = 0; z <= zmax; ++z)
      for (std::int64_t y = 0; y <= ymax; ++y)
        for (std::int64_t x = 0; x <= N; ++x) {
          if (x == 0 || (n >= 2 && y == 0) || (n >= 3 && z == 0)) continue;
          T v = cells[cell_index(x - 1, n >= 2 ? y - 1 : 0, n >= 3 ? z - 1 : 0)];
          v += P(x - 1, y, z);
          if (n >= 2) {
            v += P(x, y - 1, z);
            v -= P(x - 1, y - 1, z);
          }
          if (n >= 3) {
            v += P(x, y, z - 1);
            v -= P(x - 1, y, z - 1);
            v -= P(x, y - 1, z - 1);
            v += P(x - 1, y - 1, z - 1);
          }
          P(x, y, z) = v;
        }
  }

  // Sum of cells over [lo, hi) intersected with [0, N)^n; bounds arbitrary.
  T clipped_sum(const std::array<std::int64_t, 3>& lo,
                const std::array<std::int64_t, 3>& hi) const {
    std::array<std::int64_t, 3> a{0, 0, 0}, b{0, 0, 0};
    for (int d = 0; d < n; ++d) {
      a[d] = std::max<std::int64_t>(0, std::min(lo[d], N));
      b[d] = std::max<std::int64_t>(0, std::min(hi[d], N));
      if (b[d] <= a[d]) return T{};
    }
    std::int64_t M = N + 1;
    auto P = [&](std::int64_t x, std::int64_t y, std::int64_t z) {
      return prefix[x + M * (y + M * z)];
    };
    if (n == 1) return P(b[0], 0, 0) - P(a[0], 0, 0);
    if (n == 2)
      return P(b[0], b[1], 0) - P(a[0], b[1], 0) - P(b[0], a[1], 0) +
             P(a[0], a[1], 0);
    return P(b[0], b[1], b[2]) - P(a[0], b[1], b[2]) - P(b[0], a[1], b[2]) -
           P(b[0], b[1], a[2]) + P(a[0], a[1], b[2]) + P(a[0], b[1], a[2]) +
           P(b[0], a[1], a[2]) - P(a[0], a[1], a[2]);
  }

  std::int64_t clipped_count(const std::array<std::int64_t, 3>& lo,
                             const std::array<std::int64_t, 3>& hi) const {
    std::int64_t c = 1;
    for (int d = 0; d < n; ++d) {
      std::int64_t a = std::max<std::int64_t>(0, std::min(lo[d], N));
      std::int64_t b = std::max<std::int64_t>(0, std::min(hi[d], N));
      c *= std::max<std::int64_t>(0, b - a);
    }
    return c;
  }

  // Integral over an arbitrary refined-unit box, outside extension included.
  T box_integral(const std::array<std::int64_t, 3>& lo,
                 const std::array<std::int64_t, 3>& hi) const {
    T inside = clipped_sum(lo, hi) * cellvol;
    std::int64_t full = 1;
    for (int d = 0; d < n; ++d) full *= (hi[d] - lo[d]);
    std::int64_t clip = clipped_count(lo, hi);
    if (clip == full) return inside;
    return inside + outside * (num_traits<T>::of_int(full - clip) * cellvol);
  }

  T cube_integral(const Cube& q) const {
    std::array<std::int64_t, 3> lo{0, 0, 0}, hi{0, 0, 0};
    std::int64_t s = side_ref(q.level, L);
    for (int d = 0; d < n; ++d) {
      lo[d] = cube_lo_ref(q, d, L);
      hi[d] = lo[d] + s;
    }
    return box_integral(lo, hi);
  }

  // Integral over the intersection of two boxes given as cube extents.
  T cube_intersection_integral(const Cube& q, const Cube& r) const {
    std::array<std::int64_t, 3> lo{0, 0, 0}, hi{0, 0, 0};
    std::int64_t sq = side_ref(q.level, L), sr = side_ref(r.level, L);
    for (int d = 0; d < n; ++d) {
      std::int64_t a = cube_lo_ref(q, d, L), b = cube_lo_ref(r, d, L);
      lo[d] = std::max(a, b);
      hi[d] = std::min(a + sq, b + sr);
      if (hi[d] <= lo[d]) return T{};
    }
    return box_integral(lo, hi);
  }
};

// Pointwise map of a dyadic cell array into a refined field.
template <class T>
Field<T> expand_to_refined(int n, int L0, int L, const std::vector<T>& dyadic,
                           T outside) {
  std::int64_t Nd = std::int64_t(1) << (L0 + L);
  std::int64_t N = 3 * Nd;
  std::int64_t total = 1;
  for (int d = 0; d < n; ++d) total *= N;
  std::vector<T> cells(total);
  std::int64_t n1 = n >= 2 ? N : 1, n2 = n >= 3 ? N : 1;
  for (std::int64_t z = 0; z < n2; ++z)
    for (std::int64_t y = 0; y < n1; ++y)
      for (std::int64_t x = 0; x < N; ++x) {
        std::int64_t src = (x / 3) + Nd * ((y / 3) + Nd * (z / 3));
        if (n == 1) src = x / 3;
        if (n == 2) src = (x / 3) + Nd * (y / 3);
        cells[x + N * (y + N * z)] = dyadic[src];
      }
  return Field<T>::make(n, L, N, std::move(cells), outside);
}

}  // namespace upmax
