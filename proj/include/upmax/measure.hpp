#pragma once

#include <optional>

#include "upmax/field.hpp"
#include "upmax/grid.hpp"

namespace upmax {

// Finite measure on the closed upper half space: a list of atoms (heights
// t >= 0) plus an optional boundary lift laying mass at the center of every
// refined lattice cell at t = 0. The lift makes mu(Q~) positive for every
// enumerated cube, which keeps the C0 characteristic finite.
struct Atom {
  std::vector<Rat> x;      // real units
  Rat t;                   // height >= 0
  Rat mass;                // > 0
  std::vector<Rat> x_ref;  // x * 3 * 2^L, cached
};

struct Measure {
  std::vector<Atom> atoms;
  std::optional<Field<Rat>> lift;  // cell entries are masses, not densities

  Rat total() const {
    Rat s(0);
    for (auto& a : atoms) s += a.mass;
    if (lift) {
      std::array<std::int64_t, 3> lo{0, 0, 0}, hi{0, 0, 0};
      for (int d = 0; d < lift->n; ++d) hi[d] = lift->N;
      s += lift->clipped_sum(lo, hi);
    }
    return s;
  }
};

// Mass of the Carleson box over Q: x in Q and t < side(Q) (open top).
inline Rat box_mass(const Measure& mu, const Cube& q, int L) {
  Rat side = cube_side(q);
  Rat s(0);
  for (auto& a : mu.atoms) {
    if (a.t >= side) continue;
    if (cube_contains_point(q, a.x_ref, L)) s += a.mass;
  }
  if (mu.lift) {
    std::array<std::int64_t, 3> lo{0, 0, 0}, hi{0, 0, 0};
    std::int64_t sr = side_ref(q.level, L);
    for (int d = 0; d < q.n; ++d) {
      lo[d] = cube_lo_ref(q, d, L);
      hi[d] = lo[d] + sr;
    }
    s += mu.lift->clipped_sum(lo, hi);
  }
  return s;
}

inline void cache_refined(Atom& a, int L) {
  a.x_ref.clear();
  Rat scale = Rat(3) * pow2r(L);
  for (auto& c : a.x) a.x_ref.push_back(c * scale);
}

}  // namespace upmax
