#pragma once

#include <functional>

#include "upmax/instance.hpp"

namespace upmax {

using FieldVec = std::vector<Field<Rat>>;

// Product of cube averages (1/|Q|) int_Q F_i for the fields in F.
Rat avg_product(const FieldVec& F, const Cube& q);

// Root cube of a grid: the unique enumerated top-level cube meeting the
// domain. Requires level_max[grid] >= L0 + 2.
Cube grid_root(const GridFamily& fam, int grid);

// Chain of enumerated cubes containing x (refined units) with side > t,
// smallest first. Cubes that miss the domain are not part of the family.
std::vector<Cube> point_chain(const GridFamily& fam, int grid,
                              const std::vector<Rat>& x_ref, const Rat& t);

// Half-space dyadic maximal of one grid at (x, t): max product average over
// chain cubes with t < side. x in real units.
Rat halfspace_value(const FieldVec& F, const GridFamily& fam, int grid,
                    const std::vector<Rat>& x, const Rat& t);
Rat halfspace_value_ref(const FieldVec& F, const GridFamily& fam, int grid,
                        const std::vector<Rat>& x_ref, const Rat& t);

// mu-mass of { M_grid(F) > lambda } (or >= when strict is false).
Rat level_set_mass(const Measure& mu, const FieldVec& F, const GridFamily& fam,
                   int grid, const Rat& lambda, bool strict);

// Per-cell tables of the boundary maximal: by_level[k + L][cell] is the max
// product average over chain cubes of level >= k. Valid on domain cells only.
struct ChainTables {
  int grid = 0;
  int level_lo = 0, level_hi = 0;
  std::vector<std::vector<Rat>> by_level;
  const std::vector<Rat>& boundary() const { return by_level.front(); }
  const std::vector<Rat>& at_level(int k) const {
    return by_level[k - level_lo];
  }
};

ChainTables build_chain_tables(const FieldVec& F, const GridFamily& fam,
                               int grid);

// Weighted dyadic maximal over one grid at the boundary: per refined domain
// cell, max over the chain of (int_C f sigma) / sigma(C).
std::vector<Rat> weighted_max_boundary(const Field<Rat>& f,
                                       const Field<Rat>& sigma,
                                       const GridFamily& fam, int grid);

// Geometric maximal at the boundary; a cube on which the function vanishes on
// a set of positive measure (or that leaves the support region) scores 0.
struct GeoData {
  Field<double> logs;   // cellwise log of the function, 0 where it vanishes
  Field<double> zeros;  // 1.0 on vanishing cells
  bool outside_zero = true;
  double cube_geomean(const Cube& q, const GridFamily& fam) const;
};
GeoData make_geo(const Field<Rat>& f);
double geo_value_ref(const GeoData& g, const GridFamily& fam, int grid,
                     const std::vector<Rat>& x_ref);

// int (chain-max field)^p dnu over the root region of one grid, where the
// field at x is the running max of score over family cubes containing x and
// nu is box-additive. Exact distribution by recursion on the cube tree.
double chainmax_lp_integral(const GridFamily& fam, int grid,
                            const std::function<double(const Cube&)>& score,
                            const std::function<double(const Cube&)>& nu,
                            double p);

// Full (grid-free) maximal over lattice-aligned cubes, precomputed per side
// class with a suffix max so queries are O(1). n <= 2 only.
struct OracleTable {
  int n = 1, L0 = 0, L = 0;
  std::int64_t Ncell = 0;  // dyadic cells per dim
  std::vector<std::vector<Rat>> best;  // [c-1][cell], max over sides >= c

  // x in real units inside the domain; strict admissibility t < side.
  Rat query(const std::vector<Rat>& x, const Rat& t) const;
};

OracleTable build_oracle(const FieldVec& F, int n, int L0, int L);

}  // namespace upmax
