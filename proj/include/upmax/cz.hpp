#pragma once

#include <unordered_map>

#include "upmax/maximal.hpp"

namespace upmax {

// One selected cube of the stopping family: maximal among the cubes whose
// product average exceeds a^k, together with the exact leftover sets
//   E_Q = Q minus the next-generation selected cubes inside Q,
//   Ehat = box(Q) minus the next-generation boxes.
struct SelectedCube {
  Cube cube;
  Rat avg;      // product of averages over Q
  Rat vol;      // |Q|
  Rat e_vol;    // |E_Q|
  Rat box_mu;   // mu(box(Q))
  Rat ehat_mu;  // mu(Ehat_Q)
  std::vector<int> children;  // indices into the next level's cube list
};

struct SparseLevel {
  long k = 0;
  std::vector<SelectedCube> cubes;
};

// Stopping-time decomposition of one grid with ratio a = 2^(m(n+1)) and
// window width 2^(mn). The grid top is raised until the root average lands
// inside a window, so the two-sided window bound holds for every selection.
struct SparseFamily {
  int grid = 0;
  int n = 1, m = 1;
  long k_min = 0, k_max = -1;
  int level_top = 0;  // grid top actually used
  Rat a;
  Rat window;  // 2^(mn)
  std::vector<SparseLevel> levels;  // k ascending, k_min..k_max
  std::unordered_map<Cube, std::pair<int, int>, CubeKey> index;

  bool empty() const { return levels.empty(); }
  Rat a_pow(long k) const { return pow2r((long)m * (n + 1) * k); }
  const SelectedCube* find(const Cube& q) const {
    auto it = index.find(q);
    if (it == index.end()) return nullptr;
    return &levels[it->second.first].cubes[it->second.second];
  }
  long k_of(const Cube& q) const {
    auto it = index.find(q);
    return it == index.end() ? k_min - 1 : levels[it->second.first].k;
  }
};

// fam is copied and its top for this grid may be raised; the family actually
// used is recorded in level_top.
SparseFamily decompose(const GridFamily& fam, const FieldVec& F,
                       const Measure& mu, int grid);

// Maximal cubes with product average exceeding a^k (one grid, one level of
// the stopping scale); standalone counterpart of one decompose round.
std::vector<Cube> select_level_cubes(const GridFamily& fam, const FieldVec& F,
                                     int grid, const Rat& threshold);

// Exact re-verification of the construction invariants; returns messages for
// any violation (empty means all pass).
std::vector<std::string> check_sparse_invariants(const SparseFamily& sf,
                                                 const GridFamily& fam,
                                                 const FieldVec& F,
                                                 const Measure& mu);

// Level-set identity Omega-hat_k = union of selected boxes, tested pointwise
// at (x_ref, t); exact both directions. Returns violation messages.
std::vector<std::string> level_set_identity_check(
    const SparseFamily& sf, const GridFamily& fam, const FieldVec& F,
    const std::vector<std::pair<std::vector<Rat>, Rat>>& samples);

// Pointwise sparse domination M(F)^q <= a^q sum avg(Q)^q chi_box(Q) and its
// disjoint sharpening through Ehat; q > 0 real. Returns violations.
std::vector<std::string> sparse_domination_check(
    const SparseFamily& sf, const GridFamily& fam, const FieldVec& F, double q,
    const std::vector<std::pair<std::vector<Rat>, Rat>>& samples);

// GridFamily with this grid's top raised to the decomposition's level_top.
GridFamily family_with_top(GridFamily fam, const SparseFamily& sf);

}  // namespace upmax
