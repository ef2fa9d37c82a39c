#pragma once

#include "upmax/cz.hpp"

namespace upmax {

struct ConstantReport {
  std::string kind;
  std::string mode = "dyadic";
  double value = 0;
  bool infinite = false;
  bool has_witness = false;
  Cube witness;
};

// Weight characteristics as suprema over the enumerated cube family. All
// evaluation is floating point; the supremum family is the 2^n-grid
// enumeration of fam (which may carry raised tops from a decomposition), so
// enlarging level_max never decreases a reported value.
class Constants {
 public:
  Constants(const Workspace& ws, GridFamily fam);

  ConstantReport a_p() const;
  ConstantReport a_p_prime() const;
  ConstantReport c_zero() const;
  ConstantReport c_infty() const;
  ConstantReport reverse_holder() const;
  // Definition form on w when dual is false; same functional form on the
  // dual weights sigma when dual is true (the form the proof chain needs).
  ConstantReport b_prime(bool dual) const;
  // Sawyer testing characteristic of one grid (numerator integrates the
  // half-space maximal of sigma chi_Q against mu over the box).
  ConstantReport s_prime(int grid) const;
  // W_infty over the cubes of one grid with M the same grid's dyadic
  // maximal; dual switches w -> sigma.
  ConstantReport w_infty_grid(int grid, bool dual) const;
  // Small-case reference: cubes and M both range over lattice cubes (n = 1).
  ConstantReport w_infty_oracle(bool dual) const;

  const std::vector<Cube>& cubes() const { return cubes_; }
  const GridFamily& family() const { return fam_; }

  double mu_box(const Cube& q) const;
  double vol(const Cube& q) const;
  double sig_int(int i, const Cube& q) const;
  double w_int(int i, const Cube& q) const;

 private:
  const Workspace& ws_;
  GridFamily fam_;
  std::vector<Cube> cubes_;

  template <class Fn>
  ConstantReport scan(const char* kind, Fn&& per_cube) const;
  template <class Fn>
  ConstantReport scan_grid(const char* kind, int grid, Fn&& per_cube) const;
  double apexpr(const Cube& q, bool prime) const;
};

}  // namespace upmax
