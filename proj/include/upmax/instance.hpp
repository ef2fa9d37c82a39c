#pragma once

#include "upmax/exponents.hpp"
#include "upmax/field.hpp"
#include "upmax/measure.hpp"

namespace upmax {

// A complete problem instance: exponents, m weights and m functions as step
// data on the dyadic cell lattice of [0, 2^L0)^n at resolution 2^-L, and a
// finite atomic measure on the closed upper half space.
struct Instance {
  int n = 1;
  int m = 1;
  int L0 = 2;
  int L = 1;
  std::vector<Rat> p_raw;
  std::vector<std::vector<Rat>> weight_cells;  // m arrays, row-major
  std::vector<std::vector<Rat>> func_cells;
  std::vector<Atom> atoms;
  std::vector<Rat> lift_cells;  // optional boundary mass per dyadic cell
  std::uint64_t seed = 0;

  std::int64_t dyadic_per_dim() const { return std::int64_t(1) << (L0 + L); }
  std::int64_t dyadic_cells() const {
    std::int64_t c = 1;
    for (int d = 0; d < n; ++d) c *= dyadic_per_dim();
    return c;
  }
  std::string digest() const;
  void validate() const;  // throws on malformed data
};

struct GenParams {
  std::uint64_t seed = 1;
  int n = 1;
  int m = 1;
  std::vector<Rat> p{Rat(2)};
  int L0 = 2;
  int L = 1;
  int B = 2;        // weight cells drawn from 2^[-B..B]; B=0 means w == 1
  int n_atoms = 8;
  int zero_pct = 30;  // percent of function cells forced to 0
  bool lift = false;  // add boundary mass to every cell (keeps C0 finite)
};

Instance generate_instance(const GenParams& gp);

std::string instance_to_json_string(const Instance& inst);
Instance instance_from_json_string(const std::string& text);
Instance load_instance_file(const std::string& path);
void save_instance_file(const Instance& inst, const std::string& path);

// Derived exact and floating fields on the thirds-refined lattice. Weights
// extend by 1 outside the domain, functions by 0; sigma_i = w_i^(1-p_i'),
// v = prod w_i^(p/p_i), gprod = prod sigma_i^(p/p_i).
struct Workspace {
  Instance inst;
  Exponents ex;
  GridFamily fam;
  Measure mu;
  std::vector<Field<Rat>> w, f, sigma, fsig;
  Field<Rat> v, gprod;
  Field<double> log_dual_w;    // sum_i (-1/p_i) log w_i
  Field<double> log_dual_sig;  // sum_i (-1/p_i) log sigma_i
  Field<double> log_g;         // log gprod
};

Workspace build_workspace(Instance inst);

}  // namespace upmax
