#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "upmax/weights.hpp"

using namespace upmax;

namespace {

Instance two_cell_instance() {
  // domain [0,1), two cells, w = (1/4, 1), m = 1, p = 2
  Instance inst;
  inst.n = 1;
  inst.m = 1;
  inst.L0 = 0;
  inst.L = 1;
  inst.p_raw = {Rat(2)};
  inst.weight_cells = {{Rat(1, 4), Rat(1)}};
  inst.func_cells = {{Rat(1), Rat(1)}};
  return inst;
}

}  // namespace

TEST_CASE("muckenhoupt constant of a two-cell weight") {
  Workspace ws = build_workspace(two_cell_instance());
  Constants C(ws, ws.fam);
  ConstantReport ap = C.a_p();
  // witness [0,1): v avg 5/8, sigma avg 5/2, expr sqrt(25/16) = 5/4; larger
  // cubes mix in the outside extension 1 and only dilute
  CHECK(ap.value == doctest::Approx(1.25).epsilon(1e-12));
  CHECK(ap.has_witness);
  CHECK(ap.witness.level == 0);
  CHECK(ap.witness.grid == 0);
  CHECK(ap.witness.j[0] == 0);
}

TEST_CASE("flat weights give unit constants") {
  GenParams gp;
  gp.seed = 5;
  gp.n = 1;
  gp.m = 2;
  gp.p = {Rat(2), Rat(2)};
  gp.L0 = 2;
  gp.L = 1;
  gp.B = 0;  // weights identically 1
  gp.n_atoms = 6;
  Workspace ws = build_workspace(generate_instance(gp));
  Constants C(ws, ws.fam);
  CHECK(C.a_p().value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(C.reverse_holder().value == doctest::Approx(1.0).epsilon(1e-12));
  for (int g = 0; g < 2; ++g) {
    CHECK(C.w_infty_grid(g, false).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(C.w_infty_grid(g, true).value == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("flat weights tie the mu-based constants together") {
  GenParams gp;
  gp.seed = 6;
  gp.n = 1;
  gp.m = 1;
  gp.p = {Rat(2)};
  gp.L0 = 2;
  gp.L = 1;
  gp.B = 0;
  gp.n_atoms = 8;
  Workspace ws = build_workspace(generate_instance(gp));
  Constants C(ws, ws.fam);
  double ap = C.a_p_prime().value;
  double ci = C.c_infty().value;
  double bp = C.b_prime(false).value;
  // with w = 1: A' = sup (mu/|Q|)^(1/2) = sqrt(C_infty) = B'
  CHECK(ap == doctest::Approx(std::sqrt(ci)).epsilon(1e-12));
  CHECK(bp == doctest::Approx(ap).epsilon(1e-12));
  CHECK(C.b_prime(true).value == doctest::Approx(ap).epsilon(1e-12));
}

TEST_CASE("mass scaling laws") {
  GenParams gp;
  gp.seed = 7;
  gp.n = 1;
  gp.m = 2;
  gp.p = {Rat(3), Rat(3, 2)};
  gp.L0 = 2;
  gp.L = 1;
  gp.n_atoms = 6;
  gp.lift = true;
  Instance inst = generate_instance(gp);
  Workspace ws = build_workspace(inst);
  Instance scaled = inst;
  for (auto& a : scaled.atoms) a.mass *= 16;
  for (auto& c : scaled.lift_cells) c *= 16;
  Workspace ws16 = build_workspace(scaled);
  Constants C(ws, ws.fam), C16(ws16, ws16.fam);
  double p = ws.ex.p_d;
  CHECK(C16.c_infty().value == doctest::Approx(16 * C.c_infty().value));
  CHECK(C16.c_zero().value == doctest::Approx(C.c_zero().value / 16));
  CHECK(C16.a_p_prime().value ==
        doctest::Approx(std::pow(16.0, 1 / p) * C.a_p_prime().value));
  CHECK(C16.s_prime(0).value ==
        doctest::Approx(std::pow(16.0, 1 / p) * C.s_prime(0).value));
  CHECK(C16.a_p().value == doctest::Approx(C.a_p().value));  // mu-free
}

TEST_CASE("c_zero infinite without boundary mass everywhere") {
  Instance inst = two_cell_instance();
  Atom at;
  at.x = {Rat(0)};
  at.t = Rat(0);
  at.mass = Rat(1);
  inst.atoms.push_back(at);
  Workspace ws = build_workspace(inst);
  Constants C(ws, ws.fam);
  CHECK(C.c_zero().infinite);
  // adding lift mass in every cell makes it finite
  Instance lifted = inst;
  lifted.lift_cells.assign(2, Rat(1, 8));
  Workspace wsl = build_workspace(lifted);
  Constants Cl(wsl, wsl.fam);
  CHECK(!Cl.c_zero().infinite);
  CHECK(Cl.c_zero().value > 0);
}

TEST_CASE("testing constant of a single atom over flat weights") {
  // single atom at x = 0, t = 1/2, mass 9; sigma = 1. The testing quotient
  // over Q is sqrt(mass best^2 / |Q|) with best = 1 whenever the atom's
  // admissible chain reaches inside Q, so the sup is over the smallest such
  // cube: side 1 gives sqrt(9/1) = 3.
  Instance inst;
  inst.n = 1;
  inst.m = 1;
  inst.L0 = 2;
  inst.L = 1;
  inst.p_raw = {Rat(2)};
  inst.weight_cells = {std::vector<Rat>(8, Rat(1))};
  inst.func_cells = {std::vector<Rat>(8, Rat(1))};
  Atom at;
  at.x = {Rat(0)};
  at.t = Rat(1, 2);
  at.mass = Rat(9);
  inst.atoms.push_back(at);
  Workspace ws = build_workspace(inst);
  Constants C(ws, ws.fam);
  CHECK(C.s_prime(0).value == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("grid and oracle w_infty agree on small flat cases") {
  GenParams gp;
  gp.seed = 8;
  gp.n = 1;
  gp.m = 2;
  gp.p = {Rat(2), Rat(2)};
  gp.L0 = 2;
  gp.L = 1;
  gp.B = 0;
  gp.n_atoms = 4;
  Workspace ws = build_workspace(generate_instance(gp));
  Constants C(ws, ws.fam);
  ConstantReport oracle = C.w_infty_oracle(false);
  CHECK(oracle.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(oracle.mode == "oracle");
}

TEST_CASE("w_infty oracle guard") {
  GenParams gp;
  gp.seed = 9;
  gp.n = 1;
  gp.m = 1;
  gp.p = {Rat(2)};
  gp.L0 = 4;
  gp.L = 1;  // 32 cells, beyond the oracle cap
  gp.n_atoms = 2;
  Workspace ws = build_workspace(generate_instance(gp));
  Constants C(ws, ws.fam);
  CHECK_THROWS_AS(C.w_infty_oracle(false), GuardExceeded);
}
