#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "upmax/cz.hpp"

using namespace upmax;

namespace {

Instance spike_instance() {
  // f = 16 on [0,1), zero elsewhere on [0,16); w = 1, p = 2
  Instance inst;
  inst.n = 1;
  inst.m = 1;
  inst.L0 = 4;
  inst.L = 0;
  inst.p_raw = {Rat(2)};
  inst.weight_cells = {std::vector<Rat>(16, Rat(1))};
  inst.func_cells = {std::vector<Rat>(16, Rat(0))};
  inst.func_cells[0][0] = 16;
  return inst;
}

std::vector<std::pair<std::vector<Rat>, Rat>> sample_points(
    const Workspace& ws, std::mt19937_64& rng, int count) {
  std::vector<std::pair<std::vector<Rat>, Rat>> out;
  for (auto& at : ws.mu.atoms) out.push_back({at.x_ref, at.t});
  for (int i = 0; i < count; ++i) {
    std::vector<Rat> x_ref;
    for (int d = 0; d < ws.inst.n; ++d)
      x_ref.push_back(Rat((long)(rng() % (4 * ws.fam.nref())) * 2 + 1, 8));
    Rat t = Rat((long)(rng() % (16 << ws.inst.L0)), 8);
    out.push_back({std::move(x_ref), t});
  }
  return out;
}

}  // namespace

TEST_CASE("stopping levels of the spike") {
  Workspace ws = build_workspace(spike_instance());
  // direct per-threshold selection
  auto at1 = select_level_cubes(ws.fam, ws.fsig, 0, Rat(1));
  REQUIRE(at1.size() == 1);
  CHECK(at1[0].level == 3);  // [0, 8)
  CHECK(at1[0].j[0] == 0);
  auto at4 = select_level_cubes(ws.fam, ws.fsig, 0, Rat(4));
  REQUIRE(at4.size() == 1);
  CHECK(at4[0].level == 1);  // [0, 2)
  auto at16 = select_level_cubes(ws.fam, ws.fsig, 0, Rat(16));
  CHECK(at16.empty());

  SparseFamily sf = decompose(ws.fam, ws.fsig, ws.mu, 0);
  CHECK(sf.a == Rat(4));
  CHECK(sf.window == Rat(2));
  // root average 16/64 = 1/4 misses the window (1/16, 1/8], so the top is
  // raised once and the root [0, 128) is selected at k = -2
  CHECK(sf.level_top == 7);
  CHECK(sf.k_min == -2);
  CHECK(sf.k_max == 1);
  REQUIRE(sf.levels.size() == 4);
  std::array<int, 4> want_level{7, 5, 3, 1};
  std::array<Rat, 4> want_avg{Rat(1, 8), Rat(1, 2), Rat(2), Rat(8)};
  std::array<Rat, 4> want_evol{Rat(96), Rat(24), Rat(6), Rat(2)};
  for (int i = 0; i < 4; ++i) {
    REQUIRE(sf.levels[i].cubes.size() == 1);
    const SelectedCube& sc = sf.levels[i].cubes[0];
    CHECK(sc.cube.level == want_level[i]);
    CHECK(sc.cube.j[0] == 0);
    CHECK(sc.avg == want_avg[i]);
    CHECK(sc.e_vol == want_evol[i]);
  }
  CHECK(check_sparse_invariants(sf, ws.fam, ws.fsig, ws.mu).empty());
}

TEST_CASE("vanishing data gives the empty family") {
  Instance inst = spike_instance();
  inst.func_cells[0][0] = 0;
  inst.func_cells[0][3] = 7;  // second factor would vanish with m = 1 zeroed
  Workspace ws = build_workspace(inst);
  FieldVec zeroed = ws.fsig;
  for (auto& c : zeroed[0].cells) c = 0;
  zeroed[0].outside = 0;
  zeroed[0].build_prefix();
  SparseFamily sf = decompose(ws.fam, zeroed, ws.mu, 0);
  CHECK(sf.empty());
  CHECK(check_sparse_invariants(sf, ws.fam, zeroed, ws.mu).empty());
}

TEST_CASE("invariants and identities on random instances") {
  std::mt19937_64 rng(100);
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    GenParams gp;
    gp.seed = seed;
    gp.n = (seed % 2) ? 1 : 2;
    gp.m = 1 + (int)(seed % 2);
    gp.p.assign(gp.m, Rat(2));
    if (gp.m == 2) gp.p = {Rat(3, 2), Rat(3)};
    gp.L0 = (gp.n == 1) ? 3 : 2;
    gp.L = 1;
    gp.n_atoms = 6;
    gp.lift = (seed % 3 == 0);
    Workspace ws = build_workspace(generate_instance(gp));
    for (int g = 0; g < ws.fam.grids(); ++g) {
      SparseFamily sf = decompose(ws.fam, ws.fsig, ws.mu, g);
      auto bad = check_sparse_invariants(sf, ws.fam, ws.fsig, ws.mu);
      for (auto& b : bad) MESSAGE(b);
      CHECK(bad.empty());
      auto pts = sample_points(ws, rng, 20);
      auto bad2 = level_set_identity_check(sf, ws.fam, ws.fsig, pts);
      for (auto& b : bad2) MESSAGE(b);
      CHECK(bad2.empty());
      auto bad3 =
          sparse_domination_check(sf, ws.fam, ws.fsig, ws.ex.p_d, pts);
      for (auto& b : bad3) MESSAGE(b);
      CHECK(bad3.empty());
    }
  }
}

TEST_CASE("selection respects the two-sided window") {
  GenParams gp;
  gp.seed = 77;
  gp.n = 1;
  gp.m = 2;
  gp.p = {Rat(2), Rat(2)};
  gp.L0 = 3;
  gp.L = 1;
  gp.n_atoms = 5;
  Workspace ws = build_workspace(generate_instance(gp));
  SparseFamily sf = decompose(ws.fam, ws.fsig, ws.mu, 1);
  REQUIRE(!sf.empty());
  for (auto& lvl : sf.levels)
    for (auto& sc : lvl.cubes) {
      CHECK(sc.avg > sf.a_pow(lvl.k));
      CHECK(sc.avg <= sf.a_pow(lvl.k) * sf.window);
    }
}

TEST_CASE("a selected cube appears at exactly one scale") {
  GenParams gp;
  gp.seed = 78;
  gp.n = 2;
  gp.m = 1;
  gp.p = {Rat(2)};
  gp.L0 = 2;
  gp.L = 1;
  gp.n_atoms = 4;
  Workspace ws = build_workspace(generate_instance(gp));
  for (int g = 0; g < 4; ++g) {
    SparseFamily sf = decompose(ws.fam, ws.fsig, ws.mu, g);
    std::unordered_map<Cube, int, CubeKey> count;
    for (auto& lvl : sf.levels)
      for (auto& sc : lvl.cubes) ++count[sc.cube];
    for (auto& [q, c] : count) CHECK(c == 1);
  }
}
