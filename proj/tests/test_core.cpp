#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "upmax/instance.hpp"

using namespace upmax;

TEST_CASE("exponent derivation") {
  Exponents e = Exponents::derive({Rat(2)});
  CHECK(e.p == Rat(2));
  CHECK(e.p_conj[0] == Rat(2));
  CHECK(e.p_bar == Rat(2));

  Exponents e2 = Exponents::derive({Rat(4), Rat(4, 3)});
  CHECK(e2.p == Rat(1));
  CHECK(e2.p_conj[0] == Rat(4, 3));
  CHECK(e2.p_conj[1] == Rat(4));
  CHECK(e2.p_bar == Rat(4));
  CHECK(e2.conj_product() == doctest::Approx(16.0 / 3).epsilon(1e-12));

  Exponents e3 = Exponents::derive({Rat(3), Rat(3), Rat(3)});
  CHECK(e3.p == Rat(1));
  CHECK(e3.p_bar == Rat(3, 2));
}

TEST_CASE("exponent rejection") {
  CHECK_THROWS_AS(Exponents::derive({}), NonAdmissibleExponent);
  CHECK_THROWS_AS(Exponents::derive({Rat(1)}), NonAdmissibleExponent);
  CHECK_THROWS_AS(Exponents::derive({Rat(1, 2)}), NonAdmissibleExponent);
  CHECK_THROWS_AS(Exponents::derive({Rat(2), Rat(2), Rat(2), Rat(2)}),
                  NonAdmissibleExponent);
}

TEST_CASE("children tile the parent") {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 200; ++trial) {
      Cube q;
      q.n = n;
      q.grid = (int)(rng() % (1u << n));
      q.level = (int)(rng() % 6) - 2;  // children stay at level >= -L
      for (int d = 0; d < n; ++d) q.j[d] = (std::int64_t)(rng() % 9) - 4;
      int L = 3;
      std::int64_t s = side_ref(q.level, L);
      std::int64_t cs = side_ref(q.level - 1, L);
      std::vector<std::int64_t> seen;
      for (int c = 0; c < (1 << n); ++c) {
        Cube ch = cube_child(q, c);
        CHECK(cube_parent(ch) == q);
        CHECK(cube_contains_cube(q, ch, L));
        for (int d = 0; d < n; ++d) {
          std::int64_t off = cube_lo_ref(ch, d, L) - cube_lo_ref(q, d, L);
          CHECK(off >= 0);
          CHECK(off + cs <= s);
          CHECK(off % cs == 0);
        }
        std::int64_t key = 0;
        for (int d = 0; d < n; ++d)
          key = 2 * key + (cube_lo_ref(ch, d, L) - cube_lo_ref(q, d, L)) / cs;
        seen.push_back(key);
      }
      std::sort(seen.begin(), seen.end());
      for (int c = 0; c < (1 << n); ++c) CHECK(seen[c] == c);
    }
}

TEST_CASE("each level partitions the domain") {
  GridFamily fam;
  fam.n = 2;
  fam.L0 = 2;
  fam.L = 1;
  for (auto& t : fam.level_max) t = 4;
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Rat> x_ref;
    for (int d = 0; d < fam.n; ++d)
      x_ref.push_back(Rat((long)(rng() % (4 * fam.nref())), 4));
    for (int g = 0; g < fam.grids(); ++g)
      for (int k = fam.level_min(); k <= fam.level_max[g]; ++k) {
        int hits = 0;
        for (auto& q : enumerate_level(fam, g, k))
          if (cube_contains_point(q, x_ref, fam.L)) ++hits;
        CHECK(hits == 1);
      }
  }
}

TEST_CASE("level enumeration counts in 1d") {
  GridFamily fam;
  fam.n = 1;
  fam.L0 = 2;
  fam.L = 1;
  for (auto& t : fam.level_max) t = 4;
  CHECK(enumerate_level(fam, 0, -1).size() == 8);
  CHECK(enumerate_level(fam, 1, -1).size() == 9);
  CHECK(enumerate_level(fam, 0, 2).size() == 1);
  for (int g = 0; g < 2; ++g)
    for (int k = -1; k <= 4; ++k) {
      Rat covered(0);
      for (auto& q : enumerate_level(fam, g, k)) covered += cube_side(q);
      CHECK(covered >= pow2r(fam.L0));
    }
}

TEST_CASE("covering cube within factor 6") {
  GridFamily fam;
  fam.n = 1;
  fam.L0 = 2;
  fam.L = 2;
  for (auto& t : fam.level_max) t = 5;
  // exhaustive over lattice-aligned boxes inside the domain
  for (long den = 1; den <= 16; den *= 2)
    for (long num = 1; num <= den * 4; ++num) {
      Rat side(num, den);
      for (long a = 0; Rat(a, den) + side <= 4; ++a) {
        std::vector<Rat> lo{Rat(a, den)};
        Cube q = covering_cube(fam, lo, side);
        CHECK(cube_side(q) <= 6 * side);
        Rat qlo = cube_side(q) * (Rat(q.j[0]) +
                                  Rat(level_sign(q.level) * shift3(q.grid, 0), 3));
        CHECK(qlo <= lo[0]);
        CHECK(lo[0] + side <= qlo + cube_side(q));
      }
    }
}

TEST_CASE("covering cube within factor 6 in 2d") {
  GridFamily fam;
  fam.n = 2;
  fam.L0 = 2;
  fam.L = 1;
  for (auto& t : fam.level_max) t = 5;
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    Rat side(1 + (long)(rng() % 24), 8);
    std::vector<Rat> lo;
    bool fits = true;
    for (int d = 0; d < 2; ++d) {
      lo.push_back(Rat((long)(rng() % 64), 16));
      if (lo[d] + side > 4) fits = false;
    }
    if (!fits) continue;
    Cube q = covering_cube(fam, lo, side);
    CHECK(cube_side(q) <= 6 * side);
    for (int d = 0; d < 2; ++d) {
      Rat qlo = cube_side(q) * (Rat(q.j[d]) +
                                Rat(level_sign(q.level) * shift3(q.grid, d), 3));
      CHECK(qlo <= lo[d]);
      CHECK(lo[d] + side <= qlo + cube_side(q));
    }
  }
}

TEST_CASE("field prefix sums and outside extension") {
  // 2 dyadic cells, refined to 6: values 2 and 5, outside 1
  std::vector<Rat> dy{Rat(2), Rat(5)};
  Field<Rat> f = expand_to_refined(1, 0, 1, dy, Rat(1));
  CHECK(f.N == 6);
  CHECK(f.cellvol == Rat(1, 6));
  std::array<std::int64_t, 3> lo{0, 0, 0}, hi{6, 1, 1};
  CHECK(f.clipped_sum(lo, hi) == Rat(21));  // 3*2 + 3*5
  // box [-3, 9): 6 cells inside (sum 21) + 6 outside (value 1)
  lo[0] = -3;
  hi[0] = 9;
  CHECK(f.box_integral(lo, hi) == Rat(27, 6));
  Cube q;  // [0,1) at level 0, grid 0
  q.n = 1;
  q.level = 0;
  CHECK(f.cube_integral(q) == Rat(7, 2));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rat("3/4") == Rat(3, 4));
  CHECK(parse_rat("-5") == Rat(-5));
  CHECK(parse_rat("0.25") == Rat(1, 4));
  CHECK_THROWS_AS(parse_rat("1/0"), BadInstance);
}
