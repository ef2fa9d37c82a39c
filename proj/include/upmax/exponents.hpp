#pragma once

#include "upmax/common.hpp"

namespace upmax {

// Exponent tuple P = (p_1,...,p_m), all p_i > 1, with 1/p = sum 1/p_i.
// p_conj[i] = p_i/(p_i-1), p_bar = max p_conj[i].
struct Exponents {
  int m = 0;
  std::vector<Rat> p_i;
  std::vector<Rat> p_conj;
  Rat p;
  Rat p_bar;
  double p_d = 0;
  double p_bar_d = 0;
  std::vector<double> p_i_d;
  std::vector<double> p_conj_d;

  static Exponents derive(std::vector<Rat> raw) {
    if (raw.empty() || raw.size() > 3)
      throw NonAdmissibleExponent("need 1..3 exponents");
    Exponents e;
    e.m = (int)raw.size();
    e.p_i = std::move(raw);
    Rat inv(0);
    for (auto& pi : e.p_i) {
      if (pi <= 1) throw NonAdmissibleExponent("exponent must exceed 1");
      e.p_conj.push_back(pi / (pi - 1));
      inv += 1 / pi;
    }
    e.p = 1 / inv;
    e.p_bar = e.p_conj[0];
    for (auto& c : e.p_conj)
      if (c > e.p_bar) e.p_bar = c;
    e.p_d = to_d(e.p);
    e.p_bar_d = to_d(e.p_bar);
    for (int i = 0; i < e.m; ++i) {
      e.p_i_d.push_back(to_d(e.p_i[i]));
      e.p_conj_d.push_back(to_d(e.p_conj[i]));
    }
    return e;
  }

  // prod p_conj[i]
  double conj_product() const {
    double r = 1;
    for (double c : p_conj_d) r *= c;
    return r;
  }
};

}  // namespace upmax
