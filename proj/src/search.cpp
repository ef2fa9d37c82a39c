#include "upmax/search.hpp"

#include <cmath>
#include <random>

namespace upmax {

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

// One local move on the instance data; clamps keep validate() happy.
void mutate(Instance& inst, std::mt19937_64& rng) {
  std::int64_t cells = inst.dyadic_cells();
  std::vector<int> moves{0, 1, 2};
  if (!inst.atoms.empty()) {
    moves.push_back(3);
    moves.push_back(4);
  }
  if (!inst.lift_cells.empty()) moves.push_back(5);
  switch (moves[draw(rng, moves.size())]) {
    case 0: {  // scale one weight cell
      auto& wv = inst.weight_cells[draw(rng, inst.m)];
      Rat& c = wv[draw(rng, cells)];
      c = draw(rng, 2) ? Rat(c * 2) : Rat(c / 2);
      if (c > 64) c = 64;
      if (c < Rat(1, 64)) c = Rat(1, 64);
      break;
    }
    case 1: {  // scale one function cell
      auto& fv = inst.func_cells[draw(rng, inst.m)];
      Rat& c = fv[draw(rng, cells)];
      if (c == 0)
        c = pow2r((long)draw(rng, 7) - 3);
      else
        c = draw(rng, 2) ? Rat(c * 2) : Rat(c / 2);
      break;
    }
    case 2: {  // zero one function cell unless it is the last support cell
      auto& fv = inst.func_cells[draw(rng, inst.m)];
      std::int64_t idx = draw(rng, cells);
      Rat saved = fv[idx];
      fv[idx] = 0;
      bool any = false;
      for (auto& c : fv) any = any || c != 0;
      if (!any) fv[idx] = saved;
      break;
    }
    case 3: {  // scale one atom mass
      Atom& at = inst.atoms[draw(rng, inst.atoms.size())];
      at.mass = draw(rng, 2) ? Rat(at.mass * 2) : Rat(at.mass / 2);
      break;
    }
    case 4: {  // move one atom: new height or new lattice base point
      Atom& at = inst.atoms[draw(rng, inst.atoms.size())];
      if (draw(rng, 2)) {
        std::uint64_t kind = draw(rng, 3);
        if (kind == 0)
          at.t = 0;
        else if (kind == 1)
          at.t = pow2r((long)draw(rng, inst.L0 + inst.L + 1) - inst.L);
        else
          at.t = Rat((long)draw(rng, 8 * (std::int64_t(1) << inst.L0))) / 8;
      } else {
        std::int64_t grid4 = inst.dyadic_per_dim() * 4;
        for (auto& c : at.x)
          c = Rat((long)draw(rng, grid4)) * pow2r(inst.L0) / grid4;
      }
      break;
    }
    default: {  // scale one boundary lift cell
      Rat& c = inst.lift_cells[draw(rng, cells)];
      c = draw(rng, 2) ? Rat(c * 2) : Rat(c / 2);
      if (c < Rat(1, 1024)) c = Rat(1, 1024);
      break;
    }
  }
}

double ratio_of(const VerificationResult& r) {
  if (r.vacuous || r.rhs <= 0 || !std::isfinite(r.rhs)) return 0;
  return r.lhs / r.rhs;
}

}  // namespace

SearchResult stress_search(const SearchParams& sp) {
  SearchResult out;
  out.params = sp;
  GenParams gp = sp.gen;
  gp.seed = sp.seed;
  Instance cur = generate_instance(gp);
  {
    Workspace ws = build_workspace(cur);
    VerificationResult r = verify_theorem(ws, sp.theorem, sp.grid);
    out.best_ratio = ratio_of(r);
    if (!r.pass) {
      out.any_fail = true;
      out.first_fail_json = r.to_json_line();
    }
  }
  out.best_instance = std::move(cur);
  std::mt19937_64 rng(sp.seed ^ 0x9e3779b97f4a7c15ULL);
  for (int it = 0; it < sp.iters; ++it) {
    Instance cand = out.best_instance;
    mutate(cand, rng);
    try {
      Workspace ws = build_workspace(cand);
      VerificationResult r = verify_theorem(ws, sp.theorem, sp.grid);
      if (!r.pass) {
        out.any_fail = true;
        if (out.first_fail_json.empty()) out.first_fail_json = r.to_json_line();
      }
      double rt = ratio_of(r);
      if (r.pass && rt > out.best_ratio) {
        out.best_ratio = rt;
        out.best_instance = std::move(cand);
        ++out.accepted;
      }
    } catch (const std::exception&) {
      ++out.rejected_invalid;
    }
    out.trajectory.push_back(out.best_ratio);
  }
  return out;
}

}  // namespace upmax
