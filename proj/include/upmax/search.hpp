#pragma once

#include "upmax/theorems.hpp"

namespace upmax {

// Randomized stress search: hill climb on instance data maximizing the
// lhs / rhs ratio of one theorem. Any passing proposal with a strictly
// better ratio is accepted; a failing proposal is recorded and the climb
// continues from the last accepted state. Randomness is consumed only in
// proposals, so running with more iterations extends the same trajectory.
struct SearchParams {
  std::string theorem = "weak_type";
  std::uint64_t seed = 1;
  int iters = 200;
  int grid = 0;
  GenParams gen;
};

struct SearchResult {
  SearchParams params;
  Instance best_instance;
  double best_ratio = 0;
  int accepted = 0;
  int rejected_invalid = 0;
  bool any_fail = false;          // some proposal violated the theorem
  std::string first_fail_json;    // its verification record, if any
  std::vector<double> trajectory; // best ratio after each iteration
};

SearchResult stress_search(const SearchParams& sp);

}  // namespace upmax
