#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace upmax {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct NonAdmissibleExponent : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct SubResolutionCube : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct MixedResolution : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ZeroWeightCell : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotCovered : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BadInstance : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 2^e as an exact rational, e may be negative.
inline Rat pow2r(long e) {
  if (e >= 0) return Rat(Int(1) << e);
  return Rat(Int(1), Int(1) << (-e));
}

inline double to_d(const Rat& r) { return r.convert_to<double>(); }

// Exact conversion; doubles are binary rationals.
inline Rat rat_of(double x) { return Rat(x); }

inline long ifloor(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  if (r < 0 && q * denominator(r) != numerator(r)) --q;
  return q.convert_to<long>();
}

// r^e for integer e >= 0.
inline Rat rpow(Rat base, unsigned long e) {
  Rat acc(1);
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

inline std::string rat_str(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rat parse_rat(const std::string& s);

}  // namespace upmax
