#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

namespace ds {

using u64 = std::uint64_t;
using u32 = std::uint32_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Compensated accumulator. Every multi-term real sum in the library goes
// through one of these; 1e8-term sums must keep >= 12 significant digits.
struct KahanSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  double value() const { return s; }
};

// Deterministic 64-bit generator (splitmix64). Used instead of <random>
// distributions so grids and witnesses are bit-stable across platforms.
struct SplitMix64 {
  u64 state;
  explicit SplitMix64(u64 seed) : state(seed) {}
  u64 next() {
    u64 z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform in [0,1)
  double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // uniform integer in [1, n]
  u64 uniform(u64 n) { return next() % n + 1; }
};

inline std::vector<double> log_spaced(double lo, double hi, int n) {
  std::vector<double> v;
  v.reserve(static_cast<size_t>(n));
  if (n <= 1) {
    v.push_back(lo);
    return v;
  }
  double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i)
    v.push_back(std::exp(llo + (lhi - llo) * i / (n - 1)));
  return v;
}

inline std::vector<double> lin_spaced(double lo, double hi, int n) {
  std::vector<double> v;
  v.reserve(static_cast<size_t>(n));
  if (n <= 1) {
    v.push_back(lo);
    return v;
  }
  for (int i = 0; i < n; ++i) v.push_back(lo + (hi - lo) * i / (n - 1));
  return v;
}

constexpr double kInf = std::numeric_limits<double>::infinity();

// e split into a two-double expansion; e_hi + e_lo carries ~107 bits.
constexpr double kE_hi = 2.718281828459045235360287471352662498;  // rounds to nearest double
constexpr double kE_lo = 1.4456468917292502e-16;                  // e - kE_hi

// Exact-enough test of "d_low > d_top / e", i.e. e*d_low > d_top, for 64-bit
// divisors. Doubles decide unless the margin is below 1e-12 relative, in
// which case the product e*d_low is formed as a double-double via fma. The
// minimal possible gap for integers up to 1e12 is ~1e-26 relative (rational
// approximations of e), far above the ~1e-32 double-double error.
inline bool window_gt(u64 d_low, u64 d_top) {
  double dl = static_cast<double>(d_low), dt = static_cast<double>(d_top);
  double prod = kE_hi * dl;
  double diff = prod - dt;
  if (std::fabs(diff) > 1e-12 * dt) return diff > 0.0;
  double err = std::fma(kE_hi, dl, -prod);  // exact low word of e_hi*dl
  double lo = err + kE_lo * dl;
  return diff + lo > 0.0;
}

}  // namespace ds
