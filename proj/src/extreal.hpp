#pragma once

#include <cmath>
#include <limits>

#include "errors.hpp"

namespace ds::ext {

// Sign + log-magnitude real. Multiplication adds lnmag fields, powers scale
// them, addition goes through log-sum-exp, so values like 10^65536 are exact
// to double rounding. A subtraction whose operands agree to better than
// 1e-12 in log scale sets `flagged` on the result instead of failing
// silently.
struct ExtReal {
  int sign = 0;
  double lnmag = -std::numeric_limits<double>::infinity();
  bool flagged = false;

  static ExtReal zero() { return {}; }
  static ExtReal one() { return {1, 0.0, false}; }
  static ExtReal from_ln(double ln) { return {1, ln, false}; }
  static ExtReal from_double(double x);

  double to_double() const;      // may overflow to +-inf
  double log10() const;          // sign ignored; -inf for zero
  ExtReal negated() const { return {-sign, lnmag, flagged}; }
};

ExtReal add(ExtReal a, ExtReal b);
ExtReal mul(ExtReal a, ExtReal b);
ExtReal mul(ExtReal a, double b);
ExtReal div(ExtReal a, ExtReal b);
ExtReal pow(ExtReal a, double e);
int cmp(ExtReal a, ExtReal b);  // -1 / 0 / +1, consistent with real order

inline ExtReal operator+(ExtReal a, ExtReal b) { return add(a, b); }
inline ExtReal operator*(ExtReal a, ExtReal b) { return mul(a, b); }
inline ExtReal operator*(ExtReal a, double b) { return mul(a, b); }
inline ExtReal operator/(ExtReal a, ExtReal b) { return div(a, b); }

}  // namespace ds::ext
