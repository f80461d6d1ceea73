#include "extreal.hpp"

#include <cmath>

namespace ds::ext {

namespace {
constexpr double kLn10 = 2.302585092994045684017991454684364208;
}

ExtReal ExtReal::from_double(double x) {
  if (x == 0.0) return zero();
  if (!std::isfinite(x)) throw domain_error("ExtReal: non-finite input");
  return {x > 0 ? 1 : -1, std::log(std::fabs(x)), false};
}

double ExtReal::to_double() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(lnmag);
}

double ExtReal::log10() const {
  if (sign == 0) return -std::numeric_limits<double>::infinity();
  return lnmag / kLn10;
}

ExtReal mul(ExtReal a, ExtReal b) {
  if (a.sign == 0 || b.sign == 0) return ExtReal::zero();
  return {a.sign * b.sign, a.lnmag + b.lnmag, a.flagged || b.flagged};
}

ExtReal mul(ExtReal a, double b) { return mul(a, ExtReal::from_double(b)); }

ExtReal div(ExtReal a, ExtReal b) {
  if (b.sign == 0) throw domain_error("ExtReal: division by zero");
  if (a.sign == 0) return ExtReal::zero();
  return {a.sign * b.sign, a.lnmag - b.lnmag, a.flagged || b.flagged};
}

ExtReal add(ExtReal a, ExtReal b) {
  if (a.sign == 0) return b;
  if (b.sign == 0) return a;
  bool flag = a.flagged || b.flagged;
  double hi = a.lnmag >= b.lnmag ? a.lnmag : b.lnmag;
  double lo = a.lnmag >= b.lnmag ? b.lnmag : a.lnmag;
  int hisign = a.lnmag >= b.lnmag ? a.sign : b.sign;
  if (a.sign == b.sign)
    return {a.sign, hi + std::log1p(std::exp(lo - hi)), flag};
  // opposite signs: cancellation
  if (lo == hi) return {0, -std::numeric_limits<double>::infinity(), true};
  double gap = hi - lo;
  if (gap < 1e-12) flag = true;  // catastrophic cancellation, flag it
  return {hisign, hi + std::log1p(-std::exp(-gap)), flag};
}

ExtReal pow(ExtReal a, double e) {
  if (a.sign == 0) {
    if (e > 0) return ExtReal::zero();
    if (e == 0) return ExtReal::one();
    throw domain_error("ExtReal: 0 to a negative power");
  }
  if (a.sign < 0) {
    if (e != std::nearbyint(e))
      throw domain_error("ExtReal: negative base, non-integer exponent");
    int s = std::fmod(e, 2.0) == 0.0 ? 1 : -1;
    return {s, a.lnmag * e, a.flagged};
  }
  return {1, a.lnmag * e, a.flagged};
}

int cmp(ExtReal a, ExtReal b) {
  if (a.sign != b.sign) return a.sign < b.sign ? -1 : 1;
  if (a.sign == 0) return 0;
  if (a.lnmag == b.lnmag) return 0;
  bool amag = a.lnmag > b.lnmag;
  if (a.sign > 0) return amag ? 1 : -1;
  return amag ? -1 : 1;
}

}  // namespace ds::ext
