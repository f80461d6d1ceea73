#include "lambert.hpp"

#include <cmath>

#include "errors.hpp"

namespace ds::sf {

namespace {

constexpr double kInvE = 0.36787944117144232159552377016146087;  // 1/e

// Series about the branch point x = -1/e in p = sqrt(2(1+ex));
// W0 takes +p, Wm1 takes -p.
double branch_series(double p) {
  return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p -
         43.0 / 540.0 * p * p * p * p;
}

double halley(double x, double w) {
  for (int it = 0; it < 60; ++it) {
    double ew = std::exp(w);
    double f = w * ew - x;
    double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
    double step = f / denom;
    double w1 = w - step;
    if (!std::isfinite(w1)) break;
    w = w1;
    if (std::fabs(f) <= 1e-14 * (std::fabs(x) + 1e-300) ||
        std::fabs(step) <= 1e-15 * (std::fabs(w) + 1e-300))
      break;
  }
  return w;
}

}  // namespace

double lambert_w0(double x) {
  if (x < -kInvE) throw domain_error("lambert_w0: x < -1/e");
  if (x == 0.0) return 0.0;
  double w;
  if (x < -kInvE + 1e-4) {
    double p = std::sqrt(2.0 * (1.0 + std::exp(1.0) * x));
    w = branch_series(p);
    if (p < 1e-5) return w;  // series already past double accuracy
  } else if (x < 1.0) {
    // w = x(1 - x + 3/2 x^2 - ...) near 0, crude but inside the basin
    w = x * (1.0 - x + 1.5 * x * x);
  } else {
    double lx = std::log(x);
    w = x > std::exp(1.0) ? lx - std::log(lx) : 0.5 * lx;
  }
  return halley(x, w);
}

double lambert_wm1(double x) {
  if (x < -kInvE || x >= 0.0)
    throw domain_error("lambert_wm1: x outside [-1/e, 0)");
  double w;
  if (x < -kInvE + 1e-4) {
    double p = std::sqrt(2.0 * (1.0 + std::exp(1.0) * x));
    w = branch_series(-p);
    if (p < 1e-5) return w;
  } else if (x <= -0.25) {
    // the cited lower bound c log(-x), c = e/(e-1), seeds this region
    w = std::exp(1.0) / (std::exp(1.0) - 1.0) * std::log(-x);
  } else {
    double l = std::log(-x);
    w = l - std::log(-l);
  }
  return halley(x, w);
}

}  // namespace ds::sf
