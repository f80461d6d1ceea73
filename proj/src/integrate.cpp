#include "integrate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "errors.hpp"
#include "util.hpp"

namespace ds::sf {

namespace {

struct SimpsonCtx {
  const std::function<double(double)> &f;
  long long evals = 0;
  long long max_evals;
  double eval(double x) {
    ++evals;
    return f(x);
  }
};

// returns (integral, error estimate) over [a,b]
static void adapt(SimpsonCtx &ctx, double a, double b, double fa, double fm,
                  double fb, double whole, double tol, int depth, double &acc,
                  double &err_acc) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  if (ctx.evals + 2 > ctx.max_evals)
    throw quad_failure{{acc, kInf, ctx.evals}};
  double flm = ctx.eval(lm), frm = ctx.eval(rm);
  double h = b - a;
  double left = h / 12.0 * (fa + 4.0 * flm + fm);
  double right = h / 12.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  if (depth >= 60 || std::fabs(delta) <= 15.0 * tol) {
    acc += left + right + delta / 15.0;
    err_acc += std::fabs(delta) / 15.0;
    return;
  }
  adapt(ctx, a, m, fa, flm, fm, left, tol / 2.0, depth + 1, acc, err_acc);
  adapt(ctx, m, b, fm, frm, fb, right, tol / 2.0, depth + 1, acc, err_acc);
}

}  // namespace

QuadratureResult quad(const std::function<double(double)> &f, double a,
                      double b, double tol, std::span<const double> kinks,
                      long long max_evals) {
  if (!(a <= b)) throw domain_error("quad: requires a <= b");
  if (a == b) return {0.0, 0.0, 0};
  std::vector<double> pts{a};
  for (double k : kinks)
    if (k > a && k < b) pts.push_back(k);
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());

  SimpsonCtx ctx{f, 0, max_evals};
  double total = 0.0, err = 0.0;
  double span = b - a;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    double lo = pts[i], hi = pts[i + 1];
    if (hi <= lo) continue;
    double flo = ctx.eval(lo), fhi = ctx.eval(hi);
    double fmid = ctx.eval(0.5 * (lo + hi));
    double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    double piece_tol = tol * (hi - lo) / span;
    adapt(ctx, lo, hi, flo, fmid, fhi, whole, piece_tol, 0, total, err);
  }
  return {total, err, ctx.evals};
}

std::vector<double> cos_half_kinks(double a, double b) {
  std::vector<double> ks;
  const double pi = std::numbers::pi;
  double k = std::ceil((a / pi - 1.0) / 2.0);
  for (double t = (2.0 * k + 1.0) * pi; t < b; t += 2.0 * pi)
    if (t > a) ks.push_back(t);
  return ks;
}

double frak_m() {
  const double pi = std::numbers::pi;
  return 2.0 / pi * (std::sqrt(pi * pi - 4.0) - 2.0 * std::acos(2.0 / pi));
}

double cos_mean_excursion(double c) {
  const double pi = std::numbers::pi;
  if (c == 0.5) return 0.0;
  double s = std::cos(c * pi) >= 0.0 ? 1.0 : -1.0;
  if (c < 0.5) return 2.0 * s * std::sin(c * pi) - 4.0 * c;
  return 2.0 * s * std::sin(c * pi) + 4.0 * (1.0 - c);
}

double frak_m_maximized(double *argmax_c) {
  const double pi = std::numbers::pi;
  auto g = [&](double c) {
    auto integrand = [&](double t) {
      return std::fabs(std::cos(t / 2.0)) - 2.0 / pi;
    };
    auto ks = cos_half_kinks(0.0, 2.0 * c * pi);
    return std::fabs(
        quad(integrand, 0.0, 2.0 * c * pi, 1e-13, ks).value);
  };
  // coarse scan, then golden-section refinement around the best cell
  const int n = 65;
  int best = 0;
  double bestv = -1.0;
  for (int i = 0; i <= n; ++i) {
    double v = g(static_cast<double>(i) / n);
    if (v > bestv) {
      bestv = v;
      best = i;
    }
  }
  double lo = std::max(0.0, (best - 1.0) / n);
  double hi = std::min(1.0, (best + 1.0) / n);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = g(x1), f2 = g(x2);
  while (hi - lo > 1e-12) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = g(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = g(x1);
    }
  }
  double c = 0.5 * (lo + hi);
  if (argmax_c) *argmax_c = c;
  return g(c);
}

}  // namespace ds::sf
