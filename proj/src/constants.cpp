#include "constants.hpp"

#include <cmath>
#include <numbers>

#include "errors.hpp"
#include "util.hpp"

namespace ds::ext {

namespace {
const double kE = std::numbers::e;
const double kPi = std::numbers::pi;
}  // namespace

ConstantBundle constants(int k, double ell) {
  if (k < 2 || k > 10) throw domain_error("constants: requires 2 <= k <= 10");
  if (!(ell >= 1.0 && ell <= 10.0))
    throw domain_error("constants: requires 1 <= ell <= 10");
  ConstantBundle b;
  b.k = k;
  b.ell = ell;
  double kd = static_cast<double>(k);

  // A exact to one rounding: 125^k * 1092 fits u128
  u128 a_num = 1092;
  for (int i = 0; i < k; ++i) a_num *= 125;
  b.A = static_cast<double>(a_num) / (kd * kd * kd);

  b.B = 0.5 * std::exp(4.0 / kE) * std::pow(kd, 20.0 * ell);
  if (!std::isfinite(b.B))
    throw range_error("constants: B_{k,l} overflows double range");
  b.delta_flag = b.A < b.B;

  double c_exp = std::pow(kd, 16.0 * ell) * (kd - 1.0);
  double c_ln = c_exp * std::log(10.0 * ell * (kd - 1.0));
  if (!std::isfinite(c_ln))
    throw range_error("constants: ln C_{k,l} overflows double range");
  b.C = ExtReal::from_ln(c_ln);

  ExtReal ea = ExtReal::from_double(b.A);
  ExtReal two_k5la =
      ExtReal::from_ln(std::log(2.0) + 5.0 * ell * b.A * std::log(kd));
  ExtReal amax = cmp(ea, two_k5la) >= 0 ? ea : two_k5la;
  ExtReal d = add(mul(ea, amax), ExtReal::from_double(5.0));
  if (b.delta_flag) {
    double mid_ln = -(b.A / 4.0) * std::log(2.0 * b.A) + b.B / kE +
                    5.0 * ell * b.B * std::log(kd);
    if (!std::isfinite(mid_ln))
      throw range_error("constants: delta term of D_{k,l} overflows");
    d = add(d, ExtReal::from_ln(mid_ln));
  }
  b.D = d;

  ExtReal first = ExtReal::from_ln(std::log(12.0 * ell) +
                                   6.0 * ell * std::log(kd));
  ExtReal lam = add(first, mul(b.C, 5.0 * ell));
  lam = add(lam, mul(b.D, 9.0 * ell));
  b.Lambda = lam;

  b.ln_x_threshold = x_threshold(ell);
  return b;
}

ExtReal x_threshold(double ell) {
  if (!(ell >= 1.0 && ell <= 10.0))
    throw domain_error("x_threshold: requires 1 <= ell <= 10");
  // ln ln x = 28 ln 7 + 28 ln(192 e l) ln(12 e l)
  double lnln = 28.0 * std::log(7.0) +
                28.0 * std::log(192.0 * kE * ell) * std::log(12.0 * kE * ell);
  return ExtReal::from_ln(lnln);
}

ExtReal main_rhs(const ConstantBundle &b, double x, double y, double S) {
  if (S < 0.0) throw domain_error("main_rhs: S must be >= 0");
  if (!(x > 1.0)) throw domain_error("main_rhs: requires x > 1");
  ExtReal r = mul(b.Lambda, ExtReal::from_double(y));
  r = mul(r, ExtReal::from_double(S));
  return div(r, ExtReal::from_double(std::log(x)));
}

ExtReal corollary_rhs(double ell, double x, double y, int j) {
  ExtReal phi = mul(constants(2, ell).Lambda, 16748.0);
  if (j <= 0) {
    if (!(x > 1.0)) throw domain_error("corollary_rhs: requires x > 1");
    ExtReal r = mul(phi, ExtReal::from_double(y));
    return mul(r, pow(ExtReal::from_double(std::log(x)), -1.0 + 4.0 / kPi));
  }
  if (!(x > std::exp(kE)))
    throw domain_error("corollary_rhs: requires x > e^e when j is given");
  double llx = std::log(std::log(x));
  ExtReal r = mul(phi, ExtReal::from_double(y / std::log(x)));
  ExtReal base = ExtReal::from_double(4.0 * kE * llx / (kPi * j));
  return mul(r, pow(base, static_cast<double>(j)));
}

double landreau_Mk(int k) {
  if (k < 2) throw domain_error("landreau_Mk: requires k >= 2");
  auto binom = [](int n, int r) -> double {
    if (r < 0 || r > n) return 0.0;
    double v = 1.0;
    for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
    return v;
  };
  double best = 0.0;
  for (int h = 0; h <= 2 * k - 2; ++h) {
    double v = binom(k - 1, h + 2) * binom(k - 1, h + 2) +
               binom(2 * k - 1, h + 2) +
               static_cast<double>(k) * k * binom(2 * k - 1, h + 1);
    best = std::max(best, v);
  }
  return best;
}

ExtReal landreau_bound(int k, double x, double y, double *Mk_out) {
  if (!(x > 1.0)) throw domain_error("landreau_bound: requires x > 1");
  double Mk = landreau_Mk(k);
  if (Mk_out) *Mk_out = Mk;
  double k4 = std::pow(static_cast<double>(k), 4.0);
  double zeta2 = kPi * kPi / 6.0;
  double ln_const = std::log(2.0 * k4) + k4 * std::log(kE / 2.0) +
                    std::pow(4.0, k) * std::pow(static_cast<double>(k), 3.0) *
                        Mk * std::log(zeta2);
  ExtReal r = ExtReal::from_ln(ln_const);
  r = mul(r, ExtReal::from_double(y));
  return mul(r, pow(ExtReal::from_double(std::log(x)), k4));
}

}  // namespace ds::ext
