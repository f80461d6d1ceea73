#pragma once

#include "extreal.hpp"

namespace ds::ext {

// Every explicit constant of the short-sum bound, in log space where native
// doubles overflow. lambda = 12 l k^(6l) + 5 l C + 9 l D with
//   C = (10 l (k-1))^(k^(16l)(k-1))
//   D = A max(A, 2 k^(5lA)) + (2A)^(-A/4) e^(B/e) k^(5lB) [A < B] + 5
//   A = 125^k 1092 / k^3,  B = (1/2) e^(4/e) k^(20l)
struct ConstantBundle {
  int k = 2;
  double ell = 1.0;
  double A = 0.0;
  double B = 0.0;
  ExtReal C;
  ExtReal D;
  ExtReal Lambda;
  ExtReal ln_x_threshold;  // value is ln x_min
  bool delta_flag = false;  // A < B, middle D term active
};

// 2 <= k <= 10, 1 <= ell <= 10 (keeps every lnmag inside double range).
ConstantBundle constants(int k, double ell);

// ln x_min = 7^28 (12 e l)^(28 log(192 e l)) as an ExtReal holding ln x.
ExtReal x_threshold(double ell);

// Lambda * y * S / log x; S >= 0 is the externally computed sum of f(n)/n.
ExtReal main_rhs(const ConstantBundle &b, double x, double y, double S);

// phi(l) = 16748 Lambda(2, l); j absent (j <= 0):
// phi(l) y (log x)^(-1+4/pi); j present: phi(l) (y/log x) (4e loglog x/(pi j))^j.
ExtReal corollary_rhs(double ell, double x, double y, int j);

// Divisor-function instance of the competing small-divisors bound:
// 2 k^4 (e/2)^(k^4) zeta(2)^(4^k k^3 M_k) * y (log x)^(k^4), with
// M_k = max_h (C(k-1,h+2)^2 + C(2k-1,h+2) + k^2 C(2k-1,h+1)).
ExtReal landreau_bound(int k, double x, double y, double *Mk_out = nullptr);
double landreau_Mk(int k);

}  // namespace ds::ext
