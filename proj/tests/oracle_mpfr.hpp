#pragma once

// 256-bit big-float oracle used only by tests: evaluates the constant
// formulas independently of the log-space production path.

#include <mpfr.h>

namespace oracle {

// natural log of Lambda(k, l) at 256-bit working precision
inline double ln_lambda(int k, double ell) {
  const mpfr_prec_t P = 256;
  mpfr_t A, B, C, D, lam, t1, t2, t3, kf;
  mpfr_inits2(P, A, B, C, D, lam, t1, t2, t3, kf, (mpfr_ptr) nullptr);
  mpfr_set_si(kf, k, MPFR_RNDN);

  // A = 125^k * 1092 / k^3
  mpfr_set_si(A, 125, MPFR_RNDN);
  mpfr_pow_si(A, A, k, MPFR_RNDN);
  mpfr_mul_si(A, A, 1092, MPFR_RNDN);
  mpfr_div_si(A, A, static_cast<long>(k) * k * k, MPFR_RNDN);

  // B = (1/2) e^(4/e) k^(20 l)
  mpfr_set_si(t1, 1, MPFR_RNDN);
  mpfr_exp(t2, t1, MPFR_RNDN);          // e
  mpfr_si_div(t2, 4, t2, MPFR_RNDN);    // 4/e
  mpfr_exp(B, t2, MPFR_RNDN);           // e^(4/e)
  mpfr_set_d(t1, 20.0 * ell, MPFR_RNDN);
  mpfr_pow(t2, kf, t1, MPFR_RNDN);
  mpfr_mul(B, B, t2, MPFR_RNDN);
  mpfr_div_si(B, B, 2, MPFR_RNDN);

  // C = (10 l (k-1))^(k^(16 l)(k-1))
  mpfr_set_d(t1, 16.0 * ell, MPFR_RNDN);
  mpfr_pow(t2, kf, t1, MPFR_RNDN);
  mpfr_mul_si(t2, t2, k - 1, MPFR_RNDN);  // exponent
  mpfr_set_d(t3, 10.0 * ell * (k - 1), MPFR_RNDN);
  mpfr_log(t3, t3, MPFR_RNDN);
  mpfr_mul(t3, t3, t2, MPFR_RNDN);  // ln C
  mpfr_exp(C, t3, MPFR_RNDN);

  // D = A max(A, 2 k^(5lA)) + [A<B] (2A)^(-A/4) e^(B/e) k^(5lB) + 5
  mpfr_set_d(t1, 5.0 * ell, MPFR_RNDN);
  mpfr_mul(t1, t1, A, MPFR_RNDN);
  mpfr_pow(t2, kf, t1, MPFR_RNDN);
  mpfr_mul_si(t2, t2, 2, MPFR_RNDN);  // 2 k^(5lA)
  if (mpfr_cmp(A, t2) > 0) mpfr_set(t2, A, MPFR_RNDN);
  mpfr_mul(D, A, t2, MPFR_RNDN);
  if (mpfr_cmp(A, B) < 0) {
    mpfr_mul_si(t1, A, 2, MPFR_RNDN);
    mpfr_log(t1, t1, MPFR_RNDN);
    mpfr_mul(t1, t1, A, MPFR_RNDN);
    mpfr_div_si(t1, t1, -4, MPFR_RNDN);  // -(A/4) ln(2A)
    mpfr_set_si(t2, 1, MPFR_RNDN);
    mpfr_exp(t2, t2, MPFR_RNDN);
    mpfr_div(t2, B, t2, MPFR_RNDN);  // B/e
    mpfr_add(t1, t1, t2, MPFR_RNDN);
    mpfr_log(t2, kf, MPFR_RNDN);
    mpfr_mul_d(t2, t2, 5.0 * ell, MPFR_RNDN);
    mpfr_mul(t2, t2, B, MPFR_RNDN);  // 5 l B ln k
    mpfr_add(t1, t1, t2, MPFR_RNDN);
    mpfr_exp(t1, t1, MPFR_RNDN);
    mpfr_add(D, D, t1, MPFR_RNDN);
  }
  mpfr_add_si(D, D, 5, MPFR_RNDN);

  // Lambda = 12 l k^(6l) + 5 l C + 9 l D
  mpfr_set_d(t1, 6.0 * ell, MPFR_RNDN);
  mpfr_pow(lam, kf, t1, MPFR_RNDN);
  mpfr_mul_d(lam, lam, 12.0 * ell, MPFR_RNDN);
  mpfr_mul_d(t1, C, 5.0 * ell, MPFR_RNDN);
  mpfr_add(lam, lam, t1, MPFR_RNDN);
  mpfr_mul_d(t1, D, 9.0 * ell, MPFR_RNDN);
  mpfr_add(lam, lam, t1, MPFR_RNDN);

  mpfr_log(lam, lam, MPFR_RNDN);
  double out = mpfr_get_d(lam, MPFR_RNDN);
  mpfr_clears(A, B, C, D, lam, t1, t2, t3, kf, (mpfr_ptr) nullptr);
  return out;
}

// ln ln x_threshold(l) = ln(7^28 (12 e l)^(28 ln(192 e l)))
inline double lnln_x_threshold(double ell) {
  const mpfr_prec_t P = 256;
  mpfr_t t1, t2, t3, acc;
  mpfr_inits2(P, t1, t2, t3, acc, (mpfr_ptr) nullptr);
  mpfr_set_si(t1, 7, MPFR_RNDN);
  mpfr_log(acc, t1, MPFR_RNDN);
  mpfr_mul_si(acc, acc, 28, MPFR_RNDN);  // 28 ln 7
  mpfr_set_si(t1, 1, MPFR_RNDN);
  mpfr_exp(t1, t1, MPFR_RNDN);  // e
  mpfr_mul_d(t2, t1, 192.0 * ell, MPFR_RNDN);
  mpfr_log(t2, t2, MPFR_RNDN);
  mpfr_mul_si(t2, t2, 28, MPFR_RNDN);  // 28 ln(192 e l)
  mpfr_mul_d(t3, t1, 12.0 * ell, MPFR_RNDN);
  mpfr_log(t3, t3, MPFR_RNDN);  // ln(12 e l)
  mpfr_mul(t2, t2, t3, MPFR_RNDN);
  mpfr_add(acc, acc, t2, MPFR_RNDN);
  double out = mpfr_get_d(acc, MPFR_RNDN);
  mpfr_clears(t1, t2, t3, acc, (mpfr_ptr) nullptr);
  return out;
}

// Ei(x) for x > 0 at 256 bits (for the li oracle, li(x) = Ei(log x))
inline double ei(double x) {
  mpfr_t t;
  mpfr_init2(t, 256);
  mpfr_set_d(t, x, MPFR_RNDN);
  mpfr_eint(t, t, MPFR_RNDN);
  double out = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return out;
}

}  // namespace oracle
