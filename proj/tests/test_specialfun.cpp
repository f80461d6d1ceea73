#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "expint.hpp"
#include "integrate.hpp"
#include "lambert.hpp"
#include "oracle_mpfr.hpp"
#include "util.hpp"

using namespace ds;
using namespace ds::sf;

namespace {
const double kE = std::numbers::e;
const double kPi = std::numbers::pi;
}

TEST_CASE("lambert w0 anchor values") {
  CHECK(lambert_w0(0.0) == 0.0);
  CHECK(lambert_w0(kE) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(lambert_w0(-1.0 / kE) == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK_THROWS_AS(lambert_w0(-0.5), ds::domain_error);
}

TEST_CASE("lambert w0 defining identity across the domain") {
  for (double x : {-0.36, -0.2, -1e-3, 1e-8, 0.1, 1.0, 10.0, 1e4, 1e8, 1e300}) {
    double w = lambert_w0(x);
    double resid = w * std::exp(w) - x;
    CHECK(std::fabs(resid) <= 1e-12 * std::fabs(x));
  }
}

TEST_CASE("lambert w0 satisfies the cited lower bounds for t >= e") {
  for (double t : log_spaced(kE, 1e12, 40)) {
    double w = lambert_w0(t);
    double lb = std::log(t) - std::log(std::log(t));
    CHECK(w >= lb - 1e-10 * std::fabs(lb));
    CHECK(lb >= 0.5 * std::log(t) - 1e-12);
  }
}

TEST_CASE("lambert wm1 branch and identity") {
  CHECK(lambert_wm1(-1.0 / kE) == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK_THROWS_AS(lambert_wm1(0.0), ds::domain_error);
  CHECK_THROWS_AS(lambert_wm1(-0.5), ds::domain_error);
  for (double x : {-0.3678, -0.3, -0.2, -0.1, -0.05, -1e-3, -1e-6, -1e-12}) {
    double w = lambert_wm1(x);
    CHECK(w <= -1.0);
    CHECK(std::fabs(w * std::exp(w) - x) <= 1e-12 * std::fabs(x));
  }
}

TEST_CASE("wm1 dominates c log(-x) on the domain") {
  const double c = kE / (kE - 1.0);
  for (double x : {-0.3678, -0.2, -0.05, -1e-3, -1e-8, -1e-30}) {
    CHECK(lambert_wm1(x) >= c * std::log(-x) - 1e-9);
  }
}

TEST_CASE("threshold implication with both W branches behind it") {
  // log x >= a (log(b log x))^2 from the displayed threshold onward
  const double c = kE / (kE - 1.0);
  for (double a : {0.5, 1.0, 4.0, 4.0 * kE, 12.0})
    for (double b : {0.2, 1.0, 3.0, 10.0}) {
      if (a * b < kE * kE / 4.0) continue;
      double ln_thr = c * c * a *
                      (std::log(16.0) * std::log(2.0) +
                       std::log(16.0 * a * b) * std::log(a * b));
      for (double f : log_spaced(1.0, 1e4, 10)) {
        double L = ln_thr * f;
        CHECK(L >= a * std::pow(std::log(b * L), 2.0));
      }
    }
}

TEST_CASE("li matches the 256-bit oracle") {
  CHECK(li(2.0) == doctest::Approx(oracle::ei(std::log(2.0))).epsilon(1e-13));
  CHECK(li(2.0) == doctest::Approx(1.04516378011749278).epsilon(1e-12));
  for (double x : {1.1, 1.5, 3.0, 10.0, 1e3, 1e6, 1e9, 1e12}) {
    double want = oracle::ei(std::log(x));
    CHECK(li(x) == doctest::Approx(want).epsilon(1e-12));
  }
  CHECK(li(10.0) > li(2.0));
  CHECK_THROWS_AS(li(1.0), ds::domain_error);
  CHECK_THROWS_AS(li(0.5), ds::domain_error);
}

TEST_CASE("li root sits at the known zero") {
  double lo = 1.4, hi = 1.5;
  for (int i = 0; i < 100; ++i) {
    double mid = 0.5 * (lo + hi);
    (li(mid) < 0 ? lo : hi) = mid;
  }
  CHECK(0.5 * (lo + hi) == doctest::Approx(1.4513692348833811).epsilon(1e-9));
}

TEST_CASE("e1 series and continued fraction meet at the switch") {
  CHECK(e1(1.0 - 1e-9) == doctest::Approx(e1(1.0 + 1e-9)).epsilon(1e-8));
  CHECK(e1(1.0) == doctest::Approx(0.21938393439552028).epsilon(1e-12));
  // z e^z E1(z) increases toward 1
  double prev = 0.0;
  for (double z : {2.0, 5.0, 10.0, 50.0, 200.0}) {
    double v = e1(z) * std::exp(z) * z;
    CHECK(v > prev);
    CHECK(v < 1.0);
    prev = v;
  }
}

TEST_CASE("quad closed forms") {
  auto abscos = [](double t) { return std::fabs(std::cos(t / 2.0)); };
  auto ks = cos_half_kinks(0.0, 2.0 * kPi);
  auto r = quad(abscos, 0.0, 2.0 * kPi, 1e-12, ks);
  CHECK(r.value == doctest::Approx(4.0).epsilon(1e-11));
  CHECK(r.abs_error_estimate <= 1e-10);
  CHECK(r.evaluations > 0);

  auto zero = [](double) { return 0.0; };
  CHECK(quad(zero, 0.0, 1.0, 1e-12).value == 0.0);

  // int_0^10 e^-t = 1 - e^-10 <= e^-g(0)/lambda1 = 1
  auto expneg = [](double t) { return std::exp(-t); };
  auto q = quad(expneg, 0.0, 10.0, 1e-12);
  CHECK(q.value == doctest::Approx(1.0 - std::exp(-10.0)).epsilon(1e-12));
  CHECK(q.value <= 1.0);
}

TEST_CASE("quad evaluation budget failure carries a partial estimate") {
  auto wiggly = [](double t) { return std::sin(1000.0 * t); };
  CHECK_THROWS_AS(quad(wiggly, 0.0, 100.0, 1e-14, {}, 50), quad_failure);
}

TEST_CASE("frak m closed form vs maximizer") {
  double closed = frak_m();
  CHECK(closed == doctest::Approx(0.4210264).epsilon(2e-6));
  double c = 0.0;
  double maxi = frak_m_maximized(&c);
  CHECK(std::fabs(maxi - closed) <= 1e-9);
  double c1 = std::acos(2.0 / kPi) / kPi;
  double c2 = std::acos(-2.0 / kPi) / kPi;
  CHECK(std::min(std::fabs(c - c1), std::fabs(c - c2)) <= 1e-9);
  CHECK(cos_mean_excursion(0.5) == 0.0);
}

TEST_CASE("periodic mean error bound on random intervals") {
  SplitMix64 rng(7001);
  const double frakm = frak_m();
  for (int i = 0; i < 25; ++i) {
    double a = std::exp(rng.u01() * std::log(1e4));
    double b = a * std::exp(rng.u01() * std::log(1e4 / a));
    auto f = [](double t) { return std::fabs(std::cos(t / 2.0)) / t; };
    auto ks = cos_half_kinks(a, b);
    auto q = quad(f, a, b, 1e-12, ks);
    double diff = std::fabs(q.value - 2.0 / kPi * std::log(b / a));
    CHECK(diff <= 2.0 * frakm / a + 1e-9);
  }
}
