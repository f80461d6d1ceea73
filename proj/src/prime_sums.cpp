#include "prime_sums.hpp"

#include <cmath>

#include "errors.hpp"
#include "expint.hpp"

namespace ds::primes {

namespace {

// Kahan sum of g(p) over p <= x. Empty ranges sum to 0.
template <typename G>
double prime_fold(const PrimeTable &t, double x, G g) {
  if (x > static_cast<double>(t.limit()))
    throw range_error("prime sum: x beyond sieve limit");
  KahanSum acc;
  for (u64 p : t.primes()) {
    if (static_cast<double>(p) > x) break;
    acc.add(g(p));
  }
  return acc.value();
}

}  // namespace

double mertens_sum(const PrimeTable &t, double x) {
  if (x < 2.0) throw range_error("mertens_sum: requires 2 <= x");
  return prime_fold(t, x, [](u64 p) { return 1.0 / static_cast<double>(p); });
}

double prime_log_power_sum(const PrimeTable &t, double x, double alpha) {
  if (alpha < 3.0)
    throw domain_error("prime_log_power_sum: lemma scope needs alpha >= 3");
  if (!(x > 1.0)) throw range_error("prime_log_power_sum: requires x > 1");
  return prime_fold(t, x, [&](u64 p) {
    return std::pow(std::log(static_cast<double>(p)), -alpha);
  });
}

double prime_power_sum(const PrimeTable &t, double x, double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw domain_error("prime_power_sum: requires alpha in [0,1)");
  if (x < 2.0) throw range_error("prime_power_sum: requires x >= 2");
  if (alpha == 0.0)
    return static_cast<double>(t.pi(x));
  return prime_fold(t, x, [&](u64 p) {
    return std::pow(static_cast<double>(p), -alpha);
  });
}

double tau_abs_prime_sum(const PrimeTable &t, double x, double v) {
  if (!(v >= 0.0 && v <= 1.0))
    throw domain_error("tau_abs_prime_sum: lemma scope needs v in [0,1]");
  if (x < 2.0) throw range_error("tau_abs_prime_sum: requires x >= 2");
  return prime_fold(t, x, [&](u64 p) {
    double lp = std::log(static_cast<double>(p));
    return 2.0 * std::fabs(std::cos(v * lp / 2.0)) / static_cast<double>(p);
  });
}

TailWeight tail_weight_inverse_square() {
  return {"t^-2", [](double t) { return 1.0 / (t * t); },
          [](double x) { return 1.0 / x; }};
}

TailWeight tail_weight_s2() {
  // f(t) = 2(3t^2-3t+1)/(t(t-1)^3) = 2(-1/t + 1/(t-1) + 2/(t-1)^2 + 1/(t-1)^3)
  return {"s2",
          [](double t) {
            return 2.0 * (3.0 * t * t - 3.0 * t + 1.0) /
                   (t * (t - 1.0) * (t - 1.0) * (t - 1.0));
          },
          [](double x) {
            double u = x - 1.0;
            return 2.0 * std::log1p(1.0 / u) + 4.0 / u + 1.0 / (u * u);
          }};
}

TailWeight tail_weight_s1() {
  // f(t) = (3t-2)/(t(t-1)^2 log t). For the integral, expand
  // (3t-2)/(t(t-1)^2) = 3/t^2 + sum_{m>=2} (m+2) t^-(m+1); each term
  // integrates to E1(m log x), and the m >= M remainder is bounded by a
  // geometric majorant. Truncation only ever raises the bound.
  return {"s1",
          [](double t) {
            return (3.0 * t - 2.0) / (t * (t - 1.0) * (t - 1.0) * std::log(t));
          },
          [](double x) {
            const int M = 8;
            double lx = std::log(x);
            double total = 3.0 * sf::e1(lx);
            for (int m = 2; m < M; ++m)
              total += (m + 2.0) * sf::e1(m * lx);
            // sum_{m>=M} (m+2)/m x^-m <= (M+2)/M * x^-M / (1 - 1/x)
            double rem = (M + 2.0) / M * std::pow(x, -M) / (1.0 - 1.0 / x);
            total += rem / lx;
            return total;
          }};
}

TailWeight tail_weight_by_id(const std::string &id) {
  if (id == "t^-2") return tail_weight_inverse_square();
  if (id == "s1") return tail_weight_s1();
  if (id == "s2") return tail_weight_s2();
  throw usage_error("unknown tail weight id: " + id);
}

double ramare_tail(const TailWeight &w, double x) {
  if (x < 2.0) throw domain_error("ramare_tail: requires x >= 2");
  if (!w.integral_from)
    throw domain_error("ramare_tail: weight has no usable antiderivative");
  // sampled sanity of the caller-asserted hypotheses: positive, strictly
  // decreasing, t f(t) -> 0
  double prev = kInf;
  for (double t = x; t <= x * 4096.0; t *= 4.0) {
    double ft = w.f(t);
    if (!(ft > 0.0) || !(ft < prev))
      throw domain_error("ramare_tail: weight not positive decreasing");
    prev = ft;
  }
  if (!(w.f(x * 1e6) * (x * 1e6) < w.f(x) * x))
    throw domain_error("ramare_tail: t*f(t) does not decay");
  double fx = w.f(x);
  double lx = std::log(x);
  return kThetaC1 * w.integral_from(x) + (kThetaC1 - 1.0) * x * fx +
         4.0 * x * fx / (lx * lx);
}

PrimeConstantSums prime_constant_sums(const PrimeTable &t, u64 cutoff) {
  if (cutoff > t.limit())
    throw range_error("prime_constant_sums: cutoff beyond sieve limit");
  PrimeConstantSums r;
  // s1's reference cutoff is 1e4, s2's is 1e6; flag whenever either sum was
  // truncated earlier than its reference
  r.warn_below_reference = cutoff < 1'000'000;
  KahanSum s1, s2;
  for (u64 p : t.primes()) {
    if (p > cutoff) break;
    double pd = static_cast<double>(p);
    double pm1 = pd - 1.0;
    s1.add((3.0 * pd - 2.0) / (pd * pm1 * pm1));
    s2.add(2.0 * (3.0 * pd * pd - 3.0 * pd + 1.0) / (pd * pm1 * pm1 * pm1) *
           std::log(pd));
  }
  r.s1 = s1.value();
  r.s2 = s2.value();
  double c = static_cast<double>(cutoff);
  r.s1_tail = ramare_tail(tail_weight_s1(), c);
  r.s2_tail = ramare_tail(tail_weight_s2(), c);
  r.s1_tail_majorant =
      "power-series majorant 3/t^2 + sum_{m=2..7} (m+2) t^-(m+1) + geometric "
      "remainder; term integrals E1(m log x)";
  return r;
}

}  // namespace ds::primes
