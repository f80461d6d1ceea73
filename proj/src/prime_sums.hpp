#pragma once

#include <functional>
#include <string>

#include "prime_table.hpp"

namespace ds::primes {

// sum_{p <= x} 1/p (compensated).
double mertens_sum(const PrimeTable &t, double x);

// sum_{p <= x} (log p)^-alpha, alpha >= 3 (lemma scope).
double prime_log_power_sum(const PrimeTable &t, double x, double alpha);

// sum_{p <= x} p^-alpha, 0 <= alpha < 1.
double prime_power_sum(const PrimeTable &t, double x, double alpha);

// sum_{p <= x} |tau(p;v)|/p = sum 2|cos(v log p / 2)|/p, v in [0,1].
double tau_abs_prime_sum(const PrimeTable &t, double x, double v);

// Decreasing positive weight with a closed-form (or upper-bounded)
// antiderivative; drives the explicit tail bound for sum_{p>x} f(p) log p.
struct TailWeight {
  std::string name;
  std::function<double(double)> f;
  // upper bound for int_x^inf f(t) dt; empty handle = unsupported weight
  std::function<double(double)> integral_from;
};

TailWeight tail_weight_inverse_square();  // f(t) = t^-2
TailWeight tail_weight_s1();  // f(t) = (3t-2)/(t(t-1)^2 log t)
TailWeight tail_weight_s2();  // f(t) = 2(3t^2-3t+1)/(t(t-1)^3)
TailWeight tail_weight_by_id(const std::string &id);  // "t^-2" | "s1" | "s2"

// c1 int_x^inf f + (c1-1) x f(x) + 4 x f(x)/(log x)^2, c1 = 1 + 1.94e-8;
// upper bound for sum_{p > x} f(p) log p. Weight positivity/monotonicity is
// checked by sampling.
double ramare_tail(const TailWeight &w, double x);

struct PrimeConstantSums {
  double s1 = 0, s2 = 0, s1_tail = 0, s2_tail = 0;
  bool warn_below_reference = false;  // cutoff under 1e4 (s1) or 1e6 (s2)
  std::string s1_tail_majorant;       // how the s1 tail integral was bounded
};

// s1 = sum_{p<=cutoff} (3p-2)/(p(p-1)^2),
// s2 = sum_{p<=cutoff} 2(3p^2-3p+1)/(p(p-1)^3) log p, with tails past cutoff.
PrimeConstantSums prime_constant_sums(const PrimeTable &t, u64 cutoff);

inline constexpr double kC0 = 1.25506;           // pi(x) < c0 x / log x
inline constexpr double kThetaC1 = 1.0 + 1.94e-8;  // theta(x) < c1 x

}  // namespace ds::primes
