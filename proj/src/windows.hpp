#pragma once

#include <functional>
#include <string>
#include <vector>

#include "factorize.hpp"

namespace ds::arith {

// Identifier of a summand for windowed sums: tau_k, Delta, or Delta
// restricted to omega(n) <= j. Parsed from "tau<k>", "delta",
// "delta_omega_le<j>".
struct FunctionId {
  enum Kind { TauK, Delta, DeltaOmegaLe } kind = Delta;
  int param = 0;  // k or j
  static FunctionId parse(const std::string &s);
  std::string str() const;
};

// Per-integer factor data produced by the block sieve: ascending prime
// powers. Exponents fit u8 (n <= 1e12 < 2^40).
struct FactoredInt {
  u64 n;
  int count;
  const u64 *p;
  const unsigned char *e;
};

// Factors every n in [lo, hi] by sieving base primes <= sqrt(hi) over
// blocks; fn sees ns in increasing order. hi <= 1e12.
void for_each_factored(u64 lo, u64 hi,
                       const std::function<void(const FactoredInt &)> &fn);

// Exact count of t-smooth integers <= z (P+(1) = 1 counts). Enumeration
// budget caps the count itself.
u64 smooth_count(double z, double t, u64 budget = 100'000'000);

// Exact #{x-y < n <= x : P^-(n) > z} by window sieving, 2 <= z <= sqrt(y).
u64 sifted_count(double x, double y, double z, u64 max_window = 1'000'000'000);

// Exact sum of f over integers in (x-y, x]; window <= 1e7 integers.
double short_sum(const FunctionId &f, double x, double y,
                 u64 max_window = 10'000'000);

// S = sum_{n<=x} t^omega(n) Delta(n), Sh = same with /n. x <= 1e7.
struct WeightedDeltaSums {
  double S = 0, Sh = 0;
};
WeightedDeltaSums weighted_delta_sums(double x, double t, u64 budget = 10'000'000);

// Delta for every n <= limit (index 0 unused), plus omega. Backs the
// proposition-scale checks.
struct DeltaTable {
  std::vector<u32> delta;
  std::vector<unsigned char> omega;
};
DeltaTable delta_table(u64 limit);

// Delta(n) from a factor list, via scratch divisor generation.
u64 delta_of_factored(const FactoredInt &f, std::vector<u64> &scratch);

u64 tau_k_of_factored(const FactoredInt &f, int k);

}  // namespace ds::arith
