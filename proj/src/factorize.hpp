#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

#include "util.hpp"

namespace ds::arith {

struct Factorization {
  u64 n = 1;
  std::vector<std::pair<u64, u32>> factors;  // ascending primes, exps >= 1

  u32 omega() const { return static_cast<u32>(factors.size()); }
  u32 big_omega() const {
    u32 s = 0;
    for (auto &[p, e] : factors) s += e;
    return s;
  }
  u64 p_plus() const { return factors.empty() ? 1 : factors.back().first; }
  // P^-(1) = infinity by convention; 0 encodes it here
  u64 p_minus() const { return factors.empty() ? 0 : factors.front().first; }
};

// Trial division by sieved primes up to 1e6 plus one large-cofactor
// primality check; n <= 1e12. A composite cofactor raises factor_error.
Factorization factorize(u64 n);

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(u64 n);

// Shared base primes <= 1e6 (lazily sieved once).
std::span<const u32> base_primes();

struct DivisorSet {
  u64 n = 1;
  std::vector<u64> divisors;  // ascending
  std::vector<double> logs;   // matching natural logs
};

// tau(n) <= budget, else resource_error.
DivisorSet divisor_set(const Factorization &f, u64 budget = 10'000'000);

// tau_k(n) = prod binom(k+e-1, e); overflows promote to big integers.
struct TauK {
  bool fits_u64 = true;
  u64 value = 1;
  boost::multiprecision::cpp_int big;  // valid when !fits_u64
  std::string str() const;
  double log() const;  // natural log of the value
};
TauK tau_k(const Factorization &f, int k);
// Hot-path variant; throws resource_error if the value exceeds u64.
u64 tau_k_u64(const Factorization &f, int k);

// Jordan-type multiplicative weight J_a(n) = n^a prod_{p|n} (1 - p^-a),
// a in (0, 2/3] (lemma scope); satisfies sum_{d|n} J_a(d) = n^a.
double jordan_weighted(const Factorization &f, double a);

}  // namespace ds::arith
