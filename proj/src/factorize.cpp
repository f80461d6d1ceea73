#include "factorize.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <span>

#include "errors.hpp"

namespace ds::arith {

namespace {

std::vector<u32> sieve_base() {
  constexpr u32 N = 1'000'000;
  std::vector<bool> comp(N + 1, false);
  std::vector<u32> ps;
  for (u32 i = 2; i <= N; ++i) {
    if (!comp[i]) {
      ps.push_back(i);
      for (u64 j = static_cast<u64>(i) * i; j <= N; j += i) comp[j] = true;
    }
  }
  return ps;
}

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

std::span<const u32> base_primes() {
  static const std::vector<u32> ps = sieve_base();
  return ps;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while (!(d & 1)) {
    d >>= 1;
    ++s;
  }
  // deterministic witness set for all 64-bit n
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n < 1) throw domain_error("factorize: requires n >= 1");
  if (n > 1'000'000'000'000ull)
    throw domain_error("factorize: n beyond 1e12 scope");
  Factorization f;
  f.n = n;
  u64 rem = n;
  for (u32 p : base_primes()) {
    if (static_cast<u64>(p) * p > rem) break;
    if (rem % p == 0) {
      u32 e = 0;
      while (rem % p == 0) {
        rem /= p;
        ++e;
      }
      f.factors.emplace_back(p, e);
    }
  }
  if (rem > 1) {
    if (!is_prime_u64(rem))
      throw factor_error("factorize: cofactor " + std::to_string(rem) +
                         " not fully factored");
    f.factors.emplace_back(rem, 1);
  }
  return f;
}

DivisorSet divisor_set(const Factorization &f, u64 budget) {
  u64 tau = 1;
  for (auto &[p, e] : f.factors) {
    tau *= e + 1;
    if (tau > budget)
      throw resource_error("divisor_set: tau(n) exceeds budget");
  }
  DivisorSet d;
  d.n = f.n;
  d.divisors.reserve(tau);
  d.divisors.push_back(1);
  for (auto &[p, e] : f.factors) {
    size_t sz = d.divisors.size();
    u64 pw = 1;
    for (u32 i = 1; i <= e; ++i) {
      pw *= p;
      for (size_t j = 0; j < sz; ++j) d.divisors.push_back(d.divisors[j] * pw);
    }
  }
  std::sort(d.divisors.begin(), d.divisors.end());
  d.logs.reserve(d.divisors.size());
  for (u64 v : d.divisors) d.logs.push_back(std::log(static_cast<double>(v)));
  return d;
}

std::string TauK::str() const {
  if (fits_u64) return std::to_string(value);
  return big.str();
}

double TauK::log() const {
  if (fits_u64) return std::log(static_cast<double>(value));
  return static_cast<double>(boost::multiprecision::log(
      boost::multiprecision::cpp_bin_float_100(big)));
}

namespace {

// binom(k+e-1, e) in u64; 0 on overflow
u64 binom_rising_u64(u64 k, u32 e) {
  u128 num = 1;
  for (u32 i = 1; i <= e; ++i) {
    if (num > ~u128{0} / (k - 1 + i)) return 0;
    num *= k - 1 + i;
    num /= i;  // exact: prefix products of C(k-1+i, i)
    if (num > ~u64{0}) return 0;
  }
  return static_cast<u64>(num);
}

boost::multiprecision::cpp_int binom_rising_big(u64 k, u32 e) {
  boost::multiprecision::cpp_int num = 1;
  for (u32 i = 1; i <= e; ++i) {
    num *= k - 1 + i;
    num /= i;
  }
  return num;
}

}  // namespace

TauK tau_k(const Factorization &f, int k) {
  if (k < 1) throw domain_error("tau_k: requires k >= 1");
  TauK r;
  if (k == 1) return r;  // tau_1 == 1
  for (auto &[p, e] : f.factors) {
    u64 b = binom_rising_u64(static_cast<u64>(k), e);
    if (r.fits_u64 && b != 0) {
      u128 prod = static_cast<u128>(r.value) * b;
      if (prod <= ~u64{0}) {
        r.value = static_cast<u64>(prod);
        continue;
      }
    }
    if (r.fits_u64) {  // promote
      r.big = r.value;
      r.fits_u64 = false;
    }
    r.big *= binom_rising_big(static_cast<u64>(k), e);
  }
  return r;
}

u64 tau_k_u64(const Factorization &f, int k) {
  TauK t = tau_k(f, k);
  if (!t.fits_u64) throw resource_error("tau_k_u64: value exceeds u64");
  return t.value;
}

double jordan_weighted(const Factorization &f, double a) {
  if (!(a > 0.0 && a <= 2.0 / 3.0))
    throw domain_error("jordan_weighted: lemma scope needs a in (0, 2/3]");
  double r = std::pow(static_cast<double>(f.n), a);
  for (auto &[p, e] : f.factors)
    r *= 1.0 - std::pow(static_cast<double>(p), -a);
  return r;
}

}  // namespace ds::arith
