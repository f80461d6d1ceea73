#pragma once

#include <span>
#include <string>
#include <vector>

#include "util.hpp"

namespace ds::primes {

// Sieve-backed prime list with block-granular prefix sums of log p (theta)
// and prime counts (pi). Immutable after construction, safe to share.
class PrimeTable {
 public:
  static constexpr u64 kPrefixBlock = 1u << 16;
  static constexpr u64 kDefaultBudget = 1'000'000'000ull;

  // Sieves primes <= limit. cache_path, when non-empty, names an "ESSV1"
  // bitset cache reused if compatible and (re)written otherwise; results are
  // bit-identical either way. threads == 0 picks hardware concurrency.
  static PrimeTable build(u64 limit, const std::string &cache_path = {},
                          int threads = 0, u64 budget = kDefaultBudget);

  u64 limit() const { return limit_; }
  std::span<const u64> primes() const { return primes_; }
  u64 pi(double x) const;
  double theta(double x) const;
  u64 nth_prime(u64 n) const;  // 1-based

 private:
  u64 limit_ = 0;
  std::vector<u64> primes_;
  // prefix data at kPrefixBlock granularity over [0, limit]
  std::vector<u64> block_count_;
  std::vector<double> block_theta_;

  void build_prefix();
};

}  // namespace ds::primes
