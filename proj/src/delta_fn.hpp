#pragma once

#include <complex>

#include "factorize.hpp"

namespace ds::arith {

struct DeltaProfile {
  u64 n = 1;
  u64 value = 1;
  u64 witness_divisor = 1;  // smallest divisor attaining the max
  double window_lo = 0.0;   // (log d - 1, log d]
  double window_hi = 0.0;
};

// Delta(n) = max_u #{d | n : e^u < d <= e^(u+1)}. The count jumps up when u
// reaches log d - 1 (window top d enters, closed) and drops at log d (open),
// so the max is attained at some u = log d - 1; a sorted two-pointer pass
// over the divisors evaluates all of those in O(tau log tau).
DeltaProfile delta(const Factorization &f);
DeltaProfile delta(u64 n);

// Scan over the divisor list of a windowed count at top divisor `top`:
// #{d' | n : top/e < d' <= top}. Shared with the window machinery.
u64 delta_from_divisors(const std::vector<u64> &sorted_divisors,
                        u64 *witness = nullptr);

// Hooley Delta_k via per-coordinate breakpoint candidates u_i = log d - 1.
// k in [2,4]; tau(n)^(k-1) <= budget else resource_error. Delta_2 runs the
// same tuple machinery (not the two-pointer path), so the two can be
// cross-checked.
u64 delta_k(u64 n, int k, u64 budget = 100'000'000);

// tau(n;v) = sum_{d|n} d^{iv}; |tau(n;v)| <= tau(n).
std::complex<double> tau_complex(const Factorization &f, double v);

}  // namespace ds::arith
