#include "delta_fn.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "errors.hpp"

namespace ds::arith {

u64 delta_from_divisors(const std::vector<u64> &divs, u64 *witness) {
  u64 best = 0, wit = 1;
  size_t lo = 0;
  for (size_t j = 0; j < divs.size(); ++j) {
    while (!window_gt(divs[lo], divs[j])) ++lo;  // need e*divs[lo] > divs[j]
    u64 cnt = static_cast<u64>(j - lo + 1);
    if (cnt > best) {
      best = cnt;
      wit = divs[j];
    }
  }
  if (witness) *witness = wit;
  return best;
}

DeltaProfile delta(const Factorization &f) {
  DivisorSet d = divisor_set(f);
  DeltaProfile r;
  r.n = f.n;
  r.value = delta_from_divisors(d.divisors, &r.witness_divisor);
  double lw = std::log(static_cast<double>(r.witness_divisor));
  r.window_lo = lw - 1.0;
  r.window_hi = lw;
  return r;
}

DeltaProfile delta(u64 n) { return delta(factorize(n)); }

namespace {

// divisors of every divisor of n, keyed by value (small maps; desk scale)
struct DivisorCache {
  std::map<u64, std::vector<u64>> by_value;
  const std::vector<u64> &get(u64 m) {
    auto it = by_value.find(m);
    if (it != by_value.end()) return it->second;
    DivisorSet ds = divisor_set(factorize(m));
    return by_value.emplace(m, std::move(ds.divisors)).first->second;
  }
};

// #{d | m : top/e < d <= top}
template <typename Fn>
void for_each_in_window(const std::vector<u64> &divs, u64 top, Fn fn) {
  auto hi = std::upper_bound(divs.begin(), divs.end(), top);
  for (auto it = hi; it != divs.begin();) {
    --it;
    if (!window_gt(*it, top)) break;  // below top/e
    fn(*it);
  }
}

u64 count_tuples(DivisorCache &cache, u64 rem,
                 const std::vector<u64> &window_tops, size_t depth) {
  const std::vector<u64> &divs = cache.get(rem);
  u64 total = 0;
  if (depth + 1 == window_tops.size()) {
    for_each_in_window(divs, window_tops[depth], [&](u64) { ++total; });
    return total;
  }
  for_each_in_window(divs, window_tops[depth], [&](u64 e) {
    total += count_tuples(cache, rem / e, window_tops, depth + 1);
  });
  return total;
}

}  // namespace

u64 delta_k(u64 n, int k, u64 budget) {
  if (k < 2 || k > 4) throw domain_error("delta_k: k must be in [2,4]");
  Factorization f = factorize(n);
  DivisorSet d = divisor_set(f);
  u64 tau = d.divisors.size();
  double candidates = std::pow(static_cast<double>(tau), k - 1);
  if (candidates > static_cast<double>(budget))
    throw resource_error("delta_k: tau(n)^(k-1) exceeds budget");

  DivisorCache cache;
  cache.by_value.emplace(n, d.divisors);
  std::vector<u64> tops(static_cast<size_t>(k - 1), 1);
  u64 best = 0;
  // odometer over all (k-1)-tuples of candidate window tops
  std::vector<size_t> idx(static_cast<size_t>(k - 1), 0);
  for (;;) {
    for (size_t i = 0; i < idx.size(); ++i) tops[i] = d.divisors[idx[i]];
    best = std::max(best, count_tuples(cache, n, tops, 0));
    size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == d.divisors.size()) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == idx.size()) break;
  }
  return best;
}

std::complex<double> tau_complex(const Factorization &f, double v) {
  DivisorSet d = divisor_set(f);
  KahanSum re, im;
  for (double l : d.logs) {
    re.add(std::cos(v * l));
    im.add(std::sin(v * l));
  }
  return {re.value(), im.value()};
}

}  // namespace ds::arith
