#include "windows.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "delta_fn.hpp"
#include "errors.hpp"

namespace ds::arith {

FunctionId FunctionId::parse(const std::string &s) {
  if (s == "delta") return {Delta, 0};
  if (s.rfind("tau", 0) == 0 && s.size() > 3) {
    int k = 0;
    for (size_t i = 3; i < s.size(); ++i) {
      if (!isdigit(static_cast<unsigned char>(s[i])))
        throw usage_error("unknown function id: " + s);
      k = k * 10 + (s[i] - '0');
    }
    if (k < 1 || k > 9) throw usage_error("tau_k id needs k in 1..9: " + s);
    return {TauK, k};
  }
  const std::string pre = "delta_omega_le";
  if (s.rfind(pre, 0) == 0 && s.size() > pre.size()) {
    int j = 0;
    for (size_t i = pre.size(); i < s.size(); ++i) {
      if (!isdigit(static_cast<unsigned char>(s[i])))
        throw usage_error("unknown function id: " + s);
      j = j * 10 + (s[i] - '0');
    }
    if (j < 1) throw usage_error("delta_omega_le needs j >= 1: " + s);
    return {DeltaOmegaLe, j};
  }
  throw usage_error("unknown function id: " + s);
}

std::string FunctionId::str() const {
  switch (kind) {
    case TauK:
      return "tau" + std::to_string(param);
    case Delta:
      return "delta";
    default:
      return "delta_omega_le" + std::to_string(param);
  }
}

namespace {
constexpr u64 kBlock = 1u << 16;
constexpr int kMaxFac = 15;  // omega(n <= 1e12) <= 11, slack for safety
}  // namespace

void for_each_factored(u64 lo, u64 hi,
                       const std::function<void(const FactoredInt &)> &fn) {
  if (lo < 1) lo = 1;
  if (hi < lo) return;
  if (hi > 1'000'000'000'000ull)
    throw domain_error("for_each_factored: range beyond 1e12 scope");
  auto base = base_primes();
  std::vector<u64> rem(kBlock);
  std::vector<u64> fp(kBlock * kMaxFac);
  std::vector<unsigned char> fe(kBlock * kMaxFac);
  std::vector<int> fc(kBlock);

  for (u64 blo = lo; blo <= hi; blo += kBlock) {
    u64 bhi = std::min(hi, blo + kBlock - 1);
    u64 len = bhi - blo + 1;
    for (u64 i = 0; i < len; ++i) rem[i] = blo + i;
    std::fill(fc.begin(), fc.begin() + len, 0);
    for (u32 p : base) {
      u64 p64 = p;
      if (p64 * p64 > bhi) break;
      u64 first = (blo + p64 - 1) / p64 * p64;
      for (u64 m = first; m <= bhi; m += p64) {
        u64 i = m - blo;
        unsigned char e = 0;
        while (rem[i] % p64 == 0) {
          rem[i] /= p64;
          ++e;
        }
        int c = fc[i]++;
        fp[i * kMaxFac + c] = p64;
        fe[i * kMaxFac + c] = e;
      }
    }
    for (u64 i = 0; i < len; ++i) {
      if (rem[i] > 1) {  // single prime > sqrt(bhi) left
        int c = fc[i]++;
        fp[i * kMaxFac + c] = rem[i];
        fe[i * kMaxFac + c] = 1;
      }
      fn(FactoredInt{blo + i, fc[i], &fp[i * kMaxFac], &fe[i * kMaxFac]});
    }
  }
}

u64 smooth_count(double z, double t, u64 budget) {
  if (!(t >= 2.0 && t <= z)) throw domain_error("smooth_count: needs 2 <= t <= z");
  u64 zi = static_cast<u64>(z);
  u64 ti = static_cast<u64>(t);
  if (ti > 1'000'000)
    throw resource_error("smooth_count: t beyond base prime table");
  std::vector<u64> ps;
  for (u32 p : base_primes()) {
    if (p > ti) break;
    ps.push_back(p);
  }
  u64 count = 0;
  // DFS over products <= z of primes <= t; every node is one smooth integer
  auto dfs = [&](auto &&self, size_t i, u64 cap) -> void {
    ++count;
    if (count > budget)
      throw resource_error("smooth_count: enumeration budget exceeded");
    for (size_t j = i; j < ps.size(); ++j) {
      if (ps[j] > cap) break;
      self(self, j, cap / ps[j]);
    }
  };
  dfs(dfs, 0, zi);
  return count;
}

u64 sifted_count(double x, double y, double z, u64 max_window) {
  if (!(2.0 <= y && y <= x)) throw domain_error("sifted_count: needs 2 <= y <= x");
  if (!(2.0 <= z && z * z <= y))
    throw domain_error("sifted_count: needs 2 <= z <= sqrt(y)");
  u64 lo = static_cast<u64>(std::floor(x - y)) + 1;
  u64 hi = static_cast<u64>(std::floor(x));
  if (hi < lo) return 0;
  if (hi - lo + 1 > max_window)
    throw resource_error("sifted_count: window longer than budget");
  if (z > 1'000'000.0)
    throw resource_error("sifted_count: z beyond base prime table");
  u64 len = hi - lo + 1;
  std::vector<bool> marked(len, false);
  for (u32 p : base_primes()) {
    if (static_cast<double>(p) > z) break;
    u64 first = (lo + p - 1) / p * p;
    for (u64 m = first; m <= hi; m += p) marked[m - lo] = true;
  }
  u64 cnt = 0;
  for (u64 i = 0; i < len; ++i)
    if (!marked[i]) ++cnt;
  return cnt;
}

u64 delta_of_factored(const FactoredInt &f, std::vector<u64> &scratch) {
  scratch.clear();
  scratch.push_back(1);
  for (int i = 0; i < f.count; ++i) {
    size_t sz = scratch.size();
    u64 pw = 1;
    for (int j = 0; j < f.e[i]; ++j) {
      pw *= f.p[i];
      for (size_t s = 0; s < sz; ++s) scratch.push_back(scratch[s] * pw);
    }
  }
  std::sort(scratch.begin(), scratch.end());
  return delta_from_divisors(scratch);
}

u64 tau_k_of_factored(const FactoredInt &f, int k) {
  u64 r = 1;
  for (int i = 0; i < f.count; ++i) {
    u64 b = 1;
    for (u32 t = 1; t <= f.e[i]; ++t) {
      b = b * (static_cast<u64>(k) - 1 + t) / t;
    }
    r *= b;
  }
  return r;
}

double short_sum(const FunctionId &f, double x, double y, u64 max_window) {
  if (!(y >= 0.0 && y <= x)) throw domain_error("short_sum: needs 0 <= y <= x");
  u64 lo = static_cast<u64>(std::floor(x - y)) + 1;
  u64 hi = static_cast<u64>(std::floor(x));
  if (hi < lo) return 0.0;
  if (hi - lo + 1 > max_window)
    throw resource_error("short_sum: window longer than budget");
  u64 acc = 0;
  std::vector<u64> scratch;
  for_each_factored(lo, hi, [&](const FactoredInt &fi) {
    switch (f.kind) {
      case FunctionId::TauK:
        acc += tau_k_of_factored(fi, f.param);
        break;
      case FunctionId::Delta:
        acc += delta_of_factored(fi, scratch);
        break;
      case FunctionId::DeltaOmegaLe:
        if (fi.count <= f.param) acc += delta_of_factored(fi, scratch);
        break;
    }
  });
  return static_cast<double>(acc);
}

WeightedDeltaSums weighted_delta_sums(double x, double t, u64 budget) {
  if (!(t >= 0.0 && t <= 1.0))
    throw domain_error("weighted_delta_sums: needs t in [0,1]");
  if (x < 1.0) return {};
  u64 hi = static_cast<u64>(std::floor(x));
  if (hi > budget)
    throw resource_error("weighted_delta_sums: x exceeds budget");
  double tp[64];
  tp[0] = 1.0;  // 0^0 = 1: n = 1 contributes even at t = 0
  for (int i = 1; i < 64; ++i) tp[i] = tp[i - 1] * t;
  KahanSum S, Sh;
  std::vector<u64> scratch;
  for_each_factored(1, hi, [&](const FactoredInt &fi) {
    double w = tp[fi.count] * static_cast<double>(delta_of_factored(fi, scratch));
    S.add(w);
    Sh.add(w / static_cast<double>(fi.n));
  });
  return {S.value(), Sh.value()};
}

DeltaTable delta_table(u64 limit) {
  DeltaTable dt;
  dt.delta.assign(limit + 1, 0);
  dt.omega.assign(limit + 1, 0);
  std::vector<u64> scratch;
  for_each_factored(1, limit, [&](const FactoredInt &fi) {
    dt.delta[fi.n] = static_cast<u32>(delta_of_factored(fi, scratch));
    dt.omega[fi.n] = static_cast<unsigned char>(fi.count);
  });
  return dt;
}

}  // namespace ds::arith
