#include "prime_table.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <thread>

#include "errors.hpp"

namespace ds::primes {

namespace {

// Odd-only composite bitset for [3, limit]: bit i <-> n = 2i + 3.
struct OddBits {
  u64 limit = 0;
  std::vector<u64> words;

  static u64 bit_count(u64 limit) { return limit < 3 ? 0 : (limit - 1) / 2; }

  explicit OddBits(u64 limit)
      : limit(limit), words((bit_count(limit) + 63) / 64, 0) {}

  void mark(u64 bit) { words[bit >> 6] |= 1ull << (bit & 63); }
  bool composite(u64 bit) const {
    return words[bit >> 6] >> (bit & 63) & 1ull;
  }
};

std::vector<u64> simple_sieve(u64 n) {
  std::vector<bool> comp(n + 1, false);
  std::vector<u64> ps;
  for (u64 i = 2; i <= n; ++i) {
    if (!comp[i]) {
      ps.push_back(i);
      for (u64 j = i * i; j <= n; j += i) comp[j] = true;
    }
  }
  return ps;
}

void sieve_range(OddBits &bits, std::span<const u64> base, u64 bit_lo,
                 u64 bit_hi) {
  // marks composites among odd n in bit range [bit_lo, bit_hi)
  u64 n_lo = 2 * bit_lo + 3;
  u64 n_hi = 2 * (bit_hi - 1) + 3;
  for (u64 p : base) {
    if (p == 2) continue;
    if (p * p > n_hi) break;
    u64 start = std::max(p * p, (n_lo + p - 1) / p * p);
    if (!(start & 1)) start += p;  // odd multiples only
    for (u64 m = start; m <= n_hi; m += 2 * p) bits.mark((m - 3) / 2);
  }
}

constexpr char kCacheMagic[5] = {'E', 'S', 'S', 'V', '1'};

bool load_cache(const std::string &path, u64 limit, OddBits &bits) {
  std::FILE *f = std::fopen(path.c_str(), "rb");
  if (!f) return false;
  char magic[5];
  u64 lim = 0, block = 0;
  bool ok = std::fread(magic, 1, 5, f) == 5 &&
            std::memcmp(magic, kCacheMagic, 5) == 0 &&
            std::fread(&lim, 8, 1, f) == 1 && lim == limit &&
            std::fread(&block, 8, 1, f) == 1 && block == 64 &&
            std::fread(bits.words.data(), 8, bits.words.size(), f) ==
                bits.words.size();
  std::fclose(f);
  return ok;
}

void save_cache(const std::string &path, u64 limit, const OddBits &bits) {
  std::FILE *f = std::fopen(path.c_str(), "wb");
  if (!f) throw io_error("sieve cache: cannot open " + path + " for writing");
  u64 block = 64;
  bool ok = std::fwrite(kCacheMagic, 1, 5, f) == 5 &&
            std::fwrite(&limit, 8, 1, f) == 1 &&
            std::fwrite(&block, 8, 1, f) == 1 &&
            std::fwrite(bits.words.data(), 8, bits.words.size(), f) ==
                bits.words.size();
  std::fclose(f);
  if (!ok) throw io_error("sieve cache: short write to " + path);
}

}  // namespace

PrimeTable PrimeTable::build(u64 limit, const std::string &cache_path,
                             int threads, u64 budget) {
  if (limit < 2) throw domain_error("PrimeTable: limit must be >= 2");
  if (limit > budget)
    throw resource_error("PrimeTable: limit exceeds memory budget");

  OddBits bits(limit);
  bool from_cache = !cache_path.empty() && load_cache(cache_path, limit, bits);
  if (!from_cache) {
    u64 root = static_cast<u64>(std::sqrt(static_cast<double>(limit))) + 2;
    auto base = simple_sieve(root);
    u64 nbits = OddBits::bit_count(limit);
    int nthreads = threads > 0
                       ? threads
                       : std::max(1u, std::thread::hardware_concurrency());
    const u64 kSeg = 1ull << 21;
    if (nthreads <= 1 || nbits < 2 * kSeg) {
      sieve_range(bits, base, 0, nbits);
    } else {
      // disjoint word-aligned bit ranges; content independent of schedule
      u64 nseg = (nbits + kSeg - 1) / kSeg;
      std::vector<std::thread> pool;
      std::atomic<u64> next{0};
      for (int t = 0; t < nthreads; ++t)
        pool.emplace_back([&] {
          for (u64 s = next.fetch_add(1); s < nseg; s = next.fetch_add(1))
            sieve_range(bits, base, s * kSeg, std::min(nbits, (s + 1) * kSeg));
        });
      for (auto &th : pool) th.join();
    }
    if (!cache_path.empty()) save_cache(cache_path, limit, bits);
  }

  PrimeTable t;
  t.limit_ = limit;
  double approx = limit > 16
                      ? static_cast<double>(limit) /
                            (std::log(static_cast<double>(limit)) - 1.1)
                      : 8.0;
  t.primes_.reserve(static_cast<size_t>(approx) + 16);
  t.primes_.push_back(2);
  u64 nbits = OddBits::bit_count(limit);
  for (u64 b = 0; b < nbits; ++b)
    if (!bits.composite(b)) t.primes_.push_back(2 * b + 3);
  t.build_prefix();
  return t;
}

void PrimeTable::build_prefix() {
  u64 nblocks = limit_ / kPrefixBlock + 1;
  block_count_.assign(nblocks + 1, 0);
  block_theta_.assign(nblocks + 1, 0.0);
  KahanSum theta;
  size_t i = 0;
  for (u64 b = 0; b < nblocks; ++b) {
    u64 hi = (b + 1) * kPrefixBlock;  // primes strictly below hi
    while (i < primes_.size() && primes_[i] < hi) {
      theta.add(std::log(static_cast<double>(primes_[i])));
      ++i;
    }
    block_count_[b + 1] = i;
    block_theta_[b + 1] = theta.value();
  }
}

u64 PrimeTable::pi(double x) const {
  if (x < 2.0) return 0;
  if (x > static_cast<double>(limit_))
    throw range_error("PrimeTable::pi: x beyond sieve limit");
  u64 xi = static_cast<u64>(x);
  auto it = std::upper_bound(primes_.begin(), primes_.end(), xi);
  return static_cast<u64>(it - primes_.begin());
}

double PrimeTable::theta(double x) const {
  if (x < 2.0) return 0.0;
  if (x > static_cast<double>(limit_))
    throw range_error("PrimeTable::theta: x beyond sieve limit");
  u64 xi = static_cast<u64>(x);
  u64 blk = xi / kPrefixBlock;
  double acc = block_theta_[blk];
  u64 lo_idx = block_count_[blk];
  KahanSum part;
  for (size_t i = lo_idx; i < primes_.size() && primes_[i] <= xi; ++i)
    part.add(std::log(static_cast<double>(primes_[i])));
  return acc + part.value();
}

u64 PrimeTable::nth_prime(u64 n) const {
  if (n == 0 || n > primes_.size())
    throw range_error("PrimeTable::nth_prime: index out of range");
  return primes_[n - 1];
}

}  // namespace ds::primes
