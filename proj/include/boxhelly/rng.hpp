#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "boxhelly/rational.hpp"

namespace boxhelly {

// Seeded deterministic randomness. mt19937_64 output is fully specified by
// the standard and all derived draws below avoid implementation-defined
// distributions, so a seed pins byte-identical behavior everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // uniform in [0, n) by rejection
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("below(0)");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t rem = (max % n + 1) % n;  // 2^64 mod n
    const std::uint64_t bound = max - rem;
    std::uint64_t v = engine_();
    while (v > bound) v = engine_();
    return v % n;
  }

  bool coin() { return below(2) == 1; }

  // k distinct indices from [0, m), ascending
  std::vector<std::size_t> sample_distinct(std::size_t m, std::size_t k) {
    if (k > m) throw std::invalid_argument("sample larger than population");
    std::vector<std::size_t> pool(m);
    for (std::size_t i = 0; i < m; ++i) pool[i] = i;
    for (std::size_t i = 0; i < k; ++i)
      std::swap(pool[i], pool[i + below(m - i)]);
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
  }

  // uniform over the (hi-lo)*den + 1 rationals with the given denominator
  Rational rational_in(long long lo, long long hi, std::uint64_t den = 4) {
    if (hi < lo) throw std::invalid_argument("empty range");
    std::uint64_t steps = static_cast<std::uint64_t>(hi - lo) * den + 1;
    BigInt num = BigInt(lo) * den + BigInt(below(steps));
    return Rational(num, BigInt(den));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace boxhelly
