#ifndef APOLAR_RANDOM_HPP
#define APOLAR_RANDOM_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "apolar/field.hpp"

namespace apolar {

/// Counter-based SplitMix64 stream. A stream is a (key, counter) pair, so
/// split(i) gives an independent child stream that depends only on the
/// parent key and i, never on how much the parent has been consumed.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : key_(mix(seed ^ 0x6a09e667f3bcc909ULL)) {}

  std::uint64_t next() { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  CounterRng split(std::uint64_t index) const {
    CounterRng child(0);
    child.key_ = mix(key_ ^ mix(index + 0xbb67ae8584caa73bULL));
    return child;
  }

  /// Uniform in [lo, hi], by rejection.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span + 1) % span;
    std::uint64_t x;
    do x = next();
    while (x > limit);
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % span);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Range used for random integer coefficients.
inline constexpr std::int64_t kCoefficientBound = 10000;

template <ExactField K>
typename K::value_type random_scalar(const K& k, CounterRng& rng, std::int64_t bound = kCoefficientBound) {
  return k.from_int(rng.uniform_int(-bound, bound));
}

/// Distinct primes in [2^61, 2^62).
inline std::vector<std::uint64_t> random_primes(CounterRng& rng, std::size_t count) {
  std::vector<std::uint64_t> out;
  const std::int64_t lo = std::int64_t{1} << 61;
  const std::int64_t hi = (std::int64_t{1} << 62) - 1;
  while (out.size() < count) {
    const std::uint64_t p = next_prime(static_cast<std::uint64_t>(rng.uniform_int(lo, hi - 4096)));
    if (p >= PrimeField::kMaxModulus) continue;
    bool seen = false;
    for (auto q : out) seen = seen || q == p;
    if (!seen) out.push_back(p);
  }
  return out;
}

}  // namespace apolar

#endif  // APOLAR_RANDOM_HPP
