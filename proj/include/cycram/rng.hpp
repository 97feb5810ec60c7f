#pragma once

#include <algorithm>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace cycram {

/// Counter-based generator: the i-th output is the SplitMix64 finalizer
/// applied to seed + (i + 1) * 0x9E3779B97F4A7C15. Every output is a pure
/// function of (seed, i), so draws are reproducible across platforms and
/// languages. Distributions are implemented here rather than with <random>,
/// whose distributions are not portable.
class CounterRng {
 public:
  static constexpr std::string_view kAlgorithm = "splitmix64-counter";

  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  /// Output at an explicit counter position; does not advance the stream.
  std::uint64_t at(std::uint64_t counter) const noexcept {
    std::uint64_t z = seed_ + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) built from the top 53 bits.
  static double to_unit(std::uint64_t bits) noexcept {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
  }

  double unit_at(std::uint64_t counter) const noexcept { return to_unit(at(counter)); }

  std::uint64_t next() noexcept { return at(counter_++); }
  double next_unit() noexcept { return to_unit(next()); }

  /// Uniform integer in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = (~std::uint64_t{0}) - (~std::uint64_t{0}) % bound;
    for (;;) {
      const std::uint64_t x = next();
      if (x < limit) return x % bound;
    }
  }

  /// Fisher-Yates shuffle.
  template <class T>
  void shuffle(std::vector<T>& items) noexcept {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

  /// k distinct values from 0..n-1, sorted ascending (partial Fisher-Yates).
  std::vector<int> sample(int n, int k) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < k; ++i) {
      std::swap(pool[i], pool[i + static_cast<int>(below(static_cast<std::uint64_t>(n - i)))]);
    }
    pool.resize(static_cast<std::size_t>(k));
    std::sort(pool.begin(), pool.end());
    return pool;
  }

  std::uint64_t position() const noexcept { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace cycram
