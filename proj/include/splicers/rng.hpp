#ifndef SPLICERS_RNG_HPP
#define SPLICERS_RNG_HPP

#include <cstdint>
#include <string_view>

namespace splicers {

/// A 64-bit seed. Substreams are derived by name and index, so every
/// sub-result of an experiment can be replayed on its own:
///   seed.stream("tree_sampler.sample_trees", i)
class Seed {
 public:
  constexpr Seed() = default;
  constexpr explicit Seed(std::uint64_t value) : value_(value) {}

  [[nodiscard]] constexpr std::uint64_t value() const { return value_; }

  /// Derives an independent child seed from a name and an index.
  [[nodiscard]] Seed stream(std::string_view name, std::uint64_t index = 0) const;

  friend constexpr bool operator==(Seed, Seed) = default;

 private:
  std::uint64_t value_ = 0;
};

/// Counter-based generator: output i is mix(key + i * gamma). Given the same
/// seed it produces the same sequence on every platform.
class Rng {
 public:
  explicit Rng(Seed seed);

  std::uint64_t next_u64();

  /// Uniform integer in [0, bound) by multiply-and-reject, no modulo bias.
  /// bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();

  bool bernoulli(double p) { return uniform01() < p; }

  [[nodiscard]] std::uint64_t counter() const { return counter_; }

  // UniformRandomBitGenerator, so std::shuffle and friends work.
  using result_type = std::uint64_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() { return next_u64(); }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Fisher-Yates with uniform_below; std::shuffle is not portable across
/// standard libraries.
template <typename RandomIt>
void shuffle(RandomIt first, RandomIt last, Rng& rng) {
  const auto count = static_cast<std::uint64_t>(last - first);
  for (std::uint64_t i = count; i > 1; --i) {
    const auto j = rng.uniform_below(i);
    using std::swap;
    swap(first[i - 1], first[j]);
  }
}

}  // namespace splicers

#endif  // SPLICERS_RNG_HPP
