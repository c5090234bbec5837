#include "splicers/rng.hpp"

namespace splicers {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Seed Seed::stream(std::string_view name, std::uint64_t index) const {
  const std::uint64_t named = mix64(value_ ^ mix64(fnv1a(name)));
  return Seed(mix64(named + (index + 1) * kGamma));
}

Rng::Rng(Seed seed) : key_(mix64(seed.value() ^ 0x6A09E667F3BCC909ULL)) {}

std::uint64_t Rng::next_u64() {
  ++counter_;
  return mix64(key_ + counter_ * kGamma);
}

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  // Lemire's method; the rejection threshold is (2^64 - bound) mod bound.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const __uint128_t product =
        static_cast<__uint128_t>(next_u64()) * static_cast<__uint128_t>(bound);
    if (static_cast<std::uint64_t>(product) >= threshold) {
      return static_cast<std::uint64_t>(product >> 64);
    }
  }
}

double Rng::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

}  // namespace splicers
