#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace swg {

using Rng = std::mt19937_64;

// SplitMix64 finaliser. Stable across platforms; every derived seed in the
// library goes through this function.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Folds words left to right: h <- splitmix64(h ^ w).
constexpr std::uint64_t hash_words(std::initializer_list<std::uint64_t> words,
                                   std::uint64_t h = 0x243F6A8885A308D3ULL) {
  for (std::uint64_t w : words) h = splitmix64(h ^ w);
  return h;
}

// Substream seed for one distance class of the sampler.
constexpr std::uint64_t distance_stream_seed(std::uint64_t seed,
                                             std::uint64_t distance) {
  return hash_words({seed, 0x6C6F6E6772616E67ULL, distance});
}

// Replicate seed for grid cell (n, r, replicate) under a base seed.
inline std::uint64_t instance_seed(std::uint64_t base_seed, std::uint64_t n,
                                   double r, std::uint64_t replicate) {
  return hash_words({base_seed, n, std::bit_cast<std::uint64_t>(r), replicate});
}

}  // namespace swg
