#pragma once

#include <cstdint>
#include <random>

namespace manprox {

// splitmix64 finalizer; decorrelates nearby seeds before feeding mt19937_64.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Independent substream for (seed, stream). Same pair, same bit stream
// within a build; the exact stream is not an external contract.
inline std::mt19937_64 seeded_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  return std::mt19937_64(mix64(mix64(seed) ^ mix64(stream)));
}

}  // namespace manprox
