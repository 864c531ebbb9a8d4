// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

namespace grw {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Independent stream for repetition `index` under `root_seed`. Depends on
/// (root_seed, index) only, so any assignment of repetitions to workers
/// reproduces the same draws.
inline Rng substream(std::uint64_t root_seed, std::uint64_t index) {
  return Rng{mix64(mix64(root_seed) ^ mix64(index + 0x632be59bd9b4e019ULL))};
}

}  // namespace grw
