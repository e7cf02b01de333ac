// Copyright 2026 The liyorke Authors.
// SPDX-License-Identifier: Apache-2.0

// Reproducible random streams.
//
// Every sampler uses std::mt19937_64, whose output sequence is fixed by the
// C++ standard. Work is split into fixed-size chunks and chunk c draws from
// an engine seeded with derive_seed(seed, c), so results do not depend on
// how many threads process the chunks.

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "symbolic.hpp"

namespace liyorke {

using Engine = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(Engine& engine) noexcept {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

/// Inverse-CDF sampling of digits 1..m with the given weights.
class DigitSampler {
 public:
  explicit DigitSampler(std::span<const double> weights);

  static DigitSampler uniform(int m);

  Digit operator()(Engine& engine) const noexcept {
    const double u = uniform01(engine) * total_;
    for (std::size_t i = 0; i + 1 < cdf_.size(); ++i) {
      if (u < cdf_[i]) return static_cast<Digit>(i + 1);
    }
    return static_cast<Digit>(cdf_.size());
  }

  void fill(Engine& engine, std::span<Digit> out) const noexcept {
    for (auto& d : out) d = (*this)(engine);
  }

  int alphabet_size() const noexcept { return static_cast<int>(cdf_.size()); }

 private:
  std::vector<double> cdf_;
  double total_ = 1;
};

}  // namespace liyorke
