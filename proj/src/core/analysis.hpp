// Copyright 2026 The liyorke Authors.
// SPDX-License-Identifier: Apache-2.0

// Li-Yorke verification of coded orbit pairs and box-counting dimension
// estimates.
//
// Checkpoint times. For block i with start u_i:
//   one-sided proximity   u_i - 1            match block at the front
//   one-sided separation  u_i + i            mismatch digit at the front
//   two-sided proximity   u_i - 1 + h        h = floor((i+1)/2) match digits
//                                            in the past, the rest in front
//   two-sided separation  u_i + i + 1        mismatch digit is s_{-1}
// Two-sided orbits need matching digits on both sides of the origin to be
// close, and the contracting coordinate (the only strongly separated one for
// the baker and solenoid maps) sees the mismatch only once it is in the past.
//
// Orbits are always evaluated through code_orbit_point, never by iterating
// floating-point maps.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fractal.hpp"
#include "symbolic.hpp"
#include "systems.hpp"

namespace liyorke {

struct ProximityCheckpoint {
  std::size_t block = 0;
  std::size_t time = 0;
  double upper = 0;  // certified upper bound of the orbit distance
};

struct SeparationCheckpoint {
  std::size_t block = 0;
  std::size_t time = 0;
  double lower = 0;  // certified lower bound; <= 0 means nothing certified
};

struct LiYorkeProfile {
  std::vector<ProximityCheckpoint> proximity;
  std::vector<SeparationCheckpoint> separation;
  /// Diameter of the ambient domain: the trivial distance bound.
  double reference_scale = 1;
};

enum class Membership { Require, Skip };

std::size_t proximity_time(Side side, const Block& block) noexcept;
std::size_t separation_time(Side side, const Block& block) noexcept;

/// Future digits base and partner need for `block_count` blocks at `depth`.
std::size_t required_length(Side side, const GapSequence& gaps,
                            std::size_t block_count, std::size_t depth);

/// Membership::Skip is for negative controls whose partner is deliberately
/// outside Sigma_N(base).
LiYorkeProfile liyorke_profile(const SystemSpec& spec, const SymbolSequence& base,
                               const GapSequence& gaps, const SymbolSequence& partner,
                               std::size_t block_count, std::size_t depth,
                               Membership membership = Membership::Require);

struct LiYorkeThresholds {
  double proximity_decay = 0.5;
  double separation_floor = 0.1;
};

/// Decay: the largest contraction ratio for one-sided systems and its square
/// root for two-sided ones (match digits split across past and future).
/// Floor: half the separation gap of the IFS that sees the mismatch.
LiYorkeThresholds default_thresholds(const SystemSpec& spec);

struct LiYorkeVerdict {
  enum class Failure { None, Proximity, Separation };

  bool pass = false;
  Failure failure = Failure::None;
  std::size_t block = 0;
  std::size_t time = 0;
  double value = 0;  // the offending bound
  double limit = 0;  // what it had to meet
};

const char* to_string(LiYorkeVerdict::Failure f) noexcept;

/// Pass iff every proximity bound from block 1 on satisfies
/// upper_i <= reference_scale * decay^i and every separation lower bound is
/// >= floor. Throws TooFewCheckpoints below three checkpoints of each kind.
LiYorkeVerdict verify_liyorke(const LiYorkeProfile& profile, double proximity_decay,
                              double separation_floor);

/// Copy of `partner` that agrees with `base` from block `keep_blocks` on:
/// an eventually-equal negative control.
SymbolSequence eventually_equal_control(const SymbolSequence& partner,
                                        const SymbolSequence& base,
                                        const GapSequence& gaps, std::size_t keep_blocks);

struct BoxCountEstimate {
  std::vector<double> epsilons;       // strictly decreasing
  std::vector<std::uint64_t> counts;  // occupied grid cells per epsilon
  std::size_t sample_count = 0;
  bool fitted = false;
  double slope = 0;
  double stderr_slope = 0;
  std::size_t fit_begin = 0;  // first ladder index used by the fit
  std::size_t fit_end = 0;    // one past the last
};

/// 2^-jmin, 2^-(jmin+1), ..., 2^-jmax.
std::vector<double> dyadic_ladder(int jmin, int jmax);
/// Dyadic ladder 2^-4 ... 2^-14.
std::vector<double> default_ladder();
/// Dyadic ladder covering [eps_min, eps_max].
std::vector<double> dyadic_ladder_between(double eps_max, double eps_min);

/// Counts cells floor(x_k / eps) occupied by at least one point. The points
/// are split across threads and merged by set union.
BoxCountEstimate box_count(const PointCloud& points, std::span<const double> epsilons,
                           unsigned threads = 1);

/// Counts outside [8, sample_count / 8] are dropped; OLS of log N against
/// -log eps on the rest. Throws DegenerateFit with fewer than 4 usable rows.
BoxCountEstimate dimension_fit(BoxCountEstimate estimate);

}  // namespace liyorke
