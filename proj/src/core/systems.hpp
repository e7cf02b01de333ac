// Copyright 2026 The liyorke Authors.
// SPDX-License-Identifier: Apache-2.0

// The four example systems (tent, skinny baker, linear horseshoe, solenoid)
// with their IFS codings and the conjugacy f o pi = pi o sigma.
//
// Ambient coordinates put contracting directions first and the expanding
// direction last: tent (x), baker (x, y), horseshoe (x, y), solenoid
// (x, y, z). The tent is coded by one-sided sequences through the inverse
// branches of t. The other three are coded by two-sided sequences: future
// digits s_1, s_2, ... drive the expanding coordinate through the inverse
// branches, past digits s_{-1}, s_{-2}, ... drive the contracting
// coordinate through the forward IFS, most recent digit outermost.
//
// Branch formulas as implemented:
//   tent       t(x) = a - 2a|x - 1/2|
//   baker      y <= 1/2: (b1 x, 2y)           y > 1/2: (1 - b2 + b2 x, 2y - 1)
//   horseshoe  y <= 1/tau: (beta x, tau y)    y > 1 - 1/tau: (1 - beta x, tau - tau y)
//   solenoid   z <= 1/2: (b1 x, b1 y, 2z)     z > 1/2: (1-b2+b2 x, 1-b2+b2 y, 2z - 1)
//
// An upper branch y -> 1 - 2y would leave [0,1] and have no inverse inside
// the upper half, so baker and solenoid use 2y - 1, the dyadic-expansion
// coding. The horseshoe's upper branch folds y to tau - tau y, the inverse of
// G_2 y = 1 - y/tau.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "fractal.hpp"
#include "symbolic.hpp"

namespace liyorke {

enum class SystemKind { Tent, Baker, Horseshoe, Solenoid };

const char* to_string(SystemKind kind) noexcept;
SystemKind parse_system_kind(const std::string& name);

struct SystemSpec {
  SystemKind kind = SystemKind::Tent;
  double a = 2;        // tent
  double beta1 = 0;    // baker, solenoid
  double beta2 = 0;    // baker, solenoid
  double beta = 0;     // horseshoe
  double tau = 0;      // horseshoe

  static SystemSpec tent(double a);
  static SystemSpec baker(double beta1, double beta2);
  static SystemSpec horseshoe(double beta, double tau);
  static SystemSpec solenoid(double beta1, double beta2);

  /// Throws ParameterOutOfRange.
  void validate() const;

  std::size_t dim() const noexcept;
  Side side() const noexcept;
};

struct SystemIfs {
  /// Inverse branches of the expanding direction (the tent's repeller IFS).
  IfsSystem expanding_inverse;
  /// Forward IFS of the contracting direction; absent for the tent.
  std::optional<IfsSystem> contracting;

  /// The strongly separated IFS whose attractor carries the Li-Yorke pairs:
  /// the tent's repeller IFS, otherwise the contracting IFS.
  const IfsSystem& primary() const noexcept {
    return contracting ? *contracting : expanding_inverse;
  }
};

SystemIfs derive_ifs(const SystemSpec& spec);

/// Branch-wise evaluation. Throws UndefinedRegion in the horseshoe's middle
/// strip and OutOfDomain outside [0,1]^w for the two-dimensional and
/// three-dimensional maps.
Vec apply_map(const SystemSpec& spec, std::span<const double> point);

/// Largest branch Lipschitz constant.
double lipschitz_constant(const SystemSpec& spec) noexcept;

/// f^n(pi(seq)) evaluated as pi(sigma^n seq) at the given coding depth.
/// Two-sided points report the future prefix in CodedPoint::prefix and the
/// Euclidean combination of both coordinate radii.
CodedPoint code_orbit_point(const SymbolSequence& seq, const SystemSpec& spec,
                            const SystemIfs& ifs, std::size_t n, std::size_t depth);
CodedPoint code_orbit_point(const SystemSpec& spec, const SymbolSequence& seq,
                            std::size_t n, std::size_t depth);

struct ConjugacyReport {
  std::size_t trials = 0;
  /// max |f(center pi(s)) - center pi(sigma s)|
  double max_defect = 0;
  /// max of (defect - bound); <= 0 when every trial meets its bound
  double max_excess = 0;
  std::size_t violations = 0;
};

/// Per-trial bound: (1 + L) * max(radius of both coded points) + float_tol.
ConjugacyReport conjugacy_defect(const SystemSpec& spec, std::size_t trials,
                                 std::size_t prefix_len, std::size_t depth,
                                 std::uint64_t seed, unsigned threads = 1,
                                 double float_tol = 1e-10);

/// Uniformly coded points of the invariant set in ambient coordinates.
PointCloud sample_invariant_set(const SystemSpec& spec, const SamplerConfig& config);

/// Uniform random sequence over {1..m} with `past_len` past digits
/// (two-sided only) and `future_len` future digits.
SymbolSequence random_sequence(Side side, int m, std::size_t past_len,
                               std::size_t future_len, std::uint64_t seed);

}  // namespace liyorke
