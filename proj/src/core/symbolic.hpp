// Copyright 2026 The liyorke Authors.
// SPDX-License-Identifier: Apache-2.0

// Full shifts over {1,...,m}, the sequence metric and the Li-Yorke partner
// construction.
//
// Sequences are stored as finite prefixes of infinite sequences. Any
// operation that would need a digit beyond the stored prefix fails with
// ErrorCode::InsufficientPrefix instead of inventing one.
//
// Partner layout. Block i (i = 0, 1, ...) starts at index u_i and consists of
// i+1 positions copied from the base, one mismatch position holding
// (s mod m) + 1, and N_{i+1} free positions filled from an arbitrary filler
// sequence. Blocks tile the index line:
//
//   u_0 = 1,   u_{i+1} = u_i + (i+1) + 1 + N_{i+1}.
//
// The published recursion reads u_{i+1} = u_i + N_i + i + 1, which leaves no
// room for both the mismatch digit and the free digits; the tiling form
// above is the one the verbal construction describes.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace liyorke {

using Digit = int;

enum class Side { One, Two };

/// A finite prefix of a one- or two-sided sequence over {1,...,m}.
///
/// One-sided: digits s_1, s_2, ...
/// Two-sided: past (..., s_{-2}, s_{-1}) stored oldest first, future
/// (s_1, s_2, ...). The shift moves digits from the front of the future to
/// the back of the past.
class SymbolSequence {
 public:
  static SymbolSequence one_sided(int m, std::vector<Digit> digits);
  static SymbolSequence two_sided(int m, std::vector<Digit> past,
                                  std::vector<Digit> future);

  int alphabet_size() const noexcept { return m_; }
  Side side() const noexcept { return side_; }

  /// Future digits (all digits for a one-sided sequence).
  std::span<const Digit> digits() const noexcept { return future_; }
  /// Past digits, oldest first. Empty for one-sided sequences.
  std::span<const Digit> past() const noexcept { return past_; }

  std::size_t size() const noexcept { return future_.size(); }
  std::size_t past_size() const noexcept { return past_.size(); }

  /// s_k for k >= 1.
  Digit at(std::size_t k) const;
  /// s_{-k} for k >= 1 (two-sided only).
  Digit past_at(std::size_t k) const;

  friend bool operator==(const SymbolSequence&, const SymbolSequence&) = default;

 private:
  SymbolSequence(int m, Side side, std::vector<Digit> past,
                 std::vector<Digit> future);

  int m_ = 2;
  Side side_ = Side::One;
  std::vector<Digit> past_;
  std::vector<Digit> future_;
};

/// All sequences whose first k digits equal `prefix`.
struct CylinderSet {
  int alphabet_size = 2;
  std::vector<Digit> prefix;

  bool contains(const SymbolSequence& seq) const;
};

/// Free-digit counts N_1, N_2, ... generated by a rule.
class GapSequence {
 public:
  enum class Rule { List, Constant, Linear, Quadratic, Affine };

  static GapSequence list(std::vector<std::uint64_t> values);
  static GapSequence constant(std::uint64_t c);
  static GapSequence linear();
  static GapSequence quadratic();
  /// N_n = a * n^2 + b.
  static GapSequence affine(std::uint64_t a, std::uint64_t b);

  Rule rule() const noexcept { return rule_; }
  std::uint64_t a() const noexcept { return a_; }
  std::uint64_t b() const noexcept { return b_; }
  std::span<const std::uint64_t> values() const noexcept { return values_; }

  /// N_n for n >= 1. Lists throw GeneratorExhausted past their end.
  std::uint64_t operator()(std::size_t n) const;

  std::string describe() const;

 private:
  Rule rule_ = Rule::Constant;
  std::uint64_t a_ = 0;
  std::uint64_t b_ = 0;
  std::vector<std::uint64_t> values_;
};

struct Block {
  std::size_t start = 0;         // u_i
  std::size_t match_len = 0;     // i + 1
  std::size_t mismatch_pos = 0;  // u_i + i + 1
  std::size_t free_count = 0;    // N_{i+1}

  std::size_t next_start() const noexcept { return mismatch_pos + free_count + 1; }
};

struct PairSchedule {
  std::vector<Block> blocks;
  /// Last index covered by the listed blocks (next_start of the last block - 1).
  std::size_t span = 0;
};

enum class Role : std::uint8_t { Match, Mismatch, Free };

/// Position roles for indices 1..length of a partner sequence.
struct PartnerLayout {
  std::vector<Role> roles;  // roles[k - 1] is the role of index k
  std::size_t free_count = 0;
  std::size_t last_constrained = 0;  // largest Match/Mismatch index <= length
};

Digit mismatch_digit(Digit s, int m) noexcept;

SymbolSequence shift(const SymbolSequence& seq, std::size_t n);

/// Certified enclosure of dist(s, t) = sum m^{-|k|} |s_k - t_k|.
struct DistanceBounds {
  long double lo = 0;
  long double hi = 0;
};

DistanceBounds sequence_dist(const SymbolSequence& s, const SymbolSequence& t,
                             long double tail_bound);

PairSchedule block_schedule(const GapSequence& gaps, std::size_t block_count);

PartnerLayout partner_layout(const GapSequence& gaps, std::size_t length);

/// Writes the partner digits for indices 1..layout.roles.size() into `out`.
/// `base` must cover layout.last_constrained, `filler` layout.free_count.
void fill_partner(const PartnerLayout& layout, std::span<const Digit> base,
                  int m, std::span<const Digit> filler, std::span<Digit> out);

/// The bijection filling the free digits of Sigma_N(base) from `filler`.
/// Two-sided inputs keep the filler's past as the partner's past.
SymbolSequence construct_partner(const SymbolSequence& base,
                                 const GapSequence& gaps,
                                 const SymbolSequence& filler,
                                 std::size_t length);

/// Inverse of construct_partner over the partner's stored span. Throws
/// NotInSubset when a match or mismatch position is violated.
SymbolSequence extract_filler(const SymbolSequence& partner,
                              const SymbolSequence& base,
                              const GapSequence& gaps);

enum class GapVerdict { Pass, Fail, Inconclusive };

const char* to_string(GapVerdict v) noexcept;

struct GapReport {
  /// ratios[M - 1] = M^2 / sum_{n <= M} N_n; +inf when the sum is zero.
  std::vector<double> ratios;
  GapVerdict verdict = GapVerdict::Inconclusive;
  /// Analytic limit of the ratio: 0, 2, +inf, or NaN when undefined (all
  /// zero) or unknown (explicit lists).
  double limit = 0;
  std::string limit_label;
};

GapReport check_gap_condition(const GapSequence& gaps, std::size_t max_terms);

}  // namespace liyorke
