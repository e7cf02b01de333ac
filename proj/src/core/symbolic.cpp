// Copyright 2026 The liyorke Authors.
// SPDX-License-Identifier: Apache-2.0

#include "symbolic.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <sstream>

#include "error.hpp"

namespace liyorke {

namespace {

void check_digits(std::span<const Digit> digits, int m) {
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (digits[k] < 1 || digits[k] > m) {
      fail(ErrorCode::InvalidDigit, "digit " + std::to_string(digits[k]) +
                                        " at position " + std::to_string(k + 1) +
                                        " is outside {1,...," + std::to_string(m) + "}");
    }
  }
}

void check_compatible(const SymbolSequence& s, const SymbolSequence& t,
                      const char* what) {
  if (s.alphabet_size() != t.alphabet_size()) {
    fail(ErrorCode::InvalidArgument,
         std::string(what) + ": alphabet sizes differ");
  }
  if (s.side() != t.side()) {
    fail(ErrorCode::InvalidArgument, std::string(what) + ": sides differ");
  }
}

// sum_{k=1}^{n} m^{-k} |a_k - b_k|
long double weighted_sum(std::span<const Digit> a, std::span<const Digit> b,
                         std::size_t n, int m) {
  long double sum = 0;
  long double weight = 1;
  for (std::size_t k = 0; k < n; ++k) {
    weight /= m;
    sum += weight * std::abs(a[k] - b[k]);
  }
  return sum;
}

}  // namespace

SymbolSequence::SymbolSequence(int m, Side side, std::vector<Digit> past,
                               std::vector<Digit> future)
    : m_(m), side_(side), past_(std::move(past)), future_(std::move(future)) {
  if (m_ < 2) {
    fail(ErrorCode::InvalidArgument, "alphabet size must be at least 2");
  }
  check_digits(past_, m_);
  check_digits(future_, m_);
}

SymbolSequence SymbolSequence::one_sided(int m, std::vector<Digit> digits) {
  return SymbolSequence(m, Side::One, {}, std::move(digits));
}

SymbolSequence SymbolSequence::two_sided(int m, std::vector<Digit> past,
                                         std::vector<Digit> future) {
  return SymbolSequence(m, Side::Two, std::move(past), std::move(future));
}

Digit SymbolSequence::at(std::size_t k) const {
  if (k == 0 || k > future_.size()) {
    fail(ErrorCode::InsufficientPrefix,
         "digit s_" + std::to_string(k) + " requested but only " +
             std::to_string(future_.size()) + " are stored");
  }
  return future_[k - 1];
}

Digit SymbolSequence::past_at(std::size_t k) const {
  if (k == 0 || k > past_.size()) {
    fail(ErrorCode::InsufficientPrefix,
         "digit s_-" + std::to_string(k) + " requested but only " +
             std::to_string(past_.size()) + " past digits are stored");
  }
  return past_[past_.size() - k];
}

bool CylinderSet::contains(const SymbolSequence& seq) const {
  if (seq.alphabet_size() != alphabet_size) {
    fail(ErrorCode::InvalidArgument, "cylinder: alphabet sizes differ");
  }
  if (seq.size() < prefix.size()) {
    fail(ErrorCode::InsufficientPrefix,
         "cylinder of length " + std::to_string(prefix.size()) +
             " tested against a prefix of length " + std::to_string(seq.size()));
  }
  return std::equal(prefix.begin(), prefix.end(), seq.digits().begin());
}

GapSequence GapSequence::list(std::vector<std::uint64_t> values) {
  GapSequence g;
  g.rule_ = Rule::List;
  g.values_ = std::move(values);
  return g;
}

GapSequence GapSequence::constant(std::uint64_t c) {
  GapSequence g;
  g.rule_ = Rule::Constant;
  g.b_ = c;
  return g;
}

GapSequence GapSequence::linear() {
  GapSequence g;
  g.rule_ = Rule::Linear;
  g.a_ = 1;
  return g;
}

GapSequence GapSequence::quadratic() {
  GapSequence g;
  g.rule_ = Rule::Quadratic;
  g.a_ = 1;
  return g;
}

GapSequence GapSequence::affine(std::uint64_t a, std::uint64_t b) {
  GapSequence g;
  g.rule_ = Rule::Affine;
  g.a_ = a;
  g.b_ = b;
  return g;
}

std::uint64_t GapSequence::operator()(std::size_t n) const {
  if (n == 0) {
    fail(ErrorCode::InvalidArgument, "gap index starts at 1");
  }
  switch (rule_) {
    case Rule::List:
      if (n > values_.size()) {
        fail(ErrorCode::GeneratorExhausted,
             "gap list has " + std::to_string(values_.size()) +
                 " entries, N_" + std::to_string(n) + " requested");
      }
      return values_[n - 1];
    case Rule::Constant:
      return b_;
    case Rule::Linear:
      return n;
    case Rule::Quadratic:
      return static_cast<std::uint64_t>(n) * n;
    case Rule::Affine:
      return a_ * n * n + b_;
  }
  return 0;
}

std::string GapSequence::describe() const {
  std::ostringstream os;
  switch (rule_) {
    case Rule::List:
      os << "list[" << values_.size() << "]";
      break;
    case Rule::Constant:
      os << "constant " << b_;
      break;
    case Rule::Linear:
      os << "n";
      break;
    case Rule::Quadratic:
      os << "n^2";
      break;
    case Rule::Affine:
      os << a_ << "*n^2+" << b_;
      break;
  }
  return os.str();
}

Digit mismatch_digit(Digit s, int m) noexcept { return (s % m) + 1; }

SymbolSequence shift(const SymbolSequence& seq, std::size_t n) {
  if (n > seq.size()) {
    fail(ErrorCode::InsufficientPrefix,
         "shift by " + std::to_string(n) + " needs " + std::to_string(n) +
             " stored digits, have " + std::to_string(seq.size()));
  }
  auto digits = seq.digits();
  std::vector<Digit> future(digits.begin() + static_cast<std::ptrdiff_t>(n),
                            digits.end());
  if (seq.side() == Side::One) {
    return SymbolSequence::one_sided(seq.alphabet_size(), std::move(future));
  }
  std::vector<Digit> past(seq.past().begin(), seq.past().end());
  past.insert(past.end(), digits.begin(),
              digits.begin() + static_cast<std::ptrdiff_t>(n));
  return SymbolSequence::two_sided(seq.alphabet_size(), std::move(past),
                                   std::move(future));
}

DistanceBounds sequence_dist(const SymbolSequence& s, const SymbolSequence& t,
                             long double tail_bound) {
  check_compatible(s, t, "sequence_dist");
  if (!(tail_bound > 0)) {
    fail(ErrorCode::InvalidArgument, "tail bound must be positive");
  }
  const int m = s.alphabet_size();
  const std::size_t kf = std::min(s.size(), t.size());
  // (m-1) * sum_{k>K} m^{-k} = m^{-K}
  long double tail = std::pow(static_cast<long double>(m),
                              -static_cast<long double>(kf));
  long double lo = weighted_sum(s.digits(), t.digits(), kf, m);
  std::size_t terms = kf;
  if (s.side() == Side::Two) {
    const std::size_t kp = std::min(s.past_size(), t.past_size());
    std::vector<Digit> sp(s.past().rbegin(), s.past().rend());
    std::vector<Digit> tp(t.past().rbegin(), t.past().rend());
    lo += weighted_sum(sp, tp, kp, m);
    tail += std::pow(static_cast<long double>(m), -static_cast<long double>(kp));
    terms += kp;
  }
  if (tail > tail_bound) {
    fail(ErrorCode::InsufficientPrefix,
         "stored prefixes leave a metric tail above the requested bound");
  }
  // Rounding slack of the partial sum goes on the upper end.
  const long double rounding = lo * static_cast<long double>(terms + 1) * LDBL_EPSILON;
  return {lo, lo + tail + rounding};
}

PairSchedule block_schedule(const GapSequence& gaps, std::size_t block_count) {
  if (block_count == 0) {
    fail(ErrorCode::InvalidArgument, "block_count must be at least 1");
  }
  PairSchedule schedule;
  schedule.blocks.reserve(block_count);
  std::size_t u = 1;
  for (std::size_t i = 0; i < block_count; ++i) {
    Block b;
    b.start = u;
    b.match_len = i + 1;
    b.mismatch_pos = u + i + 1;
    b.free_count = gaps(i + 1);
    schedule.blocks.push_back(b);
    u = b.next_start();
  }
  schedule.span = u - 1;
  return schedule;
}

PartnerLayout partner_layout(const GapSequence& gaps, std::size_t length) {
  PartnerLayout layout;
  layout.roles.reserve(length);
  std::size_t u = 1;
  for (std::size_t i = 0; u <= length; ++i) {
    for (std::size_t k = u; k <= u + i && k <= length; ++k) {
      layout.roles.push_back(Role::Match);
      layout.last_constrained = k;
    }
    const std::size_t mismatch = u + i + 1;
    if (mismatch <= length) {
      layout.roles.push_back(Role::Mismatch);
      layout.last_constrained = mismatch;
    }
    const std::uint64_t free = gaps(i + 1);
    const std::size_t free_here =
        mismatch >= length ? 0
                           : static_cast<std::size_t>(
                                 std::min<std::uint64_t>(free, length - mismatch));
    layout.roles.insert(layout.roles.end(), free_here, Role::Free);
    layout.free_count += free_here;
    if (free >= length) break;  // next block starts beyond length
    u = mismatch + static_cast<std::size_t>(free) + 1;
  }
  return layout;
}

void fill_partner(const PartnerLayout& layout, std::span<const Digit> base,
                  int m, std::span<const Digit> filler, std::span<Digit> out) {
  std::size_t next_free = 0;
  for (std::size_t k = 0; k < layout.roles.size(); ++k) {
    switch (layout.roles[k]) {
      case Role::Match:
        out[k] = base[k];
        break;
      case Role::Mismatch:
        out[k] = mismatch_digit(base[k], m);
        break;
      case Role::Free:
        out[k] = filler[next_free++];
        break;
    }
  }
}

SymbolSequence construct_partner(const SymbolSequence& base,
                                 const GapSequence& gaps,
                                 const SymbolSequence& filler,
                                 std::size_t length) {
  check_compatible(base, filler, "construct_partner");
  const PartnerLayout layout = partner_layout(gaps, length);
  if (base.size() < layout.last_constrained) {
    fail(ErrorCode::InsufficientPrefix,
         "base covers " + std::to_string(base.size()) + " digits, layout needs " +
             std::to_string(layout.last_constrained));
  }
  if (filler.size() < layout.free_count) {
    fail(ErrorCode::InsufficientPrefix,
         "filler covers " + std::to_string(filler.size()) +
             " digits, layout has " + std::to_string(layout.free_count) +
             " free positions");
  }
  const int m = base.alphabet_size();
  std::vector<Digit> out(length);
  fill_partner(layout, base.digits(), m, filler.digits(), out);
  if (base.side() == Side::One) {
    return SymbolSequence::one_sided(m, std::move(out));
  }
  return SymbolSequence::two_sided(
      m, std::vector<Digit>(filler.past().begin(), filler.past().end()),
      std::move(out));
}

SymbolSequence extract_filler(const SymbolSequence& partner,
                              const SymbolSequence& base,
                              const GapSequence& gaps) {
  check_compatible(partner, base, "extract_filler");
  const std::size_t length = partner.size();
  const PartnerLayout layout = partner_layout(gaps, length);
  if (base.size() < layout.last_constrained) {
    fail(ErrorCode::InsufficientPrefix,
         "base covers " + std::to_string(base.size()) + " digits, partner span needs " +
             std::to_string(layout.last_constrained));
  }
  const int m = base.alphabet_size();
  const auto s = base.digits();
  const auto t = partner.digits();
  std::vector<Digit> free;
  free.reserve(layout.free_count);
  for (std::size_t k = 0; k < length; ++k) {
    switch (layout.roles[k]) {
      case Role::Match:
        if (t[k] != s[k]) {
          fail(ErrorCode::NotInSubset,
               "match position " + std::to_string(k + 1) + " differs from the base");
        }
        break;
      case Role::Mismatch:
        if (t[k] != mismatch_digit(s[k], m)) {
          fail(ErrorCode::NotInSubset,
               "mismatch position " + std::to_string(k + 1) +
                   " does not hold (s mod m) + 1");
        }
        break;
      case Role::Free:
        free.push_back(t[k]);
        break;
    }
  }
  if (partner.side() == Side::One) {
    return SymbolSequence::one_sided(m, std::move(free));
  }
  return SymbolSequence::two_sided(
      m, std::vector<Digit>(partner.past().begin(), partner.past().end()),
      std::move(free));
}

const char* to_string(GapVerdict v) noexcept {
  switch (v) {
    case GapVerdict::Pass:
      return "pass";
    case GapVerdict::Fail:
      return "fail";
    case GapVerdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

GapReport check_gap_condition(const GapSequence& gaps, std::size_t max_terms) {
  if (max_terms < 10) {
    fail(ErrorCode::InvalidArgument, "gap check needs at least 10 terms");
  }
  constexpr double inf = std::numeric_limits<double>::infinity();
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();

  GapReport report;
  std::size_t terms = max_terms;
  if (gaps.rule() == GapSequence::Rule::List) {
    terms = std::min(terms, gaps.values().size());
  }
  long double sum = 0;
  bool all_zero = true;
  report.ratios.reserve(terms);
  for (std::size_t n = 1; n <= terms; ++n) {
    const std::uint64_t value = gaps(n);
    all_zero = all_zero && value == 0;
    sum += static_cast<long double>(value);
    const long double mm = static_cast<long double>(n) * n;
    report.ratios.push_back(sum == 0 ? inf : static_cast<double>(mm / sum));
  }

  auto set = [&](GapVerdict v, double limit, const char* label) {
    report.verdict = v;
    report.limit = limit;
    report.limit_label = label;
  };
  using Rule = GapSequence::Rule;
  switch (gaps.rule()) {
    case Rule::Quadratic:
      set(GapVerdict::Pass, 0, "0");
      break;
    case Rule::Linear:
      set(GapVerdict::Fail, 2, "2");
      break;
    case Rule::Constant:
      if (gaps.b() == 0) {
        set(GapVerdict::Fail, nan, "undefined");
      } else {
        set(GapVerdict::Fail, inf, "inf");
      }
      break;
    case Rule::Affine:
      if (gaps.a() > 0) {
        set(GapVerdict::Pass, 0, "0");
      } else if (gaps.b() > 0) {
        set(GapVerdict::Fail, inf, "inf");
      } else {
        set(GapVerdict::Fail, nan, "undefined");
      }
      break;
    case Rule::List:
      if (all_zero) {
        set(GapVerdict::Fail, nan, "undefined");
      } else {
        set(GapVerdict::Inconclusive, nan, "unknown");
      }
      break;
  }
  return report;
}

}  // namespace liyorke
