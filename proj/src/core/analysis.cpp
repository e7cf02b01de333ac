// Copyright 2026 The liyorke Authors.
// SPDX-License-Identifier: Apache-2.0

#include "analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "error.hpp"
#include "parallel.hpp"

namespace liyorke {

std::size_t proximity_time(Side side, const Block& block) noexcept {
  const std::size_t head = side == Side::One ? 0 : block.match_len / 2;
  return block.start - 1 + head;
}

std::size_t separation_time(Side side, const Block& block) noexcept {
  return side == Side::One ? block.mismatch_pos - 1 : block.mismatch_pos;
}

std::size_t required_length(Side side, const GapSequence& gaps,
                            std::size_t block_count, std::size_t depth) {
  const PairSchedule schedule = block_schedule(gaps, block_count);
  return separation_time(side, schedule.blocks.back()) + depth;
}

LiYorkeProfile liyorke_profile(const SystemSpec& spec, const SymbolSequence& base,
                               const GapSequence& gaps, const SymbolSequence& partner,
                               std::size_t block_count, std::size_t depth,
                               Membership membership) {
  if (depth == 0) fail(ErrorCode::InvalidArgument, "depth must be >= 1");
  const SystemIfs ifs = derive_ifs(spec);
  if (membership == Membership::Require) (void)extract_filler(partner, base, gaps);
  const PairSchedule schedule = block_schedule(gaps, block_count);
  const Side side = spec.side();

  LiYorkeProfile profile;
  double scale2 = std::pow(ifs.expanding_inverse.domain().diameter(), 2);
  if (ifs.contracting) scale2 += std::pow(ifs.contracting->domain().diameter(), 2);
  profile.reference_scale = std::sqrt(scale2);

  for (std::size_t i = 0; i < schedule.blocks.size(); ++i) {
    const Block& block = schedule.blocks[i];
    const std::size_t tp = proximity_time(side, block);
    const CodedPoint a = code_orbit_point(base, spec, ifs, tp, depth);
    const CodedPoint b = code_orbit_point(partner, spec, ifs, tp, depth);
    profile.proximity.push_back(
        {i, tp, distance(a.center, b.center) + a.radius + b.radius});

    const std::size_t ts = separation_time(side, block);
    const CodedPoint c = code_orbit_point(base, spec, ifs, ts, depth);
    const CodedPoint d = code_orbit_point(partner, spec, ifs, ts, depth);
    profile.separation.push_back(
        {i, ts, distance(c.center, d.center) - c.radius - d.radius});
  }
  return profile;
}

LiYorkeThresholds default_thresholds(const SystemSpec& spec) {
  const SystemIfs ifs = derive_ifs(spec);
  auto max_ratio = [](const IfsSystem& s) {
    const Vec r = s.ratios();
    return *std::max_element(r.begin(), r.end());
  };
  if (!ifs.contracting) {
    return {max_ratio(ifs.expanding_inverse), 0.5 * verify_separation(ifs.expanding_inverse)};
  }
  const double q = std::max(max_ratio(ifs.expanding_inverse), max_ratio(*ifs.contracting));
  return {std::sqrt(q), 0.5 * verify_separation(*ifs.contracting)};
}

const char* to_string(LiYorkeVerdict::Failure f) noexcept {
  switch (f) {
    case LiYorkeVerdict::Failure::None:
      return "none";
    case LiYorkeVerdict::Failure::Proximity:
      return "proximity";
    case LiYorkeVerdict::Failure::Separation:
      return "separation";
  }
  return "?";
}

LiYorkeVerdict verify_liyorke(const LiYorkeProfile& profile, double proximity_decay,
                              double separation_floor) {
  if (!(proximity_decay > 0 && proximity_decay < 1)) {
    fail(ErrorCode::InvalidArgument, "proximity decay must lie in (0,1)");
  }
  if (!(separation_floor > 0)) {
    fail(ErrorCode::InvalidArgument, "separation floor must be positive");
  }
  if (profile.proximity.size() < 3 || profile.separation.size() < 3) {
    fail(ErrorCode::TooFewCheckpoints, "need at least 3 checkpoints of each kind");
  }
  LiYorkeVerdict verdict;
  for (std::size_t i = 1; i < profile.proximity.size(); ++i) {
    const auto& cp = profile.proximity[i];
    const double limit =
        profile.reference_scale * std::pow(proximity_decay, static_cast<double>(cp.block));
    if (!(cp.upper <= limit)) {
      verdict.failure = LiYorkeVerdict::Failure::Proximity;
      verdict.block = cp.block;
      verdict.time = cp.time;
      verdict.value = cp.upper;
      verdict.limit = limit;
      return verdict;
    }
  }
  for (const auto& cp : profile.separation) {
    if (!(cp.lower >= separation_floor)) {
      verdict.failure = LiYorkeVerdict::Failure::Separation;
      verdict.block = cp.block;
      verdict.time = cp.time;
      verdict.value = cp.lower;
      verdict.limit = separation_floor;
      return verdict;
    }
  }
  verdict.pass = true;
  return verdict;
}

SymbolSequence eventually_equal_control(const SymbolSequence& partner,
                                        const SymbolSequence& base,
                                        const GapSequence& gaps, std::size_t keep_blocks) {
  if (keep_blocks == 0) fail(ErrorCode::InvalidArgument, "keep at least one block");
  const std::size_t from = block_schedule(gaps, keep_blocks).span + 1;
  if (base.size() < partner.size()) {
    fail(ErrorCode::InsufficientPrefix, "base is shorter than the partner");
  }
  std::vector<Digit> digits(partner.digits().begin(), partner.digits().end());
  for (std::size_t k = from; k <= digits.size(); ++k) digits[k - 1] = base.at(k);
  const int m = partner.alphabet_size();
  if (partner.side() == Side::One) return SymbolSequence::one_sided(m, std::move(digits));
  return SymbolSequence::two_sided(
      m, std::vector<Digit>(partner.past().begin(), partner.past().end()), std::move(digits));
}

std::vector<double> dyadic_ladder(int jmin, int jmax) {
  if (jmax < jmin) fail(ErrorCode::InvalidArgument, "empty dyadic ladder");
  std::vector<double> eps;
  for (int j = jmin; j <= jmax; ++j) eps.push_back(std::ldexp(1.0, -j));
  return eps;
}

std::vector<double> default_ladder() { return dyadic_ladder(4, 14); }

std::vector<double> dyadic_ladder_between(double eps_max, double eps_min) {
  if (!(eps_min > 0) || !(eps_max >= eps_min)) {
    fail(ErrorCode::InvalidArgument, "need 0 < eps-min <= eps-max");
  }
  const int jmin = static_cast<int>(std::ceil(-std::log2(eps_max) - 1e-9));
  const int jmax = static_cast<int>(std::floor(-std::log2(eps_min) + 1e-9));
  return dyadic_ladder(jmin, jmax);
}

namespace {

constexpr std::size_t kMaxDim = 8;
using CellKey = std::array<std::int64_t, kMaxDim>;

std::uint64_t count_cells(const PointCloud& points, double eps, unsigned threads) {
  const std::size_t n = points.size();
  const std::size_t w = points.dim;
  constexpr std::size_t kMinPerPart = 1 << 15;
  const std::size_t parts =
      std::max<std::size_t>(1, std::min<std::size_t>(resolve_threads(threads), n / kMinPerPart));
  std::vector<std::vector<CellKey>> local(parts);
  for_each_chunk(parts, threads, [&](std::size_t p) {
    const std::size_t begin = n * p / parts;
    const std::size_t end = n * (p + 1) / parts;
    auto& keys = local[p];
    keys.resize(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
      CellKey key{};
      const auto x = points.point(i);
      for (std::size_t k = 0; k < w; ++k) {
        key[k] = static_cast<std::int64_t>(std::floor(x[k] / eps));
      }
      keys[i - begin] = key;
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  });
  if (parts == 1) return local[0].size();
  std::vector<CellKey> merged;
  for (auto& keys : local) merged.insert(merged.end(), keys.begin(), keys.end());
  std::sort(merged.begin(), merged.end());
  return static_cast<std::uint64_t>(std::unique(merged.begin(), merged.end()) - merged.begin());
}

}  // namespace

BoxCountEstimate box_count(const PointCloud& points, std::span<const double> epsilons,
                           unsigned threads) {
  if (points.size() == 0) fail(ErrorCode::EmptyInput, "box counting needs at least one point");
  if (points.dim > kMaxDim) {
    fail(ErrorCode::InvalidArgument, "box counting supports at most 8 dimensions");
  }
  if (epsilons.empty()) fail(ErrorCode::InvalidArgument, "empty epsilon ladder");
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    if (!(epsilons[i] > 0) || (i > 0 && !(epsilons[i] < epsilons[i - 1]))) {
      fail(ErrorCode::InvalidArgument, "epsilons must be positive and strictly decreasing");
    }
  }
  double extent = 0;
  for (double x : points.coords) {
    if (!std::isfinite(x)) fail(ErrorCode::InvalidArgument, "non-finite coordinate");
    extent = std::max(extent, std::abs(x));
  }
  if (extent / epsilons.back() > 0x1.0p62) {
    fail(ErrorCode::InvalidArgument, "grid too fine for the coordinate range");
  }

  BoxCountEstimate est;
  est.epsilons.assign(epsilons.begin(), epsilons.end());
  est.sample_count = points.size();
  est.counts.reserve(epsilons.size());
  for (double eps : epsilons) est.counts.push_back(count_cells(points, eps, threads));
  return est;
}

BoxCountEstimate dimension_fit(BoxCountEstimate est) {
  const double upper = static_cast<double>(est.sample_count) / 8.0;
  std::size_t begin = est.counts.size();
  std::size_t end = 0;
  for (std::size_t i = 0; i < est.counts.size(); ++i) {
    const double c = static_cast<double>(est.counts[i]);
    if (c >= 8 && c <= upper) {
      begin = std::min(begin, i);
      end = i + 1;
    }
  }
  if (begin >= end || end - begin < 4) {
    fail(ErrorCode::DegenerateFit,
         "fewer than 4 ladder points with counts in [8, samples/8]");
  }
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = begin; i < end; ++i) {
    xs.push_back(-std::log(est.epsilons[i]));
    ys.push_back(std::log(static_cast<double>(est.counts[i])));
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ssr = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (intercept + slope * xs[i]);
    ssr += r * r;
  }
  est.fitted = true;
  est.slope = slope;
  est.stderr_slope = std::sqrt(ssr / (n - 2.0) / sxx);
  est.fit_begin = begin;
  est.fit_end = end;
  return est;
}

}  // namespace liyorke
