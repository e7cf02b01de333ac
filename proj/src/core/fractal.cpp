// Copyright 2026 The liyorke Authors.
// SPDX-License-Identifier: Apache-2.0

#include "fractal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "error.hpp"
#include "chunked.hpp"

namespace liyorke {

double norm(std::span<const double> v) noexcept {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double distance(std::span<const double> a, std::span<const double> b) noexcept {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

Vec Box::center() const {
  Vec c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = 0.5 * (lo[i] + hi[i]);
  return c;
}

double Box::diameter() const noexcept {
  double s = 0;
  for (std::size_t i = 0; i < dim(); ++i) s += (hi[i] - lo[i]) * (hi[i] - lo[i]);
  return std::sqrt(s);
}

bool Box::contains(const Box& inner, double tol) const noexcept {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (inner.lo[i] < lo[i] - tol || inner.hi[i] > hi[i] + tol) return false;
  }
  return true;
}

double box_distance(const Box& a, const Box& b) noexcept {
  double s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double gap = std::max({0.0, b.lo[i] - a.hi[i], a.lo[i] - b.hi[i]});
    s += gap * gap;
  }
  return std::sqrt(s);
}

Similitude::Similitude(double ratio, Vec orth, Vec translation)
    : ratio_(ratio), orth_(std::move(orth)), t_(std::move(translation)) {
  if (!(ratio_ > 0 && ratio_ < 1)) {
    fail(ErrorCode::InvalidRatio,
         "similitude ratio " + std::to_string(ratio_) + " is outside (0,1)");
  }
  const std::size_t w = t_.size();
  if (w == 0 || orth_.size() != w * w) {
    fail(ErrorCode::InvalidArgument,
         "orthogonal part must be a w*w matrix matching the translation");
  }
  for (double x : orth_) {
    if (!std::isfinite(x)) fail(ErrorCode::InvalidArgument, "non-finite matrix entry");
  }
  for (double x : t_) {
    if (!std::isfinite(x)) fail(ErrorCode::InvalidArgument, "non-finite translation");
  }
  for (std::size_t i = 0; i < w; ++i) {
    for (std::size_t j = 0; j < w; ++j) {
      double dot = 0;
      for (std::size_t k = 0; k < w; ++k) dot += orth_[k * w + i] * orth_[k * w + j];
      if (std::abs(dot - (i == j ? 1.0 : 0.0)) > 1e-9) {
        fail(ErrorCode::InvalidArgument, "linear part is not orthogonal");
      }
    }
  }
}

void Similitude::apply(std::span<const double> x, std::span<double> out) const noexcept {
  const std::size_t w = t_.size();
  for (std::size_t i = 0; i < w; ++i) {
    double acc = 0;
    for (std::size_t k = 0; k < w; ++k) acc += orth_[i * w + k] * x[k];
    out[i] = ratio_ * acc + t_[i];
  }
}

Vec Similitude::operator()(std::span<const double> x) const {
  Vec out(dim());
  apply(x, out);
  return out;
}

Box Similitude::image(const Box& box) const {
  const std::size_t w = dim();
  Box out{Vec(w), Vec(w)};
  for (std::size_t i = 0; i < w; ++i) {
    double lo = t_[i];
    double hi = t_[i];
    for (std::size_t k = 0; k < w; ++k) {
      const double a = ratio_ * orth_[i * w + k];
      lo += std::min(a * box.lo[k], a * box.hi[k]);
      hi += std::max(a * box.lo[k], a * box.hi[k]);
    }
    out.lo[i] = lo;
    out.hi[i] = hi;
  }
  return out;
}

IfsSystem::IfsSystem(Box domain, std::vector<Similitude> maps)
    : domain_(std::move(domain)), maps_(std::move(maps)) {
  const std::size_t w = domain_.dim();
  if (w == 0 || domain_.hi.size() != w) {
    fail(ErrorCode::InvalidArgument, "domain box needs matching lo/hi of dimension >= 1");
  }
  double scale = 1;
  for (std::size_t i = 0; i < w; ++i) {
    if (!std::isfinite(domain_.lo[i]) || !std::isfinite(domain_.hi[i]) ||
        !(domain_.lo[i] < domain_.hi[i])) {
      fail(ErrorCode::InvalidArgument, "domain box must have lo < hi on every axis");
    }
    scale = std::max({scale, std::abs(domain_.lo[i]), std::abs(domain_.hi[i])});
  }
  if (maps_.empty()) fail(ErrorCode::InvalidArgument, "an IFS needs at least one map");
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    if (maps_[i].dim() != w) {
      fail(ErrorCode::InvalidArgument,
           "map " + std::to_string(i + 1) + " has the wrong dimension");
    }
    if (!domain_.contains(maps_[i].image(domain_), 1e-12 * scale)) {
      fail(ErrorCode::InvalidArgument,
           "map " + std::to_string(i + 1) + " does not send K into K");
    }
  }
}

const Similitude& IfsSystem::map(Digit d) const {
  if (d < 1 || static_cast<std::size_t>(d) > maps_.size()) {
    fail(ErrorCode::InvalidDigit, "digit " + std::to_string(d) + " has no map");
  }
  return maps_[static_cast<std::size_t>(d - 1)];
}

Vec IfsSystem::ratios() const {
  Vec r;
  r.reserve(maps_.size());
  for (const auto& s : maps_) r.push_back(s.ratio());
  return r;
}

MoranSolution moran_dimension(std::span<const double> ratios) {
  if (ratios.empty()) fail(ErrorCode::InvalidRatio, "no ratios given");
  double cmax = 0;
  for (double c : ratios) {
    if (!(c > 0 && c < 1)) {
      fail(ErrorCode::InvalidRatio, "ratio " + std::to_string(c) + " is outside (0,1)");
    }
    cmax = std::max(cmax, c);
  }
  auto excess = [&](double d) {
    double s = 0;
    for (double c : ratios) s += std::pow(c, d);
    return s - 1.0;
  };
  // excess is strictly decreasing; m * cmax^D < 1 beyond log m / -log cmax.
  double lo = 0;
  double hi = std::log(static_cast<double>(ratios.size())) / -std::log(cmax) + 1.0;
  if (excess(lo) == 0) return {0.0, 0.0};
  for (int it = 0; it < 200 && hi - lo > 0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (excess(mid) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double rlo = std::abs(excess(lo));
  const double rhi = std::abs(excess(hi));
  return rlo <= rhi ? MoranSolution{lo, rlo} : MoranSolution{hi, rhi};
}

double verify_separation(const IfsSystem& ifs) {
  const std::size_t m = ifs.size();
  std::vector<Box> images;
  images.reserve(m);
  for (const auto& s : ifs.maps()) images.push_back(s.image(ifs.domain()));
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double d = box_distance(images[i], images[j]);
      if (!(d > 0)) {
        fail(ErrorCode::Overlap, "images of maps " + std::to_string(i + 1) + " and " +
                                     std::to_string(j + 1) + " are not separated");
      }
      gap = std::min(gap, d);
    }
  }
  return gap;
}

void code_center(const IfsSystem& ifs, std::span<const Digit> prefix,
                 std::span<double> out) noexcept {
  const std::size_t w = ifs.dim();
  const Box& k = ifs.domain();
  double buf_a[8];
  double buf_b[8];
  std::vector<double> heap;
  std::span<double> x(buf_a, w <= 8 ? w : 0);
  std::span<double> y(buf_b, w <= 8 ? w : 0);
  if (w > 8) {
    heap.resize(2 * w);
    x = {heap.data(), w};
    y = {heap.data() + w, w};
  }
  for (std::size_t i = 0; i < w; ++i) x[i] = 0.5 * (k.lo[i] + k.hi[i]);
  const auto maps = ifs.maps();
  for (std::size_t n = prefix.size(); n-- > 0;) {
    maps[static_cast<std::size_t>(prefix[n] - 1)].apply(x, y);
    std::swap(x, y);
  }
  std::copy(x.begin(), x.end(), out.begin());
}

double code_radius(const IfsSystem& ifs, std::span<const Digit> prefix) noexcept {
  const auto maps = ifs.maps();
  double r = 0.5 * ifs.domain().diameter();
  for (Digit d : prefix) r *= maps[static_cast<std::size_t>(d - 1)].ratio();
  return r;
}

CodedPoint code_point(const IfsSystem& ifs, std::span<const Digit> prefix) {
  if (prefix.empty()) fail(ErrorCode::InvalidArgument, "prefix must be non-empty");
  for (Digit d : prefix) (void)ifs.map(d);
  CodedPoint p;
  p.center.resize(ifs.dim());
  code_center(ifs, prefix, p.center);
  p.radius = code_radius(ifs, prefix);
  p.prefix.assign(prefix.begin(), prefix.end());
  return p;
}

Vec bernoulli_weights(const IfsSystem& ifs) {
  const Vec ratios = ifs.ratios();
  const double d = moran_dimension(ratios).dimension;
  Vec w;
  w.reserve(ratios.size());
  for (double c : ratios) w.push_back(std::pow(c, d));
  return w;
}

DigitSampler::DigitSampler(std::span<const double> weights) {
  if (weights.empty()) fail(ErrorCode::InvalidArgument, "no digit weights");
  double acc = 0;
  for (double w : weights) {
    if (!(w >= 0) || !std::isfinite(w)) {
      fail(ErrorCode::InvalidArgument, "digit weights must be finite and >= 0");
    }
    acc += w;
    cdf_.push_back(acc);
  }
  if (!(acc > 0)) fail(ErrorCode::InvalidArgument, "digit weights sum to zero");
  total_ = acc;
}

DigitSampler DigitSampler::uniform(int m) {
  const Vec w(static_cast<std::size_t>(m), 1.0);
  return DigitSampler(w);
}

namespace {

void check_config(const SamplerConfig& config) {
  if (config.count == 0) fail(ErrorCode::InvalidArgument, "count must be >= 1");
  if (config.depth == 0) fail(ErrorCode::InvalidArgument, "depth must be >= 1");
}

struct RestrictedPlan {
  PartnerLayout layout;
  std::vector<Digit> base;
  int m;
};

RestrictedPlan plan_restricted(const IfsSystem& ifs, const SymbolSequence& base,
                               const GapSequence& gaps, std::size_t depth) {
  if (base.alphabet_size() != static_cast<int>(ifs.size())) {
    fail(ErrorCode::InvalidArgument, "base alphabet does not match the number of maps");
  }
  RestrictedPlan plan{partner_layout(gaps, depth), {}, base.alphabet_size()};
  if (base.size() < plan.layout.last_constrained) {
    fail(ErrorCode::InsufficientPrefix,
         "base covers " + std::to_string(base.size()) + " digits, depth " +
             std::to_string(depth) + " needs " +
             std::to_string(plan.layout.last_constrained));
  }
  plan.base.assign(base.digits().begin(), base.digits().end());
  return plan;
}

}  // namespace

std::vector<CodedPoint> sample_attractor(const IfsSystem& ifs,
                                         const SamplerConfig& config) {
  check_config(config);
  const DigitSampler sampler(bernoulli_weights(ifs));
  std::vector<CodedPoint> out(config.count);
  run_chunks(config.count, config.seed, config.threads, [&] {
    return [&](Engine& engine, std::size_t i) {
      std::vector<Digit> digits(config.depth);
      sampler.fill(engine, digits);
      out[i] = code_point(ifs, digits);
    };
  });
  return out;
}

PointCloud sample_attractor_cloud(const IfsSystem& ifs, const SamplerConfig& config) {
  check_config(config);
  const DigitSampler sampler(bernoulli_weights(ifs));
  const std::size_t w = ifs.dim();
  PointCloud cloud{w, std::vector<double>(config.count * w)};
  run_chunks(config.count, config.seed, config.threads, [&] {
    return [&, digits = std::vector<Digit>(config.depth)](Engine& engine,
                                                          std::size_t i) mutable {
      sampler.fill(engine, digits);
      code_center(ifs, digits, {cloud.coords.data() + i * w, w});
    };
  });
  return cloud;
}

std::vector<CodedPoint> sample_restricted(const IfsSystem& ifs,
                                          const SymbolSequence& base,
                                          const GapSequence& gaps,
                                          const SamplerConfig& config) {
  check_config(config);
  const RestrictedPlan plan = plan_restricted(ifs, base, gaps, config.depth);
  const DigitSampler sampler(bernoulli_weights(ifs));
  std::vector<CodedPoint> out(config.count);
  run_chunks(config.count, config.seed, config.threads, [&] {
    return [&](Engine& engine, std::size_t i) {
      std::vector<Digit> filler(plan.layout.free_count);
      std::vector<Digit> digits(config.depth);
      sampler.fill(engine, filler);
      fill_partner(plan.layout, plan.base, plan.m, filler, digits);
      out[i] = code_point(ifs, digits);
    };
  });
  return out;
}

PointCloud sample_restricted_cloud(const IfsSystem& ifs, const SymbolSequence& base,
                                   const GapSequence& gaps,
                                   const SamplerConfig& config) {
  check_config(config);
  const RestrictedPlan plan = plan_restricted(ifs, base, gaps, config.depth);
  const DigitSampler sampler(bernoulli_weights(ifs));
  const std::size_t w = ifs.dim();
  PointCloud cloud{w, std::vector<double>(config.count * w)};
  run_chunks(config.count, config.seed, config.threads, [&] {
    return [&, filler = std::vector<Digit>(plan.layout.free_count),
            digits = std::vector<Digit>(config.depth)](Engine& engine,
                                                      std::size_t i) mutable {
      sampler.fill(engine, filler);
      fill_partner(plan.layout, plan.base, plan.m, filler, digits);
      code_center(ifs, digits, {cloud.coords.data() + i * w, w});
    };
  });
  return cloud;
}

namespace {

void check_pair_alphabet(const IfsSystem& ifs) {
  if (ifs.size() < 2) {
    fail(ErrorCode::InvalidArgument, "pair sampling needs at least two maps");
  }
}

struct PairDraw {
  std::vector<Digit> base;
  std::vector<Digit> filler;
  std::vector<Digit> partner;
};

}  // namespace

std::vector<PairSample> sample_pair_set(const IfsSystem& ifs, const GapSequence& gaps,
                                        const SamplerConfig& config) {
  check_config(config);
  check_pair_alphabet(ifs);
  const PartnerLayout layout = partner_layout(gaps, config.depth);
  const DigitSampler sampler(bernoulli_weights(ifs));
  const int m = static_cast<int>(ifs.size());
  std::vector<PairSample> out(config.count);
  run_chunks(config.count, config.seed, config.threads, [&] {
    return [&](Engine& engine, std::size_t i) {
      PairDraw d{std::vector<Digit>(config.depth), std::vector<Digit>(layout.free_count),
                 std::vector<Digit>(config.depth)};
      sampler.fill(engine, d.base);
      sampler.fill(engine, d.filler);
      fill_partner(layout, d.base, m, d.filler, d.partner);
      out[i] = {code_point(ifs, d.base), code_point(ifs, d.partner)};
    };
  });
  return out;
}

PointCloud sample_pair_set_cloud(const IfsSystem& ifs, const GapSequence& gaps,
                                 const SamplerConfig& config) {
  check_config(config);
  check_pair_alphabet(ifs);
  const PartnerLayout layout = partner_layout(gaps, config.depth);
  const DigitSampler sampler(bernoulli_weights(ifs));
  const int m = static_cast<int>(ifs.size());
  const std::size_t w = ifs.dim();
  PointCloud cloud{2 * w, std::vector<double>(config.count * 2 * w)};
  run_chunks(config.count, config.seed, config.threads, [&] {
    return [&, d = PairDraw{std::vector<Digit>(config.depth),
                            std::vector<Digit>(layout.free_count),
                            std::vector<Digit>(config.depth)}](Engine& engine,
                                                              std::size_t i) mutable {
      sampler.fill(engine, d.base);
      sampler.fill(engine, d.filler);
      fill_partner(layout, d.base, m, d.filler, d.partner);
      double* row = cloud.coords.data() + i * 2 * w;
      code_center(ifs, d.base, {row, w});
      code_center(ifs, d.partner, {row + w, w});
    };
  });
  return cloud;
}

}  // namespace liyorke
