// Copyright 2026 The liyorke Authors.
// SPDX-License-Identifier: Apache-2.0

#include "systems.hpp"

#include <algorithm>
#include <cmath>

#include "chunked.hpp"
#include "error.hpp"

namespace liyorke {

namespace {

bool open_unit(double x) { return x > 0 && x < 1; }

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::ParameterOutOfRange, what);
}

Box unit_box(std::size_t w) { return Box{Vec(w, 0.0), Vec(w, 1.0)}; }

// Two-map IFS on [0,1]^w: x -> c1 x and x -> c2 x + (1 - c2), both
// orientation preserving.
IfsSystem two_corner_ifs(std::size_t w, double c1, double c2) {
  Vec identity(w * w, 0.0);
  for (std::size_t i = 0; i < w; ++i) identity[i * w + i] = 1.0;
  return IfsSystem(unit_box(w), {Similitude(c1, identity, Vec(w, 0.0)),
                                 Similitude(c2, identity, Vec(w, 1.0 - c2))});
}

// x -> c x and x -> 1 - c x on [0,1].
IfsSystem folded_ifs(double c) {
  return IfsSystem(unit_box(1), {Similitude(c, {1.0}, {0.0}), Similitude(c, {-1.0}, {1.0})});
}

void check_unit_domain(std::span<const double> p, const char* name) {
  constexpr double tol = 1e-12;
  for (double x : p) {
    if (!(x >= -tol && x <= 1 + tol)) {
      fail(ErrorCode::OutOfDomain, std::string(name) + " is defined on [0,1]^w only");
    }
  }
}

}  // namespace

const char* to_string(SystemKind kind) noexcept {
  switch (kind) {
    case SystemKind::Tent:
      return "tent";
    case SystemKind::Baker:
      return "baker";
    case SystemKind::Horseshoe:
      return "horseshoe";
    case SystemKind::Solenoid:
      return "solenoid";
  }
  return "?";
}

SystemKind parse_system_kind(const std::string& name) {
  if (name == "tent") return SystemKind::Tent;
  if (name == "baker") return SystemKind::Baker;
  if (name == "horseshoe") return SystemKind::Horseshoe;
  if (name == "solenoid") return SystemKind::Solenoid;
  fail(ErrorCode::InvalidArgument, "unknown system kind '" + name + "'");
}

SystemSpec SystemSpec::tent(double a) {
  SystemSpec s;
  s.kind = SystemKind::Tent;
  s.a = a;
  s.validate();
  return s;
}

SystemSpec SystemSpec::baker(double beta1, double beta2) {
  SystemSpec s;
  s.kind = SystemKind::Baker;
  s.beta1 = beta1;
  s.beta2 = beta2;
  s.validate();
  return s;
}

SystemSpec SystemSpec::horseshoe(double beta, double tau) {
  SystemSpec s;
  s.kind = SystemKind::Horseshoe;
  s.beta = beta;
  s.tau = tau;
  s.validate();
  return s;
}

SystemSpec SystemSpec::solenoid(double beta1, double beta2) {
  SystemSpec s;
  s.kind = SystemKind::Solenoid;
  s.beta1 = beta1;
  s.beta2 = beta2;
  s.validate();
  return s;
}

void SystemSpec::validate() const {
  switch (kind) {
    case SystemKind::Tent:
      require(std::isfinite(a) && a > 1, "tent needs a > 1");
      break;
    case SystemKind::Baker:
    case SystemKind::Solenoid:
      require(open_unit(beta1) && open_unit(beta2),
              "beta1 and beta2 must lie in (0,1)");
      require(beta1 + beta2 < 1, "beta1 + beta2 must be < 1");
      break;
    case SystemKind::Horseshoe:
      require(beta > 0 && beta < 0.5, "horseshoe needs beta in (0,1/2)");
      require(std::isfinite(tau) && tau > 2, "horseshoe needs tau > 2");
      break;
  }
}

std::size_t SystemSpec::dim() const noexcept {
  switch (kind) {
    case SystemKind::Tent:
      return 1;
    case SystemKind::Baker:
    case SystemKind::Horseshoe:
      return 2;
    case SystemKind::Solenoid:
      return 3;
  }
  return 0;
}

Side SystemSpec::side() const noexcept {
  return kind == SystemKind::Tent ? Side::One : Side::Two;
}

SystemIfs derive_ifs(const SystemSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case SystemKind::Tent:
      return {folded_ifs(1.0 / (2.0 * spec.a)), std::nullopt};
    case SystemKind::Baker:
      return {two_corner_ifs(1, 0.5, 0.5), two_corner_ifs(1, spec.beta1, spec.beta2)};
    case SystemKind::Horseshoe:
      return {folded_ifs(1.0 / spec.tau), folded_ifs(spec.beta)};
    case SystemKind::Solenoid:
      return {two_corner_ifs(1, 0.5, 0.5), two_corner_ifs(2, spec.beta1, spec.beta2)};
  }
  fail(ErrorCode::InvalidArgument, "unknown system");
}

Vec apply_map(const SystemSpec& spec, std::span<const double> p) {
  if (p.size() != spec.dim()) {
    fail(ErrorCode::InvalidArgument, std::string(to_string(spec.kind)) + " expects a point of dimension " +
                                         std::to_string(spec.dim()));
  }
  switch (spec.kind) {
    case SystemKind::Tent:
      return {spec.a - 2.0 * spec.a * std::abs(p[0] - 0.5)};
    case SystemKind::Baker: {
      check_unit_domain(p, "baker map");
      const double x = p[0], y = p[1];
      if (y <= 0.5) return {spec.beta1 * x, 2.0 * y};
      return {1.0 - spec.beta2 + spec.beta2 * x, 2.0 * y - 1.0};
    }
    case SystemKind::Horseshoe: {
      check_unit_domain(p, "horseshoe");
      const double x = p[0], y = p[1];
      if (y <= 1.0 / spec.tau) return {spec.beta * x, spec.tau * y};
      if (y > 1.0 - 1.0 / spec.tau) return {1.0 - spec.beta * x, spec.tau - spec.tau * y};
      fail(ErrorCode::UndefinedRegion, "horseshoe is not defined on the middle strip");
    }
    case SystemKind::Solenoid: {
      check_unit_domain(p, "solenoid");
      const double x = p[0], y = p[1], z = p[2];
      if (z <= 0.5) return {spec.beta1 * x, spec.beta1 * y, 2.0 * z};
      const double b = spec.beta2;
      return {1.0 - b + b * x, 1.0 - b + b * y, 2.0 * z - 1.0};
    }
  }
  fail(ErrorCode::InvalidArgument, "unknown system");
}

double lipschitz_constant(const SystemSpec& spec) noexcept {
  switch (spec.kind) {
    case SystemKind::Tent:
      return 2.0 * spec.a;
    case SystemKind::Baker:
    case SystemKind::Solenoid:
      return 2.0;
    case SystemKind::Horseshoe:
      return spec.tau;
  }
  return 0;
}

CodedPoint code_orbit_point(const SymbolSequence& seq, const SystemSpec& spec,
                            const SystemIfs& ifs, std::size_t n, std::size_t depth) {
  if (depth == 0) fail(ErrorCode::InvalidArgument, "depth must be >= 1");
  if (seq.side() != spec.side()) {
    fail(ErrorCode::InvalidArgument,
         std::string(to_string(spec.kind)) + " is coded by " +
             (spec.side() == Side::One ? "one" : "two") + "-sided sequences");
  }
  if (seq.alphabet_size() != static_cast<int>(ifs.expanding_inverse.size())) {
    fail(ErrorCode::InvalidArgument, "sequence alphabet does not match the system");
  }
  if (seq.size() < n + depth) {
    fail(ErrorCode::InsufficientPrefix,
         "orbit time " + std::to_string(n) + " at depth " + std::to_string(depth) +
             " needs " + std::to_string(n + depth) + " future digits, have " +
             std::to_string(seq.size()));
  }
  const auto digits = seq.digits();
  const auto future = digits.subspan(n, depth);
  CodedPoint expanding = code_point(ifs.expanding_inverse, future);
  if (spec.side() == Side::One) return expanding;

  if (seq.past_size() + n < depth) {
    fail(ErrorCode::InsufficientPrefix,
         "orbit time " + std::to_string(n) + " at depth " + std::to_string(depth) +
             " needs " + std::to_string(depth - n) + " past digits, have " +
             std::to_string(seq.past_size()));
  }
  // Most recent first: s_n, ..., s_1, s_{-1}, s_{-2}, ...
  std::vector<Digit> recent(depth);
  const auto past = seq.past();
  for (std::size_t j = 1; j <= depth; ++j) {
    recent[j - 1] = j <= n ? digits[n - j] : past[past.size() - (j - n)];
  }
  CodedPoint contracting = code_point(*ifs.contracting, recent);

  CodedPoint out;
  out.center = std::move(contracting.center);
  out.center.insert(out.center.end(), expanding.center.begin(), expanding.center.end());
  out.radius = std::hypot(contracting.radius, expanding.radius);
  out.prefix = std::move(expanding.prefix);
  return out;
}

CodedPoint code_orbit_point(const SystemSpec& spec, const SymbolSequence& seq,
                            std::size_t n, std::size_t depth) {
  return code_orbit_point(seq, spec, derive_ifs(spec), n, depth);
}

SymbolSequence random_sequence(Side side, int m, std::size_t past_len,
                               std::size_t future_len, std::uint64_t seed) {
  Engine engine(derive_seed(seed, 0));
  const DigitSampler sampler = DigitSampler::uniform(m);
  std::vector<Digit> future(future_len);
  sampler.fill(engine, future);
  if (side == Side::One) return SymbolSequence::one_sided(m, std::move(future));
  std::vector<Digit> past(past_len);
  sampler.fill(engine, past);
  return SymbolSequence::two_sided(m, std::move(past), std::move(future));
}

ConjugacyReport conjugacy_defect(const SystemSpec& spec, std::size_t trials,
                                 std::size_t prefix_len, std::size_t depth,
                                 std::uint64_t seed, unsigned threads, double float_tol) {
  if (trials == 0) fail(ErrorCode::InvalidArgument, "trials must be >= 1");
  if (depth == 0 || prefix_len < depth + 1) {
    fail(ErrorCode::InvalidArgument, "conjugacy check needs prefix_len >= depth + 1");
  }
  const SystemIfs ifs = derive_ifs(spec);
  const double lip = lipschitz_constant(spec);
  const int m = static_cast<int>(ifs.expanding_inverse.size());
  const DigitSampler sampler = DigitSampler::uniform(m);
  const std::size_t past_len = spec.side() == Side::Two ? depth : 0;

  std::vector<double> defect(trials);
  std::vector<double> excess(trials);
  run_chunks(trials, seed, threads, [&] {
    return [&](Engine& engine, std::size_t i) {
      std::vector<Digit> future(prefix_len);
      std::vector<Digit> past(past_len);
      sampler.fill(engine, future);
      sampler.fill(engine, past);
      const SymbolSequence seq =
          spec.side() == Side::One
              ? SymbolSequence::one_sided(m, std::move(future))
              : SymbolSequence::two_sided(m, std::move(past), std::move(future));
      const CodedPoint now = code_orbit_point(seq, spec, ifs, 0, depth);
      const CodedPoint next = code_orbit_point(seq, spec, ifs, 1, depth);
      const Vec image = apply_map(spec, now.center);
      defect[i] = distance(image, next.center);
      const double bound = (1.0 + lip) * std::max(now.radius, next.radius) + float_tol;
      excess[i] = defect[i] - bound;
    };
  });

  ConjugacyReport report;
  report.trials = trials;
  report.max_defect = *std::max_element(defect.begin(), defect.end());
  report.max_excess = *std::max_element(excess.begin(), excess.end());
  report.violations = static_cast<std::size_t>(
      std::count_if(excess.begin(), excess.end(), [](double e) { return e > 0; }));
  return report;
}

PointCloud sample_invariant_set(const SystemSpec& spec, const SamplerConfig& config) {
  if (config.count == 0 || config.depth == 0) {
    fail(ErrorCode::InvalidArgument, "count and depth must be >= 1");
  }
  const SystemIfs ifs = derive_ifs(spec);
  const int m = static_cast<int>(ifs.expanding_inverse.size());
  const DigitSampler sampler = DigitSampler::uniform(m);
  const std::size_t w = spec.dim();
  const std::size_t past_len = spec.side() == Side::Two ? config.depth : 0;
  PointCloud cloud{w, std::vector<double>(config.count * w)};
  run_chunks(config.count, config.seed, config.threads, [&] {
    return [&](Engine& engine, std::size_t i) {
      std::vector<Digit> future(config.depth);
      std::vector<Digit> past(past_len);
      sampler.fill(engine, future);
      sampler.fill(engine, past);
      double* row = cloud.coords.data() + i * w;
      const std::size_t we = ifs.expanding_inverse.dim();
      code_center(ifs.expanding_inverse, future, {row + (w - we), we});
      if (ifs.contracting) code_center(*ifs.contracting, past, {row, w - we});
    };
  });
  return cloud;
}

}  // namespace liyorke
