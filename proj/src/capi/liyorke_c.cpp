// Copyright 2026 The liyorke Authors.
// SPDX-License-Identifier: Apache-2.0

#include "liyorke/liyorke.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>

#include "analysis.hpp"
#include "error.hpp"
#include "fractal.hpp"
#include "serialize.hpp"
#include "symbolic.hpp"
#include "systems.hpp"

struct ly_sequence {
  liyorke::SymbolSequence value;
};
struct ly_gaps {
  liyorke::GapSequence value;
};
struct ly_ifs {
  liyorke::IfsSystem value;
};
struct ly_system {
  liyorke::SystemSpec spec;
  liyorke::SystemIfs ifs;
};
struct ly_cloud {
  liyorke::PointCloud value;
};
struct ly_estimate {
  liyorke::BoxCountEstimate value;
};
struct ly_profile {
  liyorke::LiYorkeProfile value;
};

namespace {

using namespace liyorke;

thread_local std::string last_error;

ly_status to_status(ErrorCode code) {
  // ErrorCode and ly_status list the same failures in the same order.
  return static_cast<ly_status>(static_cast<int>(code) + 1);
}

ly_status record(ly_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class Fn>
ly_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return LY_OK;
  } catch (const Error& e) {
    return record(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return record(LY_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return record(LY_INTERNAL, e.what());
  } catch (...) {
    return record(LY_INTERNAL, "unknown exception");
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) fail(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const Json& j, char** out) {
  require(out, "output");
  *out = copy_string(dump_canonical(j));
}

SamplerConfig sampler_config(const ly_sampler_config* c) {
  require(c, "sampler config");
  return {c->count, c->depth, c->seed, c->threads};
}

ly_verdict to_c(const LiYorkeVerdict& v) {
  ly_verdict out{};
  out.pass = v.pass ? 1 : 0;
  out.failure = static_cast<ly_failure>(v.failure);
  out.block = v.block;
  out.time = v.time;
  out.value = v.value;
  out.limit = v.limit;
  return out;
}

}  // namespace

extern "C" {

const char* ly_status_string(ly_status status) {
  if (status == LY_OK) return "ok";
  if (status == LY_INTERNAL) return "internal error";
  if (status > LY_OK && status < LY_INTERNAL) {
    return to_string(static_cast<ErrorCode>(static_cast<int>(status) - 1));
  }
  return "unknown status";
}

const char* ly_last_error(void) { return last_error.c_str(); }

void ly_string_free(char* s) { std::free(s); }

ly_status ly_json_canonical(const char* json, char** out) {
  return guarded([&] {
    require(json, "json");
    emit(parse_json_text(json), out);
  });
}

// ---- sequences

ly_status ly_sequence_one_sided(int m, const int* digits, size_t n, ly_sequence** out) {
  return guarded([&] {
    require(out, "output");
    if (n > 0) require(digits, "digits");
    *out = new ly_sequence{SymbolSequence::one_sided(m, std::vector<Digit>(digits, digits + n))};
  });
}

ly_status ly_sequence_two_sided(int m, const int* past, size_t past_len, const int* future,
                                size_t future_len, ly_sequence** out) {
  return guarded([&] {
    require(out, "output");
    if (past_len > 0) require(past, "past");
    if (future_len > 0) require(future, "future");
    *out = new ly_sequence{SymbolSequence::two_sided(
        m, std::vector<Digit>(past, past + past_len),
        std::vector<Digit>(future, future + future_len))};
  });
}

ly_status ly_sequence_random(int two_sided, int m, size_t past_len, size_t future_len,
                             uint64_t seed, ly_sequence** out) {
  return guarded([&] {
    require(out, "output");
    *out = new ly_sequence{
        random_sequence(two_sided ? Side::Two : Side::One, m, past_len, future_len, seed)};
  });
}

ly_status ly_sequence_from_json(const char* json, ly_sequence** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "output");
    *out = new ly_sequence{sequence_from_json(parse_json_text(json))};
  });
}

ly_status ly_sequence_to_json(const ly_sequence* seq, char** out) {
  return guarded([&] {
    require(seq, "sequence");
    emit(to_json(seq->value), out);
  });
}

void ly_sequence_free(ly_sequence* seq) { delete seq; }

int ly_sequence_alphabet(const ly_sequence* seq) { return seq ? seq->value.alphabet_size() : 0; }
int ly_sequence_two_sided_p(const ly_sequence* seq) {
  return seq && seq->value.side() == Side::Two ? 1 : 0;
}
size_t ly_sequence_size(const ly_sequence* seq) { return seq ? seq->value.size() : 0; }
size_t ly_sequence_past_size(const ly_sequence* seq) { return seq ? seq->value.past_size() : 0; }
const int* ly_sequence_digits(const ly_sequence* seq) {
  return seq ? seq->value.digits().data() : nullptr;
}
const int* ly_sequence_past(const ly_sequence* seq) {
  return seq ? seq->value.past().data() : nullptr;
}

ly_status ly_shift(const ly_sequence* seq, size_t n, ly_sequence** out) {
  return guarded([&] {
    require(seq, "sequence");
    require(out, "output");
    *out = new ly_sequence{shift(seq->value, n)};
  });
}

ly_status ly_sequence_dist(const ly_sequence* s, const ly_sequence* t, double tail_bound,
                           double* lo, double* hi) {
  return guarded([&] {
    require(s, "s");
    require(t, "t");
    require(lo, "lo");
    require(hi, "hi");
    const DistanceBounds b = sequence_dist(s->value, t->value, tail_bound);
    *lo = static_cast<double>(b.lo);
    *hi = static_cast<double>(b.hi);
  });
}

// ---- gaps and partners

ly_status ly_gaps_parse(const char* rule, ly_gaps** out) {
  return guarded([&] {
    require(rule, "rule");
    require(out, "output");
    *out = new ly_gaps{parse_gap_rule(rule)};
  });
}

ly_status ly_gaps_from_json(const char* json, ly_gaps** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "output");
    *out = new ly_gaps{gaps_from_json(parse_json_text(json))};
  });
}

ly_status ly_gaps_to_json(const ly_gaps* gaps, char** out) {
  return guarded([&] {
    require(gaps, "gaps");
    emit(to_json(gaps->value), out);
  });
}

void ly_gaps_free(ly_gaps* gaps) { delete gaps; }

ly_status ly_gap_check(const ly_gaps* gaps, size_t max_terms, char** report_json) {
  return guarded([&] {
    require(gaps, "gaps");
    emit(to_json(check_gap_condition(gaps->value, max_terms)), report_json);
  });
}

ly_status ly_block_schedule(const ly_gaps* gaps, size_t block_count, char** schedule_json) {
  return guarded([&] {
    require(gaps, "gaps");
    emit(to_json(block_schedule(gaps->value, block_count)), schedule_json);
  });
}

ly_status ly_construct_partner(const ly_sequence* base, const ly_gaps* gaps,
                               const ly_sequence* filler, size_t length, ly_sequence** out) {
  return guarded([&] {
    require(base, "base");
    require(gaps, "gaps");
    require(filler, "filler");
    require(out, "output");
    *out = new ly_sequence{construct_partner(base->value, gaps->value, filler->value, length)};
  });
}

ly_status ly_extract_filler(const ly_sequence* partner, const ly_sequence* base,
                            const ly_gaps* gaps, ly_sequence** out) {
  return guarded([&] {
    require(partner, "partner");
    require(base, "base");
    require(gaps, "gaps");
    require(out, "output");
    *out = new ly_sequence{extract_filler(partner->value, base->value, gaps->value)};
  });
}

ly_status ly_eventually_equal_control(const ly_sequence* partner, const ly_sequence* base,
                                      const ly_gaps* gaps, size_t keep_blocks,
                                      ly_sequence** out) {
  return guarded([&] {
    require(partner, "partner");
    require(base, "base");
    require(gaps, "gaps");
    require(out, "output");
    *out = new ly_sequence{
        eventually_equal_control(partner->value, base->value, gaps->value, keep_blocks)};
  });
}

// ---- similitude systems

ly_status ly_moran(const double* ratios, size_t n, double* dimension, double* residual) {
  return guarded([&] {
    if (n > 0) require(ratios, "ratios");
    require(dimension, "dimension");
    const MoranSolution s = moran_dimension(std::span<const double>(ratios, n));
    *dimension = s.dimension;
    if (residual) *residual = s.residual;
  });
}

ly_status ly_ifs_from_json(const char* json, ly_ifs** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "output");
    *out = new ly_ifs{ifs_from_json(parse_json_text(json))};
  });
}

ly_status ly_ifs_to_json(const ly_ifs* ifs, char** out) {
  return guarded([&] {
    require(ifs, "ifs");
    emit(to_json(ifs->value), out);
  });
}

void ly_ifs_free(ly_ifs* ifs) { delete ifs; }
size_t ly_ifs_dim(const ly_ifs* ifs) { return ifs ? ifs->value.dim() : 0; }
size_t ly_ifs_size(const ly_ifs* ifs) { return ifs ? ifs->value.size() : 0; }

ly_status ly_ifs_moran(const ly_ifs* ifs, double* dimension, double* residual) {
  return guarded([&] {
    require(ifs, "ifs");
    require(dimension, "dimension");
    const MoranSolution s = moran_dimension(ifs->value.ratios());
    *dimension = s.dimension;
    if (residual) *residual = s.residual;
  });
}

ly_status ly_ifs_separation(const ly_ifs* ifs, double* gap) {
  return guarded([&] {
    require(ifs, "ifs");
    require(gap, "gap");
    *gap = verify_separation(ifs->value);
  });
}

ly_status ly_code_point(const ly_ifs* ifs, const int* prefix, size_t n, double* center,
                        double* radius) {
  return guarded([&] {
    require(ifs, "ifs");
    if (n > 0) require(prefix, "prefix");
    require(center, "center");
    const CodedPoint p = code_point(ifs->value, std::span<const Digit>(prefix, n));
    std::copy(p.center.begin(), p.center.end(), center);
    if (radius) *radius = p.radius;
  });
}

ly_status ly_sample_attractor(const ly_ifs* ifs, const ly_sampler_config* config,
                              ly_cloud** out) {
  return guarded([&] {
    require(ifs, "ifs");
    require(out, "output");
    *out = new ly_cloud{sample_attractor_cloud(ifs->value, sampler_config(config))};
  });
}

ly_status ly_sample_restricted(const ly_ifs* ifs, const ly_sequence* base, const ly_gaps* gaps,
                               const ly_sampler_config* config, ly_cloud** out) {
  return guarded([&] {
    require(ifs, "ifs");
    require(base, "base");
    require(gaps, "gaps");
    require(out, "output");
    *out = new ly_cloud{
        sample_restricted_cloud(ifs->value, base->value, gaps->value, sampler_config(config))};
  });
}

ly_status ly_sample_pairs(const ly_ifs* ifs, const ly_gaps* gaps,
                          const ly_sampler_config* config, ly_cloud** out) {
  return guarded([&] {
    require(ifs, "ifs");
    require(gaps, "gaps");
    require(out, "output");
    *out = new ly_cloud{sample_pair_set_cloud(ifs->value, gaps->value, sampler_config(config))};
  });
}

// ---- dynamical systems

ly_status ly_system_create(const char* kind, double a, double beta1, double beta2, double beta,
                           double tau, ly_system** out) {
  return guarded([&] {
    require(kind, "kind");
    require(out, "output");
    SystemSpec spec;
    switch (parse_system_kind(kind)) {
      case SystemKind::Tent:
        spec = SystemSpec::tent(a);
        break;
      case SystemKind::Baker:
        spec = SystemSpec::baker(beta1, beta2);
        break;
      case SystemKind::Horseshoe:
        spec = SystemSpec::horseshoe(beta, tau);
        break;
      case SystemKind::Solenoid:
        spec = SystemSpec::solenoid(beta1, beta2);
        break;
    }
    *out = new ly_system{spec, derive_ifs(spec)};
  });
}

ly_status ly_system_from_json(const char* json, ly_system** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "output");
    const SystemSpec spec = system_from_json(parse_json_text(json));
    *out = new ly_system{spec, derive_ifs(spec)};
  });
}

ly_status ly_system_to_json(const ly_system* sys, char** out) {
  return guarded([&] {
    require(sys, "system");
    emit(to_json(sys->spec), out);
  });
}

void ly_system_free(ly_system* sys) { delete sys; }
size_t ly_system_dim(const ly_system* sys) { return sys ? sys->spec.dim() : 0; }
int ly_system_two_sided_p(const ly_system* sys) {
  return sys && sys->spec.side() == Side::Two ? 1 : 0;
}

ly_status ly_system_ifs(const ly_system* sys, int which, ly_ifs** out) {
  return guarded([&] {
    require(sys, "system");
    require(out, "output");
    if (which == 0) {
      *out = new ly_ifs{sys->ifs.primary()};
    } else if (which == 1) {
      *out = new ly_ifs{sys->ifs.expanding_inverse};
    } else {
      fail(ErrorCode::InvalidArgument, "which must be 0 or 1");
    }
  });
}

ly_status ly_apply_map(const ly_system* sys, const double* point, double* out) {
  return guarded([&] {
    require(sys, "system");
    require(point, "point");
    require(out, "output");
    const Vec y = apply_map(sys->spec, std::span<const double>(point, sys->spec.dim()));
    std::copy(y.begin(), y.end(), out);
  });
}

ly_status ly_code_orbit_point(const ly_system* sys, const ly_sequence* seq, size_t n,
                              size_t depth, double* center, double* radius) {
  return guarded([&] {
    require(sys, "system");
    require(seq, "sequence");
    require(center, "center");
    const CodedPoint p = code_orbit_point(seq->value, sys->spec, sys->ifs, n, depth);
    std::copy(p.center.begin(), p.center.end(), center);
    if (radius) *radius = p.radius;
  });
}

ly_status ly_conjugacy_defect(const ly_system* sys, size_t trials, size_t prefix_len,
                              size_t depth, uint64_t seed, unsigned threads, double float_tol,
                              ly_conjugacy_report* out) {
  return guarded([&] {
    require(sys, "system");
    require(out, "output");
    const ConjugacyReport r =
        conjugacy_defect(sys->spec, trials, prefix_len, depth, seed, threads, float_tol);
    *out = {r.trials, r.max_defect, r.max_excess, r.violations};
  });
}

ly_status ly_sample_system(const ly_system* sys, const ly_sampler_config* config,
                           ly_cloud** out) {
  return guarded([&] {
    require(sys, "system");
    require(out, "output");
    *out = new ly_cloud{sample_invariant_set(sys->spec, sampler_config(config))};
  });
}

// ---- clouds and box counting

ly_status ly_cloud_create(size_t dim, const double* coords, size_t count, ly_cloud** out) {
  return guarded([&] {
    require(out, "output");
    if (dim == 0) fail(ErrorCode::InvalidArgument, "cloud dimension must be positive");
    if (count > 0) require(coords, "coords");
    PointCloud cloud;
    cloud.dim = dim;
    cloud.coords.assign(coords, coords + dim * count);
    *out = new ly_cloud{std::move(cloud)};
  });
}

void ly_cloud_free(ly_cloud* cloud) { delete cloud; }
size_t ly_cloud_dim(const ly_cloud* cloud) { return cloud ? cloud->value.dim : 0; }
size_t ly_cloud_size(const ly_cloud* cloud) { return cloud ? cloud->value.size() : 0; }
const double* ly_cloud_data(const ly_cloud* cloud) {
  return cloud ? cloud->value.coords.data() : nullptr;
}

ly_status ly_cloud_to_csv(const ly_cloud* cloud, char** out) {
  return guarded([&] {
    require(cloud, "cloud");
    require(out, "output");
    *out = copy_string(cloud_to_csv(cloud->value));
  });
}

ly_status ly_cloud_to_json(const ly_cloud* cloud, char** out) {
  return guarded([&] {
    require(cloud, "cloud");
    emit(to_json(cloud->value), out);
  });
}

ly_status ly_dyadic_ladder(double eps_max, double eps_min, double* out, size_t capacity,
                           size_t* count) {
  return guarded([&] {
    require(count, "count");
    const auto ladder = dyadic_ladder_between(eps_max, eps_min);
    if (ladder.size() > capacity) {
      fail(ErrorCode::InvalidArgument, "ladder has " + std::to_string(ladder.size()) +
                                           " rungs, buffer holds " + std::to_string(capacity));
    }
    if (!ladder.empty()) require(out, "output");
    std::copy(ladder.begin(), ladder.end(), out);
    *count = ladder.size();
  });
}

ly_status ly_box_count(const ly_cloud* cloud, const double* epsilons, size_t n,
                       unsigned threads, ly_estimate** out) {
  return guarded([&] {
    require(cloud, "cloud");
    require(out, "output");
    if (n > 0) require(epsilons, "epsilons");
    *out = new ly_estimate{
        box_count(cloud->value, std::span<const double>(epsilons, n), threads)};
  });
}

ly_status ly_dimension_fit(ly_estimate* estimate) {
  return guarded([&] {
    require(estimate, "estimate");
    estimate->value = dimension_fit(estimate->value);
  });
}

void ly_estimate_free(ly_estimate* estimate) { delete estimate; }
int ly_estimate_fitted(const ly_estimate* estimate) {
  return estimate && estimate->value.fitted ? 1 : 0;
}
size_t ly_estimate_size(const ly_estimate* estimate) {
  return estimate ? estimate->value.epsilons.size() : 0;
}

ly_status ly_estimate_slope(const ly_estimate* estimate, double* slope, double* stderr_slope) {
  return guarded([&] {
    require(estimate, "estimate");
    require(slope, "slope");
    if (!estimate->value.fitted) fail(ErrorCode::DegenerateFit, "estimate has no fit");
    *slope = estimate->value.slope;
    if (stderr_slope) *stderr_slope = estimate->value.stderr_slope;
  });
}

ly_status ly_estimate_row(const ly_estimate* estimate, size_t i, double* epsilon,
                          uint64_t* count) {
  return guarded([&] {
    require(estimate, "estimate");
    if (i >= estimate->value.epsilons.size()) fail(ErrorCode::InvalidArgument, "row out of range");
    if (epsilon) *epsilon = estimate->value.epsilons[i];
    if (count) *count = estimate->value.counts[i];
  });
}

ly_status ly_estimate_to_json(const ly_estimate* estimate, char** out) {
  return guarded([&] {
    require(estimate, "estimate");
    emit(to_json(estimate->value), out);
  });
}

ly_status ly_estimate_to_csv(const ly_estimate* estimate, char** out) {
  return guarded([&] {
    require(estimate, "estimate");
    require(out, "output");
    *out = copy_string(estimate_to_csv(estimate->value));
  });
}

// ---- Li-Yorke

ly_status ly_required_length(const ly_system* sys, const ly_gaps* gaps, size_t block_count,
                             size_t depth, size_t* length) {
  return guarded([&] {
    require(sys, "system");
    require(gaps, "gaps");
    require(length, "length");
    *length = required_length(sys->spec.side(), gaps->value, block_count, depth);
  });
}

ly_status ly_liyorke_profile(const ly_system* sys, const ly_sequence* base, const ly_gaps* gaps,
                             const ly_sequence* partner, size_t block_count, size_t depth,
                             int skip_membership, ly_profile** out) {
  return guarded([&] {
    require(sys, "system");
    require(base, "base");
    require(gaps, "gaps");
    require(partner, "partner");
    require(out, "output");
    *out = new ly_profile{liyorke_profile(sys->spec, base->value, gaps->value, partner->value,
                                          block_count, depth,
                                          skip_membership ? Membership::Skip
                                                          : Membership::Require)};
  });
}

void ly_profile_free(ly_profile* profile) { delete profile; }

ly_status ly_profile_to_json(const ly_profile* profile, char** out) {
  return guarded([&] {
    require(profile, "profile");
    emit(to_json(profile->value), out);
  });
}

ly_status ly_default_thresholds(const ly_system* sys, double* proximity_decay,
                                double* separation_floor) {
  return guarded([&] {
    require(sys, "system");
    require(proximity_decay, "proximity_decay");
    require(separation_floor, "separation_floor");
    const LiYorkeThresholds t = default_thresholds(sys->spec);
    *proximity_decay = t.proximity_decay;
    *separation_floor = t.separation_floor;
  });
}

const char* ly_failure_string(ly_failure failure) {
  return to_string(static_cast<LiYorkeVerdict::Failure>(failure));
}

ly_status ly_verify_liyorke(const ly_profile* profile, double proximity_decay,
                            double separation_floor, ly_verdict* out) {
  return guarded([&] {
    require(profile, "profile");
    require(out, "output");
    *out = to_c(verify_liyorke(profile->value, proximity_decay, separation_floor));
  });
}

ly_status ly_verdict_to_json(const ly_verdict* verdict, char** out) {
  return guarded([&] {
    require(verdict, "verdict");
    LiYorkeVerdict v;
    v.pass = verdict->pass != 0;
    v.failure = static_cast<LiYorkeVerdict::Failure>(verdict->failure);
    v.block = verdict->block;
    v.time = verdict->time;
    v.value = verdict->value;
    v.limit = verdict->limit;
    emit(to_json(v), out);
  });
}

}  // extern "C"
