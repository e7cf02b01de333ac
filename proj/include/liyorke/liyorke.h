/* Copyright 2026 The liyorke Authors.
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to liyorke: symbolic Li-Yorke pairs, self-similar codings of
 * the tent, baker, horseshoe and solenoid systems, and box-counting
 * dimension estimates.
 *
 * Conventions:
 *   - Every function returns ly_status. Outputs go through pointer
 *     arguments and are only written on LY_OK.
 *   - Objects are opaque handles released by their ly_*_free function;
 *     freeing NULL is a no-op.
 *   - Strings returned through char** are owned by the caller and released
 *     with ly_string_free.
 *   - ly_last_error() describes the most recent failure on the calling
 *     thread.
 *   - Handles are immutable after creation except ly_estimate, which
 *     ly_dimension_fit fills in. Immutable handles may be shared across
 *     threads.
 */
#ifndef LIYORKE_LIYORKE_H
#define LIYORKE_LIYORKE_H

#include <stddef.h>
#include <stdint.h>

#if defined(LIYORKE_BUILDING)
#define LY_API __attribute__((visibility("default")))
#else
#define LY_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ly_status {
  LY_OK = 0,
  LY_INVALID_ARGUMENT,
  LY_INSUFFICIENT_PREFIX,
  LY_NOT_IN_SUBSET,
  LY_GENERATOR_EXHAUSTED,
  LY_INVALID_RATIO,
  LY_INVALID_DIGIT,
  LY_OVERLAP,
  LY_PARAMETER_OUT_OF_RANGE,
  LY_UNDEFINED_REGION,
  LY_OUT_OF_DOMAIN,
  LY_EMPTY_INPUT,
  LY_DEGENERATE_FIT,
  LY_TOO_FEW_CHECKPOINTS,
  LY_PARSE,
  LY_INTERNAL
} ly_status;

typedef struct ly_sequence ly_sequence;
typedef struct ly_gaps ly_gaps;
typedef struct ly_ifs ly_ifs;
typedef struct ly_system ly_system;
typedef struct ly_cloud ly_cloud;
typedef struct ly_estimate ly_estimate;
typedef struct ly_profile ly_profile;

LY_API const char* ly_status_string(ly_status status);
LY_API const char* ly_last_error(void);
LY_API void ly_string_free(char* s);

/* Re-emits JSON text with sorted keys and 17-digit floats. */
LY_API ly_status ly_json_canonical(const char* json, char** out);

/* ---- sequences ---- */

LY_API ly_status ly_sequence_one_sided(int m, const int* digits, size_t n, ly_sequence** out);
LY_API ly_status ly_sequence_two_sided(int m, const int* past, size_t past_len,
                                       const int* future, size_t future_len, ly_sequence** out);
/* Uniform digits over {1..m}. two_sided != 0 also draws past_len past digits. */
LY_API ly_status ly_sequence_random(int two_sided, int m, size_t past_len, size_t future_len,
                                    uint64_t seed, ly_sequence** out);
LY_API ly_status ly_sequence_from_json(const char* json, ly_sequence** out);
LY_API ly_status ly_sequence_to_json(const ly_sequence* seq, char** out);
LY_API void ly_sequence_free(ly_sequence* seq);

LY_API int ly_sequence_alphabet(const ly_sequence* seq);
LY_API int ly_sequence_two_sided_p(const ly_sequence* seq);
LY_API size_t ly_sequence_size(const ly_sequence* seq);
LY_API size_t ly_sequence_past_size(const ly_sequence* seq);
/* Borrowed views, valid while the handle lives. */
LY_API const int* ly_sequence_digits(const ly_sequence* seq);
LY_API const int* ly_sequence_past(const ly_sequence* seq);

LY_API ly_status ly_shift(const ly_sequence* seq, size_t n, ly_sequence** out);
LY_API ly_status ly_sequence_dist(const ly_sequence* s, const ly_sequence* t, double tail_bound,
                                  double* lo, double* hi);

/* ---- gaps and the partner construction ---- */

/* zero | constant:c | linear | quadratic | affine:a,b | list:FILE */
LY_API ly_status ly_gaps_parse(const char* rule, ly_gaps** out);
LY_API ly_status ly_gaps_from_json(const char* json, ly_gaps** out);
LY_API ly_status ly_gaps_to_json(const ly_gaps* gaps, char** out);
LY_API void ly_gaps_free(ly_gaps* gaps);

/* JSON report {ratios, verdict, limit, limit_label}. max_terms >= 10. */
LY_API ly_status ly_gap_check(const ly_gaps* gaps, size_t max_terms, char** report_json);
LY_API ly_status ly_block_schedule(const ly_gaps* gaps, size_t block_count, char** schedule_json);

LY_API ly_status ly_construct_partner(const ly_sequence* base, const ly_gaps* gaps,
                                      const ly_sequence* filler, size_t length,
                                      ly_sequence** out);
LY_API ly_status ly_extract_filler(const ly_sequence* partner, const ly_sequence* base,
                                   const ly_gaps* gaps, ly_sequence** out);
/* Partner that agrees with base from block keep_blocks on. */
LY_API ly_status ly_eventually_equal_control(const ly_sequence* partner,
                                             const ly_sequence* base, const ly_gaps* gaps,
                                             size_t keep_blocks, ly_sequence** out);

/* ---- similitude systems ---- */

LY_API ly_status ly_moran(const double* ratios, size_t n, double* dimension, double* residual);

LY_API ly_status ly_ifs_from_json(const char* json, ly_ifs** out);
LY_API ly_status ly_ifs_to_json(const ly_ifs* ifs, char** out);
LY_API void ly_ifs_free(ly_ifs* ifs);
LY_API size_t ly_ifs_dim(const ly_ifs* ifs);
LY_API size_t ly_ifs_size(const ly_ifs* ifs);
LY_API ly_status ly_ifs_moran(const ly_ifs* ifs, double* dimension, double* residual);
/* LY_OVERLAP when two first-level images touch. */
LY_API ly_status ly_ifs_separation(const ly_ifs* ifs, double* gap);
/* center must hold ly_ifs_dim values. */
LY_API ly_status ly_code_point(const ly_ifs* ifs, const int* prefix, size_t n, double* center,
                               double* radius);

typedef struct ly_sampler_config {
  size_t count;
  size_t depth;
  uint64_t seed;
  unsigned threads; /* 0: hardware concurrency */
} ly_sampler_config;

LY_API ly_status ly_sample_attractor(const ly_ifs* ifs, const ly_sampler_config* config,
                                     ly_cloud** out);
LY_API ly_status ly_sample_restricted(const ly_ifs* ifs, const ly_sequence* base,
                                      const ly_gaps* gaps, const ly_sampler_config* config,
                                      ly_cloud** out);
/* Points of R^{2w}: base point, then partner point. */
LY_API ly_status ly_sample_pairs(const ly_ifs* ifs, const ly_gaps* gaps,
                                 const ly_sampler_config* config, ly_cloud** out);

/* ---- dynamical systems ---- */

/* kind: tent | baker | horseshoe | solenoid. Parameters the kind does not use
 * are ignored. */
LY_API ly_status ly_system_create(const char* kind, double a, double beta1, double beta2,
                                  double beta, double tau, ly_system** out);
LY_API ly_status ly_system_from_json(const char* json, ly_system** out);
LY_API ly_status ly_system_to_json(const ly_system* sys, char** out);
LY_API void ly_system_free(ly_system* sys);
LY_API size_t ly_system_dim(const ly_system* sys);
LY_API int ly_system_two_sided_p(const ly_system* sys);

/* which: 0 the strongly separated IFS carrying the pairs (contracting
 * direction, or the tent's repeller IFS), 1 the expanding-direction inverse
 * branches. */
LY_API ly_status ly_system_ifs(const ly_system* sys, int which, ly_ifs** out);

/* One branch-wise application of the map. point and out hold ly_system_dim
 * values. */
LY_API ly_status ly_apply_map(const ly_system* sys, const double* point, double* out);
/* f^n(pi(seq)) through the coding. center holds ly_system_dim values. */
LY_API ly_status ly_code_orbit_point(const ly_system* sys, const ly_sequence* seq, size_t n,
                                     size_t depth, double* center, double* radius);

typedef struct ly_conjugacy_report {
  size_t trials;
  double max_defect;
  double max_excess;
  size_t violations;
} ly_conjugacy_report;

LY_API ly_status ly_conjugacy_defect(const ly_system* sys, size_t trials, size_t prefix_len,
                                     size_t depth, uint64_t seed, unsigned threads,
                                     double float_tol, ly_conjugacy_report* out);
LY_API ly_status ly_sample_system(const ly_system* sys, const ly_sampler_config* config,
                                  ly_cloud** out);

/* ---- point clouds and box counting ---- */

LY_API ly_status ly_cloud_create(size_t dim, const double* coords, size_t count, ly_cloud** out);
LY_API void ly_cloud_free(ly_cloud* cloud);
LY_API size_t ly_cloud_dim(const ly_cloud* cloud);
LY_API size_t ly_cloud_size(const ly_cloud* cloud);
LY_API const double* ly_cloud_data(const ly_cloud* cloud);
LY_API ly_status ly_cloud_to_csv(const ly_cloud* cloud, char** out);
LY_API ly_status ly_cloud_to_json(const ly_cloud* cloud, char** out);

/* Writes up to capacity grid sizes 2^-j covering [eps_min, eps_max]. */
LY_API ly_status ly_dyadic_ladder(double eps_max, double eps_min, double* out, size_t capacity,
                                  size_t* count);

LY_API ly_status ly_box_count(const ly_cloud* cloud, const double* epsilons, size_t n,
                              unsigned threads, ly_estimate** out);
/* LY_DEGENERATE_FIT leaves the estimate unfitted. */
LY_API ly_status ly_dimension_fit(ly_estimate* estimate);
LY_API void ly_estimate_free(ly_estimate* estimate);
LY_API int ly_estimate_fitted(const ly_estimate* estimate);
LY_API ly_status ly_estimate_slope(const ly_estimate* estimate, double* slope, double* stderr_slope);
LY_API size_t ly_estimate_size(const ly_estimate* estimate);
LY_API ly_status ly_estimate_row(const ly_estimate* estimate, size_t i, double* epsilon,
                                 uint64_t* count);
LY_API ly_status ly_estimate_to_json(const ly_estimate* estimate, char** out);
LY_API ly_status ly_estimate_to_csv(const ly_estimate* estimate, char** out);

/* ---- Li-Yorke verification ---- */

LY_API ly_status ly_required_length(const ly_system* sys, const ly_gaps* gaps,
                                    size_t block_count, size_t depth, size_t* length);

/* skip_membership != 0 disables the partner membership check (negative
 * controls). */
LY_API ly_status ly_liyorke_profile(const ly_system* sys, const ly_sequence* base,
                                    const ly_gaps* gaps, const ly_sequence* partner,
                                    size_t block_count, size_t depth, int skip_membership,
                                    ly_profile** out);
LY_API void ly_profile_free(ly_profile* profile);
LY_API ly_status ly_profile_to_json(const ly_profile* profile, char** out);

LY_API ly_status ly_default_thresholds(const ly_system* sys, double* proximity_decay,
                                       double* separation_floor);

typedef enum ly_failure { LY_FAIL_NONE = 0, LY_FAIL_PROXIMITY, LY_FAIL_SEPARATION } ly_failure;

typedef struct ly_verdict {
  int pass;
  ly_failure failure;
  size_t block;
  size_t time;
  double value;
  double limit;
} ly_verdict;

LY_API const char* ly_failure_string(ly_failure failure);
LY_API ly_status ly_verify_liyorke(const ly_profile* profile, double proximity_decay,
                                   double separation_floor, ly_verdict* out);
LY_API ly_status ly_verdict_to_json(const ly_verdict* verdict, char** out);

#ifdef __cplusplus
}
#endif

#endif /* LIYORKE_LIYORKE_H */
