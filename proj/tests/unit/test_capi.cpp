// Copyright 2026 The liyorke Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <liyorke/liyorke.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "error.hpp"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  ly_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status codes follow the error enum") {
  using liyorke::ErrorCode;
  CHECK(LY_INVALID_ARGUMENT == static_cast<int>(ErrorCode::InvalidArgument) + 1);
  CHECK(LY_PARSE == static_cast<int>(ErrorCode::Parse) + 1);
  CHECK(LY_TOO_FEW_CHECKPOINTS == static_cast<int>(ErrorCode::TooFewCheckpoints) + 1);
  CHECK(std::string(ly_status_string(LY_OK)) == "ok");
  CHECK(std::string(ly_status_string(LY_OVERLAP)) == "overlap");
}

TEST_CASE("errors set the thread's last error") {
  const int digits[] = {1, 3};
  ly_sequence* seq = nullptr;
  CHECK(ly_sequence_one_sided(2, digits, 2, &seq) == LY_INVALID_DIGIT);
  CHECK(seq == nullptr);
  CHECK(std::strlen(ly_last_error()) > 0);
  CHECK(ly_sequence_one_sided(2, digits, 1, nullptr) == LY_INVALID_ARGUMENT);
  ly_sequence_free(nullptr);
  char* out = nullptr;
  CHECK(ly_json_canonical("{", &out) == LY_PARSE);
  CHECK(ly_json_canonical("{\"b\":1,\"a\":0.1}", &out) == LY_OK);
  CHECK(take(out) == "{\n  \"a\": 0.10000000000000001,\n  \"b\": 1\n}\n");
}

TEST_CASE("sequences through the C API") {
  const int past[] = {1, 2};
  const int fut[] = {2, 2, 1};
  ly_sequence* s = nullptr;
  REQUIRE(ly_sequence_two_sided(2, past, 2, fut, 3, &s) == LY_OK);
  CHECK(ly_sequence_two_sided_p(s) == 1);
  CHECK(ly_sequence_size(s) == 3);
  CHECK(ly_sequence_past_size(s) == 2);
  CHECK(ly_sequence_past(s)[1] == 2);
  ly_sequence* t = nullptr;
  REQUIRE(ly_shift(s, 1, &t) == LY_OK);
  CHECK(ly_sequence_past_size(t) == 3);
  CHECK(ly_sequence_digits(t)[0] == 2);
  char* json = nullptr;
  REQUIRE(ly_sequence_to_json(t, &json) == LY_OK);
  ly_sequence* u = nullptr;
  REQUIRE(ly_sequence_from_json(json, &u) == LY_OK);
  ly_string_free(json);
  CHECK(std::memcmp(ly_sequence_past(u), ly_sequence_past(t), 3 * sizeof(int)) == 0);

  ly_sequence* r1 = nullptr;
  ly_sequence* r2 = nullptr;
  REQUIRE(ly_sequence_random(0, 3, 0, 50, 9, &r1) == LY_OK);
  REQUIRE(ly_sequence_random(0, 3, 0, 50, 9, &r2) == LY_OK);
  double lo = -1, hi = -1;
  CHECK(ly_sequence_dist(r1, r2, 1e-30, &lo, &hi) == LY_INSUFFICIENT_PREFIX);
  REQUIRE(ly_sequence_dist(r1, r2, 1e-12, &lo, &hi) == LY_OK);
  CHECK(lo == 0);
  CHECK(ly_sequence_dist(r1, s, 1e-3, &lo, &hi) == LY_INVALID_ARGUMENT);
  for (auto* p : {s, t, u, r1, r2}) ly_sequence_free(p);
}

TEST_CASE("partner construction and extraction round trip") {
  ly_gaps* gaps = nullptr;
  REQUIRE(ly_gaps_parse("quadratic", &gaps) == LY_OK);
  ly_sequence* base = nullptr;
  ly_sequence* filler = nullptr;
  REQUIRE(ly_sequence_random(0, 2, 0, 200, 1, &base) == LY_OK);
  REQUIRE(ly_sequence_random(0, 2, 0, 200, 2, &filler) == LY_OK);
  ly_sequence* partner = nullptr;
  REQUIRE(ly_construct_partner(base, gaps, filler, 120, &partner) == LY_OK);
  CHECK(ly_sequence_size(partner) == 120);
  ly_sequence* back = nullptr;
  REQUIRE(ly_extract_filler(partner, base, gaps, &back) == LY_OK);
  REQUIRE(ly_sequence_size(back) > 0);
  CHECK(std::memcmp(ly_sequence_digits(back), ly_sequence_digits(filler),
                    ly_sequence_size(back) * sizeof(int)) == 0);
  CHECK(ly_extract_filler(base, base, gaps, &back) == LY_NOT_IN_SUBSET);

  char* report = nullptr;
  REQUIRE(ly_gap_check(gaps, 100, &report) == LY_OK);
  CHECK(take(report).find("\"verdict\": \"pass\"") != std::string::npos);
  CHECK(ly_gap_check(gaps, 5, &report) == LY_INVALID_ARGUMENT);
  char* schedule = nullptr;
  REQUIRE(ly_block_schedule(gaps, 3, &schedule) == LY_OK);
  CHECK(take(schedule).find("\"start\": 11") != std::string::npos);

  for (auto* p : {base, filler, partner, back}) ly_sequence_free(p);
  ly_gaps_free(gaps);
}

TEST_CASE("IFS through the C API") {
  ly_ifs* ifs = nullptr;
  REQUIRE(ly_ifs_from_json(
              R"({"K": [[0, 1]], "maps": [{"ratio": 0.3333333333333333}, {"ratio": 0.3333333333333333, "t": [0.6666666666666666]}]})",
              &ifs) == LY_OK);
  double d = 0, res = 1;
  REQUIRE(ly_ifs_moran(ifs, &d, &res) == LY_OK);
  CHECK(d == doctest::Approx(std::log(2.0) / std::log(3.0)).epsilon(1e-12));
  double gap = 0;
  REQUIRE(ly_ifs_separation(ifs, &gap) == LY_OK);
  CHECK(gap == doctest::Approx(1.0 / 3));
  const int prefix[] = {2, 1};
  double center = 0, radius = 0;
  REQUIRE(ly_code_point(ifs, prefix, 2, &center, &radius) == LY_OK);
  CHECK(center == doctest::Approx(2.0 / 3 + 1.0 / 18));
  CHECK(radius == doctest::Approx(1.0 / 18));

  ly_sampler_config cfg{5000, 20, 3, 2};
  ly_cloud* cloud = nullptr;
  REQUIRE(ly_sample_attractor(ifs, &cfg, &cloud) == LY_OK);
  CHECK(ly_cloud_size(cloud) == 5000);
  ly_cloud* pairs = nullptr;
  ly_gaps* gaps = nullptr;
  REQUIRE(ly_gaps_parse("linear", &gaps) == LY_OK);
  REQUIRE(ly_sample_pairs(ifs, gaps, &cfg, &pairs) == LY_OK);
  CHECK(ly_cloud_dim(pairs) == 2);

  ly_ifs* overlapping = nullptr;
  REQUIRE(ly_ifs_from_json(
              R"({"K": [[0, 1]], "maps": [{"ratio": 0.5}, {"ratio": 0.5, "t": [0.5]}]})",
              &overlapping) == LY_OK);
  CHECK(ly_ifs_separation(overlapping, &gap) == LY_OVERLAP);
  CHECK(ly_ifs_from_json("{\"K\": 1}", &overlapping) == LY_PARSE);

  ly_cloud_free(cloud);
  ly_cloud_free(pairs);
  ly_gaps_free(gaps);
  ly_ifs_free(ifs);
  ly_ifs_free(overlapping);
}

TEST_CASE("box counting through the C API") {
  std::vector<double> coords(4096);
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = (i + 0.5) / coords.size();
  ly_cloud* cloud = nullptr;
  REQUIRE(ly_cloud_create(1, coords.data(), coords.size(), &cloud) == LY_OK);
  double eps[16];
  std::size_t n = 0;
  REQUIRE(ly_dyadic_ladder(0.125, 1.0 / 512, eps, 16, &n) == LY_OK);
  CHECK(n == 7);
  ly_estimate* est = nullptr;
  REQUIRE(ly_box_count(cloud, eps, n, 1, &est) == LY_OK);
  double e = 0;
  uint64_t count = 0;
  REQUIRE(ly_estimate_row(est, 6, &e, &count) == LY_OK);
  CHECK(count == 512);
  CHECK(ly_estimate_fitted(est) == 0);
  REQUIRE(ly_dimension_fit(est) == LY_OK);
  double slope = 0, se = 1;
  REQUIRE(ly_estimate_slope(est, &slope, &se) == LY_OK);
  CHECK(slope == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ly_estimate_row(est, 7, &e, &count) == LY_INVALID_ARGUMENT);
  ly_estimate_free(est);

  const double single[] = {0.3};
  ly_cloud* one = nullptr;
  REQUIRE(ly_cloud_create(1, single, 1, &one) == LY_OK);
  REQUIRE(ly_box_count(one, eps, n, 1, &est) == LY_OK);
  CHECK(ly_dimension_fit(est) == LY_DEGENERATE_FIT);
  CHECK(ly_estimate_slope(est, &slope, &se) == LY_DEGENERATE_FIT);
  ly_estimate_free(est);
  ly_cloud_free(one);
  ly_cloud_free(cloud);
}

TEST_CASE("Li-Yorke verification through the C API") {
  ly_system* sys = nullptr;
  REQUIRE(ly_system_create("baker", 0, 1.0 / 3, 1.0 / 3, 0, 0, &sys) == LY_OK);
  CHECK(ly_system_two_sided_p(sys) == 1);
  CHECK(ly_system_dim(sys) == 2);
  ly_gaps* gaps = nullptr;
  REQUIRE(ly_gaps_parse("quadratic", &gaps) == LY_OK);
  std::size_t len = 0;
  REQUIRE(ly_required_length(sys, gaps, 8, 20, &len) == LY_OK);
  ly_sequence* base = nullptr;
  ly_sequence* filler = nullptr;
  REQUIRE(ly_sequence_random(1, 2, 40, len, 4, &base) == LY_OK);
  REQUIRE(ly_sequence_random(1, 2, 40, len, 5, &filler) == LY_OK);
  ly_sequence* partner = nullptr;
  REQUIRE(ly_construct_partner(base, gaps, filler, len, &partner) == LY_OK);
  ly_profile* profile = nullptr;
  REQUIRE(ly_liyorke_profile(sys, base, gaps, partner, 8, 20, 0, &profile) == LY_OK);
  double decay = 0, floor = 0;
  REQUIRE(ly_default_thresholds(sys, &decay, &floor) == LY_OK);
  ly_verdict v{};
  REQUIRE(ly_verify_liyorke(profile, decay, floor, &v) == LY_OK);
  CHECK(v.pass == 1);
  CHECK(v.failure == LY_FAIL_NONE);
  ly_profile_free(profile);

  ly_profile* self = nullptr;
  REQUIRE(ly_liyorke_profile(sys, base, gaps, base, 8, 20, 1, &self) == LY_OK);
  REQUIRE(ly_verify_liyorke(self, decay, floor, &v) == LY_OK);
  CHECK(v.pass == 0);
  CHECK(v.failure == LY_FAIL_SEPARATION);
  CHECK(std::string(ly_failure_string(v.failure)) == "separation");
  char* json = nullptr;
  REQUIRE(ly_verdict_to_json(&v, &json) == LY_OK);
  CHECK(take(json).find("\"witness\"") != std::string::npos);
  CHECK(ly_liyorke_profile(sys, base, gaps, base, 8, 20, 0, &self) == LY_NOT_IN_SUBSET);
  ly_profile_free(self);

  ly_conjugacy_report rep{};
  REQUIRE(ly_conjugacy_defect(sys, 200, 31, 30, 1, 1, 1e-10, &rep) == LY_OK);
  CHECK(rep.violations == 0);
  const double pt[] = {0.2, 0.6};
  double img[2];
  REQUIRE(ly_apply_map(sys, pt, img) == LY_OK);
  CHECK(img[0] == doctest::Approx(1 - 1.0 / 3 + 0.2 / 3));
  CHECK(img[1] == doctest::Approx(0.2));

  ly_system* bad = nullptr;
  CHECK(ly_system_create("henon", 0, 0, 0, 0, 0, &bad) == LY_INVALID_ARGUMENT);
  CHECK(ly_system_create("tent", 0.9, 0, 0, 0, 0, &bad) == LY_PARAMETER_OUT_OF_RANGE);

  for (auto* p : {base, filler, partner}) ly_sequence_free(p);
  ly_gaps_free(gaps);
  ly_system_free(sys);
}
