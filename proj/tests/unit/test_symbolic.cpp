// Copyright 2026 The liyorke Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "error.hpp"
#include "symbolic.hpp"

using namespace liyorke;

namespace {

std::vector<Digit> random_digits(std::mt19937_64& rng, int m, std::size_t n) {
  std::uniform_int_distribution<int> d(1, m);
  std::vector<Digit> out(n);
  for (auto& x : out) x = d(rng);
  return out;
}

// Independent partner builder: walks the blocks directly, one digit at a time.
std::vector<Digit> naive_partner(const std::vector<Digit>& s, int m,
                                 const std::vector<std::uint64_t>& n_free,
                                 const std::vector<Digit>& filler, std::size_t length) {
  std::vector<Digit> t;
  std::size_t f = 0;
  for (std::size_t i = 0; t.size() < length; ++i) {
    for (std::size_t j = 0; j <= i && t.size() < length; ++j) t.push_back(s[t.size()]);
    if (t.size() < length) t.push_back(s[t.size()] == m ? 1 : s[t.size()] + 1);
    for (std::uint64_t j = 0; j < n_free[i] && t.size() < length; ++j) t.push_back(filler[f++]);
  }
  return t;
}

}  // namespace

TEST_CASE("sequence construction validates digits") {
  CHECK_THROWS_AS(SymbolSequence::one_sided(2, {1, 3}), Error);
  CHECK_THROWS_AS(SymbolSequence::one_sided(1, {1}), Error);
  CHECK_THROWS_AS(SymbolSequence::two_sided(3, {0}, {1}), Error);
  try {
    SymbolSequence::one_sided(2, {1, 0});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidDigit);
  }
  const auto s = SymbolSequence::two_sided(3, {1, 2}, {3});
  CHECK(s.past_at(1) == 2);
  CHECK(s.past_at(2) == 1);
  CHECK(s.at(1) == 3);
}

TEST_CASE("shift") {
  const auto s = SymbolSequence::one_sided(2, {1, 2, 2, 1});
  CHECK(shift(s, 0) == s);
  CHECK(shift(s, 2) == SymbolSequence::one_sided(2, {2, 1}));
  CHECK(shift(SymbolSequence::two_sided(2, {}, {1, 2, 2}), 1) ==
        SymbolSequence::two_sided(2, {1}, {2, 2}));
  try {
    (void)shift(s, 5);
    FAIL("expected InsufficientPrefix");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InsufficientPrefix);
  }
}

TEST_CASE("cylinder membership") {
  const CylinderSet c{2, {1, 2}};
  CHECK(c.contains(SymbolSequence::one_sided(2, {1, 2, 1})));
  CHECK_FALSE(c.contains(SymbolSequence::one_sided(2, {2, 2, 1})));
}

TEST_CASE("sequence distance") {
  const std::vector<Digit> ones(30, 1);
  const auto s = SymbolSequence::one_sided(2, ones);
  SUBCASE("identical prefixes") {
    const auto b = sequence_dist(s, s, 1e-8L);
    CHECK(b.lo == 0);
    CHECK(b.hi <= 9.4e-9L);
  }
  SUBCASE("single differing digit") {
    auto d = ones;
    d[0] = 2;
    const auto b = sequence_dist(s, SymbolSequence::one_sided(2, d), 1e-8L);
    CHECK(b.lo == 0.5L);
  }
  SUBCASE("all digits differ, m = 3") {
    const std::size_t k = 25;
    const auto a = SymbolSequence::one_sided(3, std::vector<Digit>(k, 1));
    const auto b = SymbolSequence::one_sided(3, std::vector<Digit>(k, 3));
    long double expected = 0;
    for (std::size_t i = 1; i <= k; ++i) expected += 2.0L * std::pow(3.0L, -static_cast<long double>(i));
    const auto r = sequence_dist(a, b, 1e-10L);
    CHECK(static_cast<double>(r.lo) == doctest::Approx(static_cast<double>(expected)).epsilon(1e-15));
    CHECK(static_cast<double>(r.lo) == doctest::Approx(1.0).epsilon(1e-11));
  }
  SUBCASE("tail bound that cannot be met") {
    CHECK_THROWS_AS(sequence_dist(s, s, 1e-12L), Error);
  }
  SUBCASE("two-sided weights") {
    const auto a = SymbolSequence::two_sided(2, std::vector<Digit>(30, 1), std::vector<Digit>(30, 1));
    auto past = std::vector<Digit>(30, 1);
    past.back() = 2;  // s_{-1}
    const auto b = SymbolSequence::two_sided(2, past, std::vector<Digit>(30, 1));
    CHECK(sequence_dist(a, b, 1e-8L).lo == 0.5L);
  }
}

TEST_CASE("metric axioms on random prefixes") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 2 + trial % 3;
    const auto a = SymbolSequence::one_sided(m, random_digits(rng, m, 40));
    const auto b = SymbolSequence::one_sided(m, random_digits(rng, m, 40));
    const auto c = SymbolSequence::one_sided(m, random_digits(rng, m, 40));
    const auto ab = sequence_dist(a, b, 1e-6L);
    const auto ba = sequence_dist(b, a, 1e-6L);
    CHECK(ab.lo == ba.lo);
    CHECK(ab.hi == ba.hi);
    const auto ac = sequence_dist(a, c, 1e-6L);
    const auto cb = sequence_dist(c, b, 1e-6L);
    CHECK(ab.lo <= ac.lo + cb.lo + 1e-15L);
  }
}

TEST_CASE("block schedule") {
  SUBCASE("quadratic gaps") {
    const auto s = block_schedule(GapSequence::quadratic(), 3);
    REQUIRE(s.blocks.size() == 3);
    CHECK(s.blocks[0].start == 1);
    CHECK(s.blocks[0].mismatch_pos == 2);
    CHECK(s.blocks[0].free_count == 1);
    CHECK(s.blocks[1].start == 4);
    CHECK(s.blocks[2].start == 11);
  }
  SUBCASE("zero gaps") {
    const auto s = block_schedule(GapSequence::constant(0), 3);
    CHECK(s.blocks[1].start == 3);
    CHECK(s.blocks[2].start == 6);
    CHECK(s.span == 9);
  }
  SUBCASE("single block") {
    const auto s = block_schedule(GapSequence::linear(), 1);
    CHECK(s.blocks[0].start == 1);
    CHECK(s.blocks[0].match_len == 1);
    CHECK(s.blocks[0].mismatch_pos == 2);
  }
  SUBCASE("blocks tile") {
    const auto s = block_schedule(GapSequence::affine(2, 3), 20);
    for (std::size_t i = 1; i < s.blocks.size(); ++i) {
      CHECK(s.blocks[i].start == s.blocks[i - 1].next_start());
      CHECK(s.blocks[i].start > s.blocks[i - 1].start);
    }
  }
  CHECK_THROWS_AS(block_schedule(GapSequence::quadratic(), 0), Error);
  CHECK_THROWS_AS(block_schedule(GapSequence::list({1, 2}), 4), Error);
}

TEST_CASE("gap sequence rules") {
  CHECK(GapSequence::quadratic()(7) == 49);
  CHECK(GapSequence::linear()(7) == 7);
  CHECK(GapSequence::constant(5)(100) == 5);
  CHECK(GapSequence::affine(2, 3)(4) == 35);
  CHECK(GapSequence::list({4, 5})(2) == 5);
  try {
    (void)GapSequence::list({4, 5})(3);
    FAIL("expected GeneratorExhausted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GeneratorExhausted);
  }
}

TEST_CASE("partner construction examples") {
  SUBCASE("zero gaps, m = 2") {
    const auto s = SymbolSequence::one_sided(2, std::vector<Digit>(6, 1));
    const auto t = construct_partner(s, GapSequence::constant(0),
                                     SymbolSequence::one_sided(2, {}), 6);
    CHECK(t == SymbolSequence::one_sided(2, {1, 2, 1, 1, 2, 1}));
  }
  SUBCASE("one free digit, m = 3") {
    const auto s = SymbolSequence::one_sided(3, std::vector<Digit>(6, 2));
    const auto t = construct_partner(s, GapSequence::list({1, 4, 9}),
                                     SymbolSequence::one_sided(3, {1, 1}), 4);
    CHECK(t == SymbolSequence::one_sided(3, {2, 3, 1, 2}));
  }
  SUBCASE("mismatch digit wraps") {
    CHECK(mismatch_digit(3, 3) == 1);
    CHECK(mismatch_digit(1, 2) == 2);
    CHECK(mismatch_digit(2, 2) == 1);
  }
  SUBCASE("extraction with no free positions") {
    const auto s = SymbolSequence::one_sided(2, std::vector<Digit>(6, 1));
    const auto f = extract_filler(SymbolSequence::one_sided(2, {1, 2, 1, 1, 2}), s,
                                  GapSequence::constant(0));
    CHECK(f.size() == 0);
  }
  SUBCASE("missing mismatch") {
    const auto s = SymbolSequence::one_sided(2, std::vector<Digit>(6, 1));
    try {
      (void)extract_filler(SymbolSequence::one_sided(2, {1, 1, 1}), s, GapSequence::constant(0));
      FAIL("expected NotInSubset");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotInSubset);
    }
  }
  SUBCASE("short inputs") {
    const auto s = SymbolSequence::one_sided(2, {1, 1});
    try {
      (void)construct_partner(s, GapSequence::quadratic(), SymbolSequence::one_sided(2, {1}), 10);
      FAIL("expected InsufficientPrefix");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InsufficientPrefix);
    }
  }
}

TEST_CASE("partner matches an independent builder") {
  std::mt19937_64 rng(11);
  for (int m : {2, 3, 5}) {
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t length = 50 + trial * 7;
      const auto s = random_digits(rng, m, length);
      const auto f = random_digits(rng, m, length);
      std::vector<std::uint64_t> gaps(length);
      for (std::size_t n = 1; n <= length; ++n) gaps[n - 1] = n * n;
      const auto t = construct_partner(SymbolSequence::one_sided(m, s), GapSequence::quadratic(),
                                       SymbolSequence::one_sided(m, f), length);
      const auto expected = naive_partner(s, m, gaps, f, length);
      CHECK(std::vector<Digit>(t.digits().begin(), t.digits().end()) == expected);
    }
  }
}

TEST_CASE("construct and extract are inverse") {
  std::mt19937_64 rng(3);
  for (int m : {2, 3, 5}) {
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t length = 120;
      const auto base = SymbolSequence::one_sided(m, random_digits(rng, m, length));
      const auto gaps = trial % 2 ? GapSequence::quadratic() : GapSequence::affine(1, 2);
      const auto layout = partner_layout(gaps, length);
      const auto filler =
          SymbolSequence::one_sided(m, random_digits(rng, m, layout.free_count));
      const auto t = construct_partner(base, gaps, filler, length);
      CHECK(extract_filler(t, base, gaps) == filler);
      const auto again = construct_partner(base, gaps, extract_filler(t, base, gaps), length);
      CHECK(again == t);
    }
  }
}

TEST_CASE("distinct fillers give distinct partners") {
  std::mt19937_64 rng(5);
  const auto base = SymbolSequence::one_sided(2, random_digits(rng, 2, 80));
  auto f = random_digits(rng, 2, 80);
  const auto t1 = construct_partner(base, GapSequence::quadratic(), SymbolSequence::one_sided(2, f), 80);
  f[3] = f[3] == 1 ? 2 : 1;
  const auto t2 = construct_partner(base, GapSequence::quadratic(), SymbolSequence::one_sided(2, f), 80);
  CHECK_FALSE(t1 == t2);
}

TEST_CASE("two-sided partner keeps the filler's past") {
  const auto base = SymbolSequence::two_sided(2, {1, 1, 1}, std::vector<Digit>(20, 1));
  const auto filler = SymbolSequence::two_sided(2, {2, 1, 2}, std::vector<Digit>(20, 2));
  const auto t = construct_partner(base, GapSequence::quadratic(), filler, 20);
  CHECK(std::vector<Digit>(t.past().begin(), t.past().end()) == std::vector<Digit>{2, 1, 2});
  CHECK(extract_filler(t, base, GapSequence::quadratic()).past_size() == 3);
}

TEST_CASE("block pattern holds literally") {
  std::mt19937_64 rng(13);
  for (int m : {2, 3}) {
    const std::size_t length = 400;
    const auto s = random_digits(rng, m, length);
    const auto f = random_digits(rng, m, length);
    const auto t = construct_partner(SymbolSequence::one_sided(m, s), GapSequence::quadratic(),
                                     SymbolSequence::one_sided(m, f), length);
    for (const Block& b : block_schedule(GapSequence::quadratic(), 9).blocks) {
      if (b.mismatch_pos > length) break;
      for (std::size_t k = b.start; k < b.start + b.match_len; ++k) CHECK(t.at(k) == s[k - 1]);
      CHECK(t.at(b.mismatch_pos) != s[b.mismatch_pos - 1]);
    }
  }
}

TEST_CASE("finite proximity and separation bounds") {
  std::mt19937_64 rng(17);
  const auto gaps = GapSequence::quadratic();
  const std::size_t blocks = 15;
  const auto schedule = block_schedule(gaps, blocks);
  const std::size_t length = schedule.span + 64;
  for (int m : {2, 3}) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto s = SymbolSequence::one_sided(m, random_digits(rng, m, length));
      const auto f = SymbolSequence::one_sided(m, random_digits(rng, m, length));
      const auto t = construct_partner(s, gaps, f, length);
      for (std::size_t i = 0; i < blocks; ++i) {
        const Block& b = schedule.blocks[i];
        const auto near = sequence_dist(shift(s, b.start - 1), shift(t, b.start - 1), 1e-15L);
        CHECK(near.hi <= std::pow(static_cast<long double>(m), -static_cast<long double>(i)));
        const auto far = sequence_dist(shift(s, b.start + i), shift(t, b.start + i), 1e-15L);
        CHECK(far.lo >= 1.0L / m);
      }
    }
  }
}

TEST_CASE("gap condition") {
  SUBCASE("quadratic") {
    const auto r = check_gap_condition(GapSequence::quadratic(), 100);
    CHECK(r.verdict == GapVerdict::Pass);
    CHECK(r.limit == 0);
    CHECK(r.ratios[99] == doctest::Approx(100.0 * 100 * 6 / (100.0 * 101 * 201)).epsilon(1e-12));
    CHECK(r.ratios[99] == doctest::Approx(0.0295).epsilon(0.01));
  }
  SUBCASE("linear") {
    const auto r = check_gap_condition(GapSequence::linear(), 50);
    CHECK(r.verdict == GapVerdict::Fail);
    CHECK(r.limit == 2);
    for (std::size_t m = 1; m <= 50; ++m) {
      CHECK(r.ratios[m - 1] == doctest::Approx(2.0 * m / (m + 1.0)).epsilon(1e-12));
    }
  }
  SUBCASE("constant") {
    const auto r = check_gap_condition(GapSequence::constant(5), 40);
    CHECK(r.verdict == GapVerdict::Fail);
    CHECK(std::isinf(r.limit));
    CHECK(r.ratios[39] == doctest::Approx(40.0 / 5));
  }
  SUBCASE("all zero") {
    for (const auto& g : {GapSequence::constant(0), GapSequence::affine(0, 0),
                          GapSequence::list(std::vector<std::uint64_t>(12, 0))}) {
      const auto r = check_gap_condition(g, 12);
      CHECK(r.verdict == GapVerdict::Fail);
      CHECK(r.limit_label == "undefined");
      CHECK(std::isinf(r.ratios[0]));
    }
  }
  SUBCASE("explicit list") {
    const auto r = check_gap_condition(GapSequence::list({1, 4, 9, 16, 25, 36, 49, 64, 81, 100}), 10);
    CHECK(r.verdict == GapVerdict::Inconclusive);
    CHECK(r.ratios.size() == 10);
  }
  CHECK_THROWS_AS(check_gap_condition(GapSequence::quadratic(), 9), Error);
}
