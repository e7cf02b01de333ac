// Copyright 2026 The liyorke Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>

#include "error.hpp"
#include "fractal.hpp"

using namespace liyorke;

namespace {

IfsSystem interval_ifs(std::vector<std::pair<double, double>> maps) {
  std::vector<Similitude> s;
  for (auto [c, t] : maps) s.emplace_back(c, Vec{1.0}, Vec{t});
  return IfsSystem(Box{{0.0}, {1.0}}, std::move(s));
}

IfsSystem cantor() { return interval_ifs({{1.0 / 3, 0.0}, {1.0 / 3, 2.0 / 3}}); }

// The tent's repeller system {x/4, 1 - x/4}.
IfsSystem tent_repeller() {
  return IfsSystem(Box{{0.0}, {1.0}}, {Similitude(0.25, {1.0}, {0.0}),
                                       Similitude(0.25, {-1.0}, {1.0})});
}

// Sierpinski-carpet-like corners in the plane with a rotation.
IfsSystem plane_ifs() {
  return IfsSystem(Box{{0.0, 0.0}, {1.0, 1.0}},
                   {Similitude(0.3, {1, 0, 0, 1}, {0, 0}),
                    Similitude(0.3, {0, -1, 1, 0}, {1.0, 0.0}),
                    Similitude(0.25, {-1, 0, 0, -1}, {1.0, 1.0})});
}

}  // namespace

TEST_CASE("moran dimension closed forms") {
  const double third[] = {1.0 / 3, 1.0 / 3};
  CHECK(moran_dimension(third).dimension == doctest::Approx(std::log(2.0) / std::log(3.0)).epsilon(1e-12));
  CHECK(moran_dimension(third).dimension == doctest::Approx(0.6309297536).epsilon(1e-10));
  const double half[] = {0.5};
  CHECK(moran_dimension(half).dimension == 0);
  const double golden[] = {0.5, 0.25};
  const double expected = -std::log2((std::sqrt(5.0) - 1) / 2);
  CHECK(moran_dimension(golden).dimension == doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected == doctest::Approx(0.6942419).epsilon(1e-7));
  const double four[] = {0.5, 0.5, 0.5, 0.5};
  CHECK(moran_dimension(four).dimension == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("moran rejects bad ratios") {
  for (double bad : {0.0, 1.0, -0.2, 1.5, std::nan("")}) {
    const double r[] = {0.3, bad};
    try {
      (void)moran_dimension(r);
      FAIL("expected InvalidRatio");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidRatio);
    }
  }
  CHECK_THROWS_AS(moran_dimension(std::span<const double>{}), Error);
}

TEST_CASE("moran residual and monotonicity on random lists") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.01, 0.6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> r(2 + trial % 5);
    for (auto& c : r) c = u(rng);
    const auto s = moran_dimension(r);
    CHECK(s.residual <= 1e-12);
    CHECK(s.dimension >= 0);
    auto bigger = r;
    bigger[0] = std::min(0.99, bigger[0] * 1.1);
    CHECK(moran_dimension(bigger).dimension > s.dimension);
  }
}

TEST_CASE("similitudes scale distances exactly") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-3, 3);
  const IfsSystem ifs = plane_ifs();
  for (const auto& s : ifs.maps()) {
    for (int i = 0; i < 1000; ++i) {
      const Vec x{u(rng), u(rng)}, y{u(rng), u(rng)};
      const double dxy = distance(x, y);
      CHECK(std::abs(distance(s(x), s(y)) - s.ratio() * dxy) <= 1e-12 * dxy + 1e-15);
    }
  }
}

TEST_CASE("similitude validation") {
  CHECK_THROWS_AS(Similitude(1.0, {1.0}, {0.0}), Error);
  CHECK_THROWS_AS(Similitude(0.5, {1.0, 0.1, 0.0, 1.0}, {0.0, 0.0}), Error);
  CHECK_THROWS_AS(Similitude(0.5, {1.0, 0.0}, {0.0}), Error);
  // image outside K
  CHECK_THROWS_AS(interval_ifs({{0.5, 0.7}}), Error);
}

TEST_CASE("separation gap") {
  CHECK(verify_separation(cantor()) == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(verify_separation(tent_repeller()) == doctest::Approx(0.5).epsilon(1e-15));
  try {
    (void)verify_separation(interval_ifs({{0.5, 0.0}, {0.5, 0.5}}));
    FAIL("expected Overlap");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Overlap);
  }
  CHECK(std::isinf(verify_separation(interval_ifs({{0.5, 0.0}}))));
}

TEST_CASE("coded points") {
  SUBCASE("cantor all ones") {
    const auto p = code_point(cantor(), std::vector<Digit>(20, 1));
    CHECK(p.center[0] == doctest::Approx(0.5 * std::pow(3.0, -20)));
    CHECK(p.radius == doctest::Approx(0.5 * std::pow(3.0, -20)).epsilon(1e-14));
  }
  SUBCASE("tent repeller fixed point") {
    const auto p = code_point(tent_repeller(), std::vector<Digit>(30, 2));
    CHECK(p.center[0] == doctest::Approx(0.8).epsilon(1e-15));
  }
  SUBCASE("first-level cylinder lies in its image") {
    const IfsSystem ifs = plane_ifs();
    for (Digit d = 1; d <= 3; ++d) {
      const auto p = code_point(ifs, std::vector<Digit>{d});
      const Box img = ifs.map(d).image(ifs.domain());
      for (std::size_t k = 0; k < 2; ++k) {
        CHECK(p.center[k] - img.lo[k] >= -1e-15);
        CHECK(img.hi[k] - p.center[k] >= -1e-15);
      }
    }
  }
  SUBCASE("first digit is outermost") {
    // S_1(S_2(1/2)) = (2/3 + 1/6) / 3
    const auto p = code_point(cantor(), std::vector<Digit>{1, 2});
    CHECK(p.center[0] == doctest::Approx((2.0 / 3 + 1.0 / 6) / 3).epsilon(1e-15));
  }
  CHECK_THROWS_AS(code_point(cantor(), std::vector<Digit>{1, 3}), Error);
  CHECK_THROWS_AS(code_point(cantor(), std::vector<Digit>{}), Error);
}

TEST_CASE("cylinder balls nest") {
  std::mt19937_64 rng(4);
  const IfsSystem ifs = plane_ifs();
  std::uniform_int_distribution<int> digit(1, 3);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Digit> prefix(1 + trial % 12);
    for (auto& d : prefix) d = digit(rng);
    const auto parent = code_point(ifs, prefix);
    for (Digit d = 1; d <= 3; ++d) {
      auto longer = prefix;
      longer.push_back(d);
      const auto child = code_point(ifs, longer);
      CHECK(distance(child.center, parent.center) + child.radius <= parent.radius + 1e-14);
    }
  }
}

TEST_CASE("separation transports to deeper cylinders") {
  std::mt19937_64 rng(6);
  const IfsSystem ifs = cantor();
  const double d = verify_separation(ifs);
  std::uniform_int_distribution<int> digit(1, 2);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Digit> common(trial % 10);
    for (auto& x : common) x = digit(rng);
    auto a = common, b = common;
    a.push_back(1);
    b.push_back(2);
    for (int k = 0; k < 20; ++k) {
      a.push_back(digit(rng));
      b.push_back(digit(rng));
    }
    const auto pa = code_point(ifs, a), pb = code_point(ifs, b);
    const double scale = std::pow(1.0 / 3, static_cast<double>(common.size()));
    CHECK(distance(pa.center, pb.center) - pa.radius - pb.radius >= d * scale - pa.radius - pb.radius - 1e-15);
    CHECK(distance(pa.center, pb.center) >= d * scale * (1 - 1e-12));
  }
}

TEST_CASE("attractor sampler") {
  SUBCASE("uniform marginals for equal ratios") {
    const auto pts = sample_attractor(cantor(), {100000, 3, 99, 2});
    std::size_t ones = 0;
    for (const auto& p : pts) ones += p.prefix[0] == 1;
    const double e = 50000;
    const double chi2 = 2 * (ones - e) * (ones - e) / e;
    CHECK(chi2 < 6.635);  // chi-square, 1 dof, alpha 0.01
  }
  SUBCASE("golden weights") {
    const auto pts = sample_attractor(interval_ifs({{0.5, 0.0}, {0.25, 0.75}}), {100000, 2, 5, 0});
    std::size_t ones = 0;
    for (const auto& p : pts) ones += p.prefix[0] == 1;
    CHECK(ones / 1e5 == doctest::Approx((std::sqrt(5.0) - 1) / 2).epsilon(0.01));
  }
  SUBCASE("single shallow point") {
    const auto pts = sample_attractor(cantor(), {1, 1, 123, 1});
    REQUIRE(pts.size() == 1);
    const double x = pts[0].center[0];
    CHECK((x <= 1.0 / 3 || x >= 2.0 / 3));
  }
  SUBCASE("deterministic and thread independent") {
    const auto a = sample_attractor_cloud(plane_ifs(), {10000, 12, 42, 1});
    const auto b = sample_attractor_cloud(plane_ifs(), {10000, 12, 42, 4});
    const auto c = sample_attractor_cloud(plane_ifs(), {10000, 12, 43, 4});
    CHECK(a.coords == b.coords);
    CHECK(a.coords != c.coords);
    const auto pts = sample_attractor(plane_ifs(), {10000, 12, 42, 3});
    for (std::size_t i = 0; i < pts.size(); i += 997) {
      CHECK(pts[i].center[0] == a.point(i)[0]);
      CHECK(pts[i].center[1] == a.point(i)[1]);
    }
  }
  CHECK_THROWS_AS(sample_attractor(cantor(), {0, 3, 1, 1}), Error);
}

TEST_CASE("restricted sampler") {
  std::mt19937_64 rng(8);
  std::vector<Digit> sd(40);
  for (auto& d : sd) d = 1 + static_cast<int>(rng() % 2);
  const auto base = SymbolSequence::one_sided(2, sd);
  SUBCASE("every prefix lies in the subset") {
    const auto pts = sample_restricted(cantor(), base, GapSequence::quadratic(), {2000, 40, 3, 2});
    for (const auto& p : pts) {
      CHECK_NOTHROW(extract_filler(SymbolSequence::one_sided(2, p.prefix), base, GapSequence::quadratic()));
    }
  }
  SUBCASE("zero gaps leave no randomness") {
    const auto cloud = sample_restricted_cloud(cantor(), base, GapSequence::constant(0), {500, 40, 3, 2});
    for (std::size_t i = 1; i < cloud.size(); ++i) CHECK(cloud.point(i)[0] == cloud.point(0)[0]);
  }
  SUBCASE("cloud matches coded points") {
    const auto pts = sample_restricted(cantor(), base, GapSequence::quadratic(), {3000, 40, 9, 1});
    const auto cloud = sample_restricted_cloud(cantor(), base, GapSequence::quadratic(), {3000, 40, 9, 3});
    for (std::size_t i = 0; i < pts.size(); i += 101) CHECK(pts[i].center[0] == cloud.point(i)[0]);
  }
  SUBCASE("short base") {
    try {
      (void)sample_restricted(cantor(), SymbolSequence::one_sided(2, {1, 2}), GapSequence::quadratic(), {5, 40, 1, 1});
      FAIL("expected InsufficientPrefix");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InsufficientPrefix);
    }
  }
}

TEST_CASE("pair sampler") {
  const auto pairs = sample_pair_set(cantor(), GapSequence::quadratic(), {4000, 30, 21, 2});
  const auto attractor = sample_attractor(cantor(), {4000, 30, 21, 2});
  std::size_t left_pairs = 0, left_attr = 0;
  for (const auto& p : pairs) {
    CHECK_NOTHROW(extract_filler(SymbolSequence::one_sided(2, p.partner.prefix),
                                 SymbolSequence::one_sided(2, p.base.prefix),
                                 GapSequence::quadratic()));
    left_pairs += p.base.center[0] < 0.5;
  }
  for (const auto& p : attractor) left_attr += p.center[0] < 0.5;
  // both marginals are Bernoulli(1/2) in the first digit
  CHECK(std::abs(static_cast<double>(left_pairs) - static_cast<double>(left_attr)) < 4 * std::sqrt(4000.0));
  const auto cloud = sample_pair_set_cloud(cantor(), GapSequence::quadratic(), {4000, 30, 21, 4});
  CHECK(cloud.dim == 2);
  for (std::size_t i = 0; i < pairs.size(); i += 173) {
    CHECK(cloud.point(i)[0] == pairs[i].base.center[0]);
    CHECK(cloud.point(i)[1] == pairs[i].partner.center[0]);
  }
  CHECK_THROWS_AS(sample_pair_set(interval_ifs({{0.5, 0.0}}), GapSequence::quadratic(), {5, 5, 1, 1}), Error);
}
