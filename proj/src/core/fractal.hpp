// Copyright 2026 The liyorke Authors.
// SPDX-License-Identifier: Apache-2.0

// Similitude systems on R^w, the coding projection and samplers for the
// attractor, the restricted sets Lambda_N(s) and the pair set.
//
// Coding order. A prefix (a_1, ..., a_n) is mapped to
// S_{a_1} o S_{a_2} o ... o S_{a_n}(K): the first digit is applied last
// (outermost), which makes the images nested. The source text writes the
// composition the other way round; that sequence of sets is not nested.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "symbolic.hpp"

namespace liyorke {

using Vec = std::vector<double>;

double norm(std::span<const double> v) noexcept;
double distance(std::span<const double> a, std::span<const double> b) noexcept;

/// Axis-aligned box.
struct Box {
  Vec lo;
  Vec hi;

  std::size_t dim() const noexcept { return lo.size(); }
  Vec center() const;
  /// Length of the main diagonal.
  double diameter() const noexcept;
  bool contains(const Box& inner, double tol) const noexcept;
};

/// Euclidean distance between two boxes (0 when they touch or overlap).
double box_distance(const Box& a, const Box& b) noexcept;

/// x -> ratio * O x + t with O orthogonal (row-major, w x w).
class Similitude {
 public:
  Similitude(double ratio, Vec orth, Vec translation);

  double ratio() const noexcept { return ratio_; }
  std::size_t dim() const noexcept { return t_.size(); }
  std::span<const double> orth() const noexcept { return orth_; }
  std::span<const double> translation() const noexcept { return t_; }

  void apply(std::span<const double> x, std::span<double> out) const noexcept;
  Vec operator()(std::span<const double> x) const;

  /// Bounding box of the image of `box` (exact for signed permutations).
  Box image(const Box& box) const;

 private:
  double ratio_;
  Vec orth_;
  Vec t_;
};

/// Contracting similitudes S_1..S_m on a box K with S_i(K) inside K.
/// Strong separation is not required here; verify_separation checks it.
class IfsSystem {
 public:
  IfsSystem(Box domain, std::vector<Similitude> maps);

  std::size_t dim() const noexcept { return domain_.dim(); }
  std::size_t size() const noexcept { return maps_.size(); }
  const Box& domain() const noexcept { return domain_; }
  std::span<const Similitude> maps() const noexcept { return maps_; }
  const Similitude& map(Digit d) const;
  Vec ratios() const;

 private:
  Box domain_;
  std::vector<Similitude> maps_;
};

struct CodedPoint {
  Vec center;
  /// Every point coded by an extension of `prefix` lies within this radius.
  double radius = 0;
  std::vector<Digit> prefix;
};

struct MoranSolution {
  double dimension = 0;
  double residual = 0;
};

/// Root D of sum c_i^D = 1 by bisection.
MoranSolution moran_dimension(std::span<const double> ratios);

/// Smallest gap between first-level image boxes. Throws Overlap when two
/// images touch or intersect. A single-map system has an infinite gap.
double verify_separation(const IfsSystem& ifs);

CodedPoint code_point(const IfsSystem& ifs, std::span<const Digit> prefix);

/// Center of S_{a_1} o ... o S_{a_n}(center K), without digit validation.
void code_center(const IfsSystem& ifs, std::span<const Digit> prefix,
                 std::span<double> out) noexcept;

/// prod c_{a_k} * diam(K) / 2.
double code_radius(const IfsSystem& ifs, std::span<const Digit> prefix) noexcept;

/// The Bernoulli weights (c_1^D, ..., c_m^D).
Vec bernoulli_weights(const IfsSystem& ifs);

/// Flat row-major point storage.
struct PointCloud {
  std::size_t dim = 0;
  std::vector<double> coords;

  std::size_t size() const noexcept { return dim == 0 ? 0 : coords.size() / dim; }
  std::span<const double> point(std::size_t i) const noexcept {
    return {coords.data() + i * dim, dim};
  }
};

struct SamplerConfig {
  std::size_t count = 1;
  std::size_t depth = 1;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

std::vector<CodedPoint> sample_attractor(const IfsSystem& ifs,
                                         const SamplerConfig& config);
PointCloud sample_attractor_cloud(const IfsSystem& ifs, const SamplerConfig& config);

/// Samples pi(pr_{s,N}(filler)) with fillers drawn from the Bernoulli
/// measure. `base` must cover the constrained positions up to `depth`.
std::vector<CodedPoint> sample_restricted(const IfsSystem& ifs,
                                          const SymbolSequence& base,
                                          const GapSequence& gaps,
                                          const SamplerConfig& config);
PointCloud sample_restricted_cloud(const IfsSystem& ifs, const SymbolSequence& base,
                                   const GapSequence& gaps,
                                   const SamplerConfig& config);

struct PairSample {
  CodedPoint base;
  CodedPoint partner;
};

/// (pi(s), pi(pr_{s,N}(filler))) with s and filler independent Bernoulli draws.
std::vector<PairSample> sample_pair_set(const IfsSystem& ifs, const GapSequence& gaps,
                                        const SamplerConfig& config);
/// Same draws as sample_pair_set, concatenated into points of R^{2w}.
PointCloud sample_pair_set_cloud(const IfsSystem& ifs, const GapSequence& gaps,
                                 const SamplerConfig& config);

}  // namespace liyorke
