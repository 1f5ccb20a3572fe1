// Copyright 2026 The zo-residual Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZO_SAMPLING_H_
#define ZO_SAMPLING_H_

#include <cstdint>
#include <random>

#include <Eigen/Core>

namespace zo {

// Seeded pseudo-random stream. A stream has a single owner; independent
// streams for parallel trials come from Derive(base_seed, index).
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  // Child stream for `index` (e.g. the trial number). Different indices give
  // statistically independent streams; the mapping is a fixed bijective mix.
  static RandomStream Derive(std::uint64_t base_seed, std::uint64_t index);

  double Normal();
  double Uniform(double lo, double hi);
  std::uint64_t NextU64();

  std::uint64_t seed() const { return seed_; }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

// splitmix64 finalizer; used for seed derivation.
std::uint64_t MixSeed(std::uint64_t value);

enum class DirectionKind { kGaussian, kSphere };

// Random perturbation direction u_t.
struct Direction {
  Eigen::VectorXd components;
  DirectionKind kind = DirectionKind::kGaussian;

  int dimension() const { return static_cast<int>(components.size()); }
};

// u ~ N(0, I_d). Throws DimensionError when d < 1.
Direction SampleGaussianDirection(RandomStream& rng, int d);

// u uniform on the unit sphere in R^d, by normalising a Gaussian draw.
// Draws with norm below 1e-300 are discarded and redrawn.
Direction SampleSphereDirection(RandomStream& rng, int d);

// v uniform in the unit ball (sphere direction scaled by U^{1/d}).
Eigen::VectorXd SampleUnitBall(RandomStream& rng, int d);

Direction SampleDirection(RandomStream& rng, int d, DirectionKind kind);

}  // namespace zo

#endif  // ZO_SAMPLING_H_
