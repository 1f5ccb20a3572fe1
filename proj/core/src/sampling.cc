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

#include "zo/sampling.h"

#include <cmath>
#include <string>

#include "zo/errors.h"

namespace zo {

std::uint64_t MixSeed(std::uint64_t value) {
  value += 0x9e3779b97f4a7c15ULL;
  value = (value ^ (value >> 30)) * 0xbf58476d1ce4e5b9ULL;
  value = (value ^ (value >> 27)) * 0x94d049bb133111ebULL;
  return value ^ (value >> 31);
}

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

RandomStream RandomStream::Derive(std::uint64_t base_seed, std::uint64_t index) {
  return RandomStream(MixSeed(MixSeed(base_seed) ^ MixSeed(index + 0x5851f42d4c957f2dULL)));
}

double RandomStream::Normal() { return normal_(engine_); }

double RandomStream::Uniform(double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(engine_);
}

std::uint64_t RandomStream::NextU64() { return engine_(); }

namespace {

void CheckDimension(int d) {
  if (d < 1) {
    throw DimensionError("direction dimension must be >= 1, got " + std::to_string(d));
  }
}

}  // namespace

Direction SampleGaussianDirection(RandomStream& rng, int d) {
  CheckDimension(d);
  Direction u;
  u.kind = DirectionKind::kGaussian;
  u.components.resize(d);
  for (int i = 0; i < d; ++i) u.components[i] = rng.Normal();
  return u;
}

Direction SampleSphereDirection(RandomStream& rng, int d) {
  CheckDimension(d);
  Eigen::VectorXd g(d);
  double norm = 0.0;
  do {
    for (int i = 0; i < d; ++i) g[i] = rng.Normal();
    norm = g.norm();
  } while (!(norm >= 1e-300));
  Direction u;
  u.kind = DirectionKind::kSphere;
  u.components = g / norm;
  return u;
}

Eigen::VectorXd SampleUnitBall(RandomStream& rng, int d) {
  Direction s = SampleSphereDirection(rng, d);
  const double radius = std::pow(rng.Uniform(0.0, 1.0), 1.0 / d);
  return radius * s.components;
}

Direction SampleDirection(RandomStream& rng, int d, DirectionKind kind) {
  return kind == DirectionKind::kSphere ? SampleSphereDirection(rng, d)
                                        : SampleGaussianDirection(rng, d);
}

}  // namespace zo
