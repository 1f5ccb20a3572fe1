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

// Hand-rolled generators and Monte-Carlo helpers shared by the tests.

#ifndef ZO_TESTS_TEST_UTIL_H_
#define ZO_TESTS_TEST_UTIL_H_

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Core>

namespace zo::testing {

// Independent of the library's RandomStream so generators do not share its
// code paths.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}
  double Normal() { return normal_(engine_); }
  double Uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  int Int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  Eigen::VectorXd Vector(int d, double scale = 1.0) {
    Eigen::VectorXd v(d);
    for (int i = 0; i < d; ++i) v[i] = scale * Normal();
    return v;
  }
  // A = M^T M / d, symmetric positive semidefinite.
  Eigen::MatrixXd Psd(int d) {
    Eigen::MatrixXd m(d, d);
    for (int i = 0; i < d * d; ++i) m.data()[i] = Normal();
    return m.transpose() * m / d;
  }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

// Streaming per-component mean and standard error.
class MeanAccumulator {
 public:
  explicit MeanAccumulator(int d) : sum_(Eigen::VectorXd::Zero(d)), sq_(Eigen::VectorXd::Zero(d)) {}
  void Add(const Eigen::VectorXd& v) {
    sum_ += v;
    sq_ += v.cwiseProduct(v);
    ++n_;
  }
  Eigen::VectorXd Mean() const { return sum_ / static_cast<double>(n_); }
  Eigen::VectorXd StdError() const {
    const double n = static_cast<double>(n_);
    Eigen::VectorXd var = (sq_ / n - Mean().cwiseProduct(Mean())) * n / (n - 1.0);
    return (var / n).cwiseSqrt();
  }
  std::int64_t count() const { return n_; }

 private:
  Eigen::VectorXd sum_, sq_;
  std::int64_t n_ = 0;
};

// Largest |mean - target| / std_error over components.
inline double MaxStandardizedError(const MeanAccumulator& acc, const Eigen::VectorXd& target) {
  const Eigen::VectorXd z = (acc.Mean() - target).cwiseQuotient(acc.StdError());
  return z.cwiseAbs().maxCoeff();
}

}  // namespace zo::testing

#endif  // ZO_TESTS_TEST_UTIL_H_
