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

// Private helpers for emitting parameters as JSON. Not installed.

#ifndef ZO_SRC_JSON_UTIL_H_
#define ZO_SRC_JSON_UTIL_H_

#include <vector>

#include <Eigen/Core>

#include "json.hpp"

namespace zo::internal {

using Json = nlohmann::ordered_json;

inline Json VectorJson(const Eigen::VectorXd& v) {
  return Json(std::vector<double>(v.data(), v.data() + v.size()));
}

// Row-major nested arrays.
inline Json MatrixJson(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Eigen::VectorXd row = m.row(i).transpose();
    rows.push_back(VectorJson(row));
  }
  return rows;
}

}  // namespace zo::internal

#endif  // ZO_SRC_JSON_UTIL_H_
