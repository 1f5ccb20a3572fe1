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

#ifndef ZO_ERRORS_H_
#define ZO_ERRORS_H_

#include <stdexcept>
#include <string>

namespace zo {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Zero or mismatched dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An objective query returned a non-finite value.
class QueryError : public Error {
 public:
  using Error::Error;
};

// ResidualState inconsistent with the step being applied.
class StateError : public Error {
 public:
  using Error::Error;
};

// A sphere-only operation received a direction that is not unit norm.
class DirectionKindError : public Error {
 public:
  using Error::Error;
};

// Query-discipline violation, e.g. a second query at one time step on a
// problem that only allows one.
class ContractError : public Error {
 public:
  using Error::Error;
};

// Invalid argument to a set, schedule or configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace zo

#endif  // ZO_ERRORS_H_
