// Copyright 2026 The qcoop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCOOP_ERRORS_HPP_
#define QCOOP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qcoop {

// Base class for all qcoop exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input value lies outside its admitted domain (probability outside
// [0, 1], non-finite amplitude, invalid strategy label, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A candidate initial state is not normalized. Carries the computed norm.
class NormalizationError : public Error {
 public:
  NormalizationError(const std::string& what, double norm)
      : Error(what), norm_(norm) {}
  double norm() const { return norm_; }

 private:
  double norm_;
};

// A state violates the symmetry conditions required by the coalition
// analysis (nonzero weight on the |121>/|212> or |112>/|221> pairs).
class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

// A coalition of the wrong size was passed where a two-member coalition
// is required.
class CoalitionSizeError : public Error {
 public:
  using Error::Error;
};

// The 2x2 zero-sum solver hit a zero denominator without a pure saddle.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// A run configuration could not be parsed or fails its schema.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcoop

#endif  // QCOOP_ERRORS_HPP_
