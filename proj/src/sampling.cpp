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

#include "qcoop/sampling.hpp"

#include <array>
#include <cmath>

namespace qcoop {

namespace {

ThreeQubitState normalized_state(std::array<Complex, 8> amps) {
  double norm_sq = 0.0;
  for (const Complex& a : amps) {
    norm_sq += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(norm_sq);
  for (Complex& a : amps) {
    a *= scale;
  }
  return make_state(amps);
}

}  // namespace

ThreeQubitState sample_state(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::array<Complex, 8> amps;
  for (Complex& a : amps) {
    a = Complex(gauss(rng), gauss(rng));
  }
  return normalized_state(amps);
}

ThreeQubitState sample_admissible_state(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::array<Complex, 8> amps{};
  // Basis indices of |111>, |122>, |211>, |222>.
  for (int k : {0, 3, 4, 7}) {
    amps[k] = Complex(gauss(rng), gauss(rng));
  }
  return normalized_state(amps);
}

StrategyProfile sample_profile(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double p = unit(rng);
  const double q = unit(rng);
  const double r = unit(rng);
  return StrategyProfile(p, q, r);
}

StateWeights sample_admissible_weights(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double w1 = unit(rng);
  return StateWeights::make(w1, 1.0 - w1, 0.0, 0.0);
}

}  // namespace qcoop
