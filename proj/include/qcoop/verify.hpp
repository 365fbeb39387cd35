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

#ifndef QCOOP_VERIFY_HPP_
#define QCOOP_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "qcoop/game.hpp"

namespace qcoop {

struct PropertyResult {
  std::string name;
  int trials;
  bool passed;
  double max_gap;
  double tolerance;
};

// Seeded randomized property suite:
//   - oracle equivalence: trace payoff vs closed form, all players;
//   - phase invariance: per-amplitude phases leave payoffs unchanged;
//   - saddle cross-check: analytic coalition value vs grid maximin.
// Outcomes are seed-independent; the seed only picks the sample points.
std::vector<PropertyResult> run_property_suite(std::uint64_t seed,
                                               const PayoffConstants& constants);

}  // namespace qcoop

#endif  // QCOOP_VERIFY_HPP_
