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

#include "qcoop/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qcoop/coalition.hpp"
#include "qcoop/sampling.hpp"

namespace qcoop {

namespace {

constexpr std::array<Player, 3> kPlayers = {Player::kA, Player::kB,
                                            Player::kC};

// Trace payoff against the closed form, every player, random inputs. The
// trace side exercises the channel with the supplied constants; the
// closed form is the fixed polynomial of the standard game.
PropertyResult oracle_equivalence(std::mt19937_64& rng,
                                  const PayoffConstants& constants) {
  PropertyResult result{"oracle equivalence", 1000, true, 0.0, 1e-10};
  for (int trial = 0; trial < result.trials; ++trial) {
    const ThreeQubitState state = sample_state(rng);
    const StrategyProfile profile = sample_profile(rng);
    const StateWeights weights = state_weights(state);
    for (Player player : kPlayers) {
      const double by_trace = payoff_by_trace(state, profile, constants, player);
      const double by_form = payoff_closed_form(profile, weights, player);
      result.max_gap = std::max(result.max_gap, std::abs(by_trace - by_form));
    }
  }
  result.passed = result.max_gap <= result.tolerance;
  return result;
}

// Multiplying each amplitude by its own unit phase leaves every payoff
// unchanged: only |c|^2 enters through the diagonal operators.
PropertyResult phase_invariance(std::mt19937_64& rng,
                                const PayoffConstants& constants) {
  PropertyResult result{"phase invariance", 100, true, 0.0, 1e-12};
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  for (int trial = 0; trial < result.trials; ++trial) {
    const ThreeQubitState state = sample_state(rng);
    const StrategyProfile profile = sample_profile(rng);
    std::array<Complex, 8> phased = state.amplitudes();
    for (Complex& a : phased) {
      const double theta = angle(rng);
      a *= Complex(std::cos(theta), std::sin(theta));
    }
    const ThreeQubitState rotated = make_state(phased);
    for (Player player : kPlayers) {
      const double before = payoff_by_trace(state, profile, constants, player);
      const double after = payoff_by_trace(rotated, profile, constants, player);
      result.max_gap = std::max(result.max_gap, std::abs(before - after));
    }
  }
  result.passed = result.max_gap <= result.tolerance;
  return result;
}

PropertyResult saddle_cross_check(std::mt19937_64& rng) {
  PropertyResult result{"saddle cross-check", 100, true, 0.0,
                        2.0 * kReportGridResolution};
  for (int trial = 0; trial < result.trials; ++trial) {
    const StateWeights weights = sample_admissible_weights(rng);
    const CoalitionValueReport report = solve_coalition_value(weights);
    result.max_gap = std::max(result.max_gap, report.grid_check_gap);
  }
  result.passed = result.max_gap <= result.tolerance;
  return result;
}

}  // namespace

std::vector<PropertyResult> run_property_suite(
    std::uint64_t seed, const PayoffConstants& constants) {
  std::mt19937_64 rng(seed);
  std::vector<PropertyResult> results;
  results.push_back(oracle_equivalence(rng, constants));
  results.push_back(phase_invariance(rng, constants));
  results.push_back(saddle_cross_check(rng));
  return results;
}

}  // namespace qcoop
