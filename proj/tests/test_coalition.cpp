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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <random>

#include "qcoop/classical.hpp"
#include "qcoop/coalition.hpp"
#include "qcoop/errors.hpp"
#include "qcoop/sampling.hpp"

namespace qcoop {
namespace {

// Corner labels pair with profiles: both coalition members then the odd
// man, label [1] meaning probability 0 on the identity.
constexpr std::array<std::array<double, 3>, 4> kCornerProfiles = {{
    {0, 0, 0},  // [111]
    {0, 0, 1},  // [112]
    {1, 1, 0},  // [221]
    {1, 1, 1},  // [222]
}};

TEST_CASE("corner payoffs of the unentangled state") {
  const CornerPayoffs c = corner_payoffs(StateWeights::make(1, 0, 0, 0));
  CHECK(c.p111 == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(c.p112 == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(c.p221 == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(c.p222 == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("corner payoffs of the loser-pair state") {
  const CornerPayoffs c = corner_payoffs(StateWeights::make(0, 1, 0, 0));
  CHECK(c.p111 == doctest::Approx(-4.0).epsilon(1e-12));
  CHECK(c.p112 == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("corner payoffs interpolate and match the trace oracle") {
  const CornerPayoffs c = corner_payoffs(StateWeights::make(0.5, 0.5, 0, 0));
  CHECK(c.p111 == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(c.p112 == doctest::Approx(2.0).epsilon(1e-12));
  // Oracle: each corner doubles the common single-member payoff, which the
  // trace route reproduces on a state carrying those weights.
  std::array<Complex, 8> amps{};
  amps[0] = 1.0 / std::sqrt(2.0);  // c111
  amps[4] = 1.0 / std::sqrt(2.0);  // c211
  const ThreeQubitState state = make_state(amps);
  const PayoffConstants constants = standard_constants();
  const std::array<double, 4> fields = {c.p111, c.p112, c.p221, c.p222};
  for (int k = 0; k < 4; ++k) {
    const StrategyProfile profile(kCornerProfiles[k][0], kCornerProfiles[k][1],
                                  kCornerProfiles[k][2]);
    const double by_trace =
        2.0 * payoff_by_trace(state, profile, constants, Player::kA);
    CHECK(fields[k] == doctest::Approx(by_trace).epsilon(1e-12));
  }
}

TEST_CASE("corner payoffs require admissible weights") {
  CHECK_THROWS_AS(corner_payoffs(StateWeights::make(0.5, 0, 0.5, 0)),
                  AdmissibilityError);
}

TEST_CASE("corners equal twice the symmetric payoff there") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const StateWeights w = sample_admissible_weights(rng);
    const CornerPayoffs c = corner_payoffs(w);
    const std::array<double, 4> fields = {c.p111, c.p112, c.p221, c.p222};
    for (int k = 0; k < 4; ++k) {
      const StrategyProfile profile(kCornerProfiles[k][0],
                                    kCornerProfiles[k][1],
                                    kCornerProfiles[k][2]);
      CHECK(std::abs(fields[k] - 2.0 * symmetric_payoff(profile, w)) <=
            1e-12);
    }
  }
}

TEST_CASE("mixture types reject out-of-range weights") {
  CHECK_THROWS_AS(CoalitionMixedStrategy(1.2), DomainError);
  CHECK_THROWS_AS(OddManMixedStrategy(-0.2), DomainError);
}

TEST_CASE("coalition payoff at pure corners and at the guarantee point") {
  const StateWeights unentangled = StateWeights::make(1, 0, 0, 0);
  CHECK(coalition_payoff(CoalitionMixedStrategy(1), OddManMixedStrategy(1),
                         unentangled) ==
        doctest::Approx(0.0).epsilon(1e-12));
  for (double m : {0.0, 0.25, 0.7, 1.0}) {
    CHECK(coalition_payoff(CoalitionMixedStrategy(0.5), OddManMixedStrategy(m),
                           unentangled) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("half-half coalition mixture guarantees the value difference") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const StateWeights w = sample_admissible_weights(rng);
    const double expected = w.w1 - w.w2;
    double reference = coalition_payoff(CoalitionMixedStrategy(0.5),
                                        OddManMixedStrategy(0.0), w);
    CHECK(reference == doctest::Approx(expected).epsilon(1e-12));
    for (double m : {0.1, 0.5, 0.9, 1.0}) {
      const double value = coalition_payoff(CoalitionMixedStrategy(0.5),
                                            OddManMixedStrategy(m), w);
      CHECK(std::abs(value - reference) <= 1e-12);
    }
  }
}

TEST_CASE("grid oracle recovers the analytic saddle of the unentangled "
          "game") {
  const StateWeights w = StateWeights::make(1, 0, 0, 0);
  const GridMaximin grid = maximin_grid_oracle(
      [&w](double l, double m) {
        return coalition_payoff(CoalitionMixedStrategy(l),
                                OddManMixedStrategy(m), w);
      },
      0.001);
  CHECK(std::abs(grid.value_hat - 1.0) <= 1e-9);
  CHECK(std::abs(grid.l_hat - 0.5) <= 1e-9);
}

TEST_CASE("grid oracle breaks ties toward the smallest mixture weight") {
  const GridMaximin grid =
      maximin_grid_oracle([](double, double) { return 3.0; }, 0.05);
  CHECK(grid.value_hat == 3.0);
  CHECK(grid.l_hat == 0.0);
}

TEST_CASE("grid oracle on the loser-pair surface") {
  const StateWeights w = StateWeights::make(0, 1, 0, 0);
  const GridMaximin grid = maximin_grid_oracle(
      [&w](double l, double m) {
        return coalition_payoff(CoalitionMixedStrategy(l),
                                OddManMixedStrategy(m), w);
      },
      0.001);
  CHECK(std::abs(grid.value_hat - (-1.0)) <= 1e-9);
}

TEST_CASE("grid oracle validates the resolution") {
  const auto surface = [](double, double) { return 0.0; };
  CHECK_THROWS_AS(maximin_grid_oracle(surface, 0.0), DomainError);
  CHECK_THROWS_AS(maximin_grid_oracle(surface, 0.2), DomainError);
  CHECK_THROWS_AS(maximin_grid_oracle(surface, -0.01), DomainError);
}

TEST_CASE("coalition value of the unentangled state") {
  const CoalitionValueReport r =
      solve_coalition_value(StateWeights::make(1, 0, 0, 0));
  CHECK(r.l_star == 0.5);
  CHECK(r.v_coalition == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.v_oddman == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(r.verdict == Motivation::kMotivated);
  CHECK(r.grid_check_gap <= 2e-3);
}

TEST_CASE("coalition value of the loser-pair state loses the motivation") {
  const CoalitionValueReport r =
      solve_coalition_value(StateWeights::make(0, 1, 0, 0));
  CHECK(r.l_star == 0.5);
  CHECK(r.v_coalition == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(r.v_oddman == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(r.verdict == Motivation::kIndifferent);
}

TEST_CASE("coalition value of a mixed state") {
  const CoalitionValueReport r =
      solve_coalition_value(StateWeights::make(0.6, 0.4, 0, 0));
  CHECK(r.v_coalition == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(r.v_oddman == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(r.verdict == Motivation::kMotivated);
  CHECK(r.grid_check_gap <= 2e-3);
}

TEST_CASE("analytic value matches the grid maximin for random weights") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const CoalitionValueReport r =
        solve_coalition_value(sample_admissible_weights(rng));
    CHECK(r.grid_check_gap <= 2.0 * kReportGridResolution);
  }
}

TEST_CASE("quantum path at weights (1,0) reduces to the classical values") {
  const CoalitionValueReport r =
      solve_coalition_value(StateWeights::make(1, 0, 0, 0));
  const auto classical = classical_coalition_values();
  const double pair_value =
      classical.at(CoalitionSpec({Player::kB, Player::kC}));
  const double singleton_value = classical.at(CoalitionSpec({Player::kA}));
  CHECK(std::abs(r.v_coalition - pair_value) <= 1e-12);
  CHECK(std::abs(r.v_oddman - singleton_value) <= 1e-12);
}

TEST_CASE("verdict flips to Indifferent exactly at vanishing w1") {
  CHECK(solve_coalition_value(StateWeights::make(0, 1, 0, 0)).verdict ==
        Motivation::kIndifferent);
  CHECK(solve_coalition_value(StateWeights::make(1e-10, 1 - 1e-10, 0, 0))
            .verdict == Motivation::kIndifferent);
  CHECK(solve_coalition_value(StateWeights::make(1e-8, 1 - 1e-8, 0, 0))
            .verdict == Motivation::kMotivated);
  // The value separation grows with w1.
  double previous = -1.0;
  for (double w1 : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const CoalitionValueReport r =
        solve_coalition_value(StateWeights::make(w1, 1.0 - w1, 0, 0));
    const double separation = r.v_coalition - r.v_oddman;
    CHECK(separation >= 0.0);
    CHECK(separation > previous);
    previous = separation;
  }
}

TEST_CASE("odd man value is forced to minus one by normalization") {
  CHECK(oddman_value(StateWeights::make(1, 0, 0, 0)) ==
        doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(oddman_value(StateWeights::make(0, 1, 0, 0)) ==
        doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(oddman_value(StateWeights::make(0.3, 0.7, 0, 0)) ==
        doctest::Approx(-1.0).epsilon(1e-12));
  CHECK_THROWS_AS(oddman_value(StateWeights::make(0.3, 0.3, 0.4, 0)),
                  AdmissibilityError);
}

TEST_CASE("zero-sum deficit vanishes without loser-pair weight") {
  const StateWeights w = StateWeights::make(1, 0, 0, 0);
  for (double p : {0.0, 0.3, 1.0}) {
    for (double q : {0.0, 0.6, 1.0}) {
      CHECK(std::abs(zero_sum_deficit(StrategyProfile(p, q, 0.5), w)) <=
            1e-12);
    }
  }
}

TEST_CASE("zero-sum deficit crosses zero at the balanced profile") {
  const StateWeights w = StateWeights::make(0, 1, 0, 0);
  CHECK(std::abs(zero_sum_deficit(StrategyProfile(0.5, 0.5, 0.5), w)) <=
        1e-12);
  CHECK(zero_sum_deficit(StrategyProfile(0, 0, 0), w) ==
        doctest::Approx(-6.0).epsilon(1e-12));
}

TEST_CASE("deficit equals the trace-oracle sum over rotated seats") {
  // The deficit totals the shared payoff formula with each player moved
  // into the first seat in turn; the trace route supplies each term.
  std::mt19937_64 rng(53);
  const PayoffConstants constants = standard_constants();
  for (int trial = 0; trial < 100; ++trial) {
    const ThreeQubitState state = sample_admissible_state(rng);
    const StrategyProfile s = sample_profile(rng);
    const StateWeights weights = state_weights(state);
    const std::array<StrategyProfile, 3> seats = {
        StrategyProfile(s.p(), s.q(), s.r()),
        StrategyProfile(s.q(), s.p(), s.r()),
        StrategyProfile(s.r(), s.p(), s.q()),
    };
    double sum = 0.0;
    for (const StrategyProfile& seat : seats) {
      sum += payoff_by_trace(state, seat, constants, Player::kA);
    }
    CHECK(std::abs(zero_sum_deficit(s, weights) - sum) <= 1e-10);
  }
}

TEST_CASE("motivation names") {
  CHECK(std::string(motivation_name(Motivation::kMotivated)) == "Motivated");
  CHECK(std::string(motivation_name(Motivation::kIndifferent)) ==
        "Indifferent");
  CHECK(std::string(motivation_name(Motivation::kAntimotivated)) ==
        "Antimotivated");
}

}  // namespace
}  // namespace qcoop
