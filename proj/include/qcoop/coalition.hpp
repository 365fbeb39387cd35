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

#ifndef QCOOP_COALITION_HPP_
#define QCOOP_COALITION_HPP_

#include <functional>
#include <string>

#include "qcoop/game.hpp"

namespace qcoop {

// Half-width of the Indifferent band on v_coalition - v_oddman.
inline constexpr double kVerdictEpsilon = 1e-9;

// Grid step used for the embedded maximin cross-check.
inline constexpr double kReportGridResolution = 0.001;

// Coalition mixed strategy: weight l on the joint action [11], the rest
// on [22].
class CoalitionMixedStrategy {
 public:
  explicit CoalitionMixedStrategy(double l);
  double l() const { return l_; }

 private:
  double l_;
};

// Odd man's mixed strategy: weight m on [1], the rest on [2].
class OddManMixedStrategy {
 public:
  explicit OddManMixedStrategy(double m);
  double m() const { return m_; }

 private:
  double m_;
};

// Coalition payoffs at the four pure corners, indexed coalition-first:
// [xyz] means both coalition members play [x] = [y] and the odd man
// plays [z].
struct CornerPayoffs {
  double p111;
  double p112;
  double p221;
  double p222;
};

enum class Motivation { kMotivated, kIndifferent, kAntimotivated };

const char* motivation_name(Motivation verdict);

struct CoalitionValueReport {
  double l_star;
  double v_coalition;
  double v_oddman;
  Motivation verdict;
  // |analytic value - grid maximin| at kReportGridResolution.
  double grid_check_gap;
};

struct GridMaximin {
  double l_hat;
  double value_hat;
};

// Corner payoffs of the two-member coalition against the odd man:
// p111 = p222 = -4*w2, p112 = p221 = 2*(w1 + w2). Each is twice the
// symmetric payoff at the corresponding corner.
CornerPayoffs corner_payoffs(const StateWeights& weights);

// Bilinear coalition payoff surface over (l, m).
double coalition_payoff(const CoalitionMixedStrategy& l,
                        const OddManMixedStrategy& m,
                        const StateWeights& weights);

// Grid maximin of a bilinear surface: max over grid points l of the
// exact endpoint minimum over m. Ties resolve to the smallest l.
GridMaximin maximin_grid_oracle(
    const std::function<double(double, double)>& payoff, double resolution);

// Analytic coalition solution with the embedded grid cross-check.
CoalitionValueReport solve_coalition_value(const StateWeights& weights);

// Value of the left-out player: -(w1 + w2).
double oddman_value(const StateWeights& weights);

// Sum of the three players' payoffs at the profile; vanishes for all
// profiles iff w2 = 0, and at fixed w2 > 0 iff p+q+r-pq-qr-rp = 3/4.
double zero_sum_deficit(const StrategyProfile& profile,
                        const StateWeights& weights);

}  // namespace qcoop

#endif  // QCOOP_COALITION_HPP_
