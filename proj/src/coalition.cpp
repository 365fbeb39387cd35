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

#include "qcoop/coalition.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "qcoop/errors.hpp"

namespace qcoop {

namespace {

double checked_probability(double value, const char* what) {
  if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s outside [0, 1]: %.12g", what, value);
    throw DomainError(buf);
  }
  return value;
}

void require_admissible(const StateWeights& weights) {
  if (!is_admissible(weights)) {
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "state is not admissible: w3 = %.12g, w4 = %.12g",
                  weights.w3, weights.w4);
    throw AdmissibilityError(buf);
  }
}

Motivation verdict_of(double v_coalition, double v_oddman) {
  const double gap = v_coalition - v_oddman;
  if (std::abs(gap) <= kVerdictEpsilon) {
    return Motivation::kIndifferent;
  }
  return gap > 0.0 ? Motivation::kMotivated : Motivation::kAntimotivated;
}

}  // namespace

CoalitionMixedStrategy::CoalitionMixedStrategy(double l)
    : l_(checked_probability(l, "coalition mixture weight")) {}

OddManMixedStrategy::OddManMixedStrategy(double m)
    : m_(checked_probability(m, "odd man mixture weight")) {}

const char* motivation_name(Motivation verdict) {
  switch (verdict) {
    case Motivation::kMotivated:
      return "Motivated";
    case Motivation::kIndifferent:
      return "Indifferent";
    case Motivation::kAntimotivated:
      return "Antimotivated";
  }
  return "?";
}

CornerPayoffs corner_payoffs(const StateWeights& weights) {
  require_admissible(weights);
  CornerPayoffs out;
  out.p111 = -4.0 * weights.w2;
  out.p222 = out.p111;
  out.p112 = 2.0 * (weights.w1 + weights.w2);
  out.p221 = out.p112;
  return out;
}

double coalition_payoff(const CoalitionMixedStrategy& l,
                        const OddManMixedStrategy& m,
                        const StateWeights& weights) {
  const CornerPayoffs c = corner_payoffs(weights);
  const double lv = l.l();
  const double mv = m.m();
  return lv * mv * c.p111 + lv * (1.0 - mv) * c.p112 +
         (1.0 - lv) * mv * c.p221 + (1.0 - lv) * (1.0 - mv) * c.p222;
}

GridMaximin maximin_grid_oracle(
    const std::function<double(double, double)>& payoff, double resolution) {
  if (!std::isfinite(resolution) || resolution <= 0.0 || resolution > 0.1) {
    throw DomainError("grid resolution must lie in (0, 0.1]");
  }
  GridMaximin best{0.0, -std::numeric_limits<double>::infinity()};
  const long steps = std::lround(std::ceil(1.0 / resolution));
  for (long i = 0; i <= steps; ++i) {
    const double l = std::min(1.0, static_cast<double>(i) * resolution);
    // The surface is linear in m at fixed l, so the inner minimum sits at
    // an endpoint.
    const double value = std::min(payoff(l, 0.0), payoff(l, 1.0));
    if (value > best.value_hat) {
      best = {l, value};
    }
    if (l == 1.0) {
      break;
    }
  }
  return best;
}

CoalitionValueReport solve_coalition_value(const StateWeights& weights) {
  require_admissible(weights);
  CoalitionValueReport report;
  report.l_star = 0.5;
  report.v_coalition = weights.w1 - weights.w2;
  report.v_oddman = -(weights.w1 + weights.w2);
  report.verdict = verdict_of(report.v_coalition, report.v_oddman);
  const GridMaximin grid = maximin_grid_oracle(
      [&weights](double l, double m) {
        return coalition_payoff(CoalitionMixedStrategy(l),
                                OddManMixedStrategy(m), weights);
      },
      kReportGridResolution);
  report.grid_check_gap = std::abs(report.v_coalition - grid.value_hat);
  return report;
}

double oddman_value(const StateWeights& weights) {
  require_admissible(weights);
  return -(weights.w1 + weights.w2);
}

double zero_sum_deficit(const StrategyProfile& profile,
                        const StateWeights& weights) {
  require_admissible(weights);
  const double p = profile.p();
  const double q = profile.q();
  const double r = profile.r();
  const double sigma = p + q + r - p * q - q * r - r * p;
  return weights.w2 * (8.0 * sigma - 6.0);
}

}  // namespace qcoop
