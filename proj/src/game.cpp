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

#include "qcoop/game.hpp"

#include <cmath>
#include <cstdio>

#include "qcoop/errors.hpp"

namespace qcoop {

namespace {

std::string fmt(const char* pattern, double value) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), pattern, value);
  return std::string(buf);
}

// The eight constant relations of a symmetric game, as one-based indices
// into (alpha, beta, gamma).
struct Relation {
  int a;
  int b;
  int g;
};

constexpr std::array<Relation, 8> kRelations = {{
    {1, 1, 1},
    {2, 3, 4},
    {3, 2, 3},
    {4, 4, 2},
    {5, 6, 7},
    {6, 5, 6},
    {7, 7, 5},
    {8, 8, 8},
}};

}  // namespace

const std::array<int, 8> kOperatorOrderToBasis = {0, 4, 2, 1, 3, 5, 6, 7};

PayoffConstants standard_constants() {
  PayoffConstants c;
  c.alpha = {0, -2, 1, 1, -2, 1, 1, 0};
  // Filled from the relations: beta_1 = alpha_1, beta_3 = alpha_2,
  // beta_2 = alpha_3, beta_4 = alpha_4, beta_6 = alpha_5, beta_5 = alpha_6,
  // beta_7 = alpha_7, beta_8 = alpha_8; likewise for gamma.
  c.beta = {0, 1, -2, 1, 1, -2, 1, 0};
  c.gamma = {0, 1, 1, -2, 1, 1, -2, 0};
  c.symmetric = true;
  return c;
}

Matrix8 payoff_operator(const PayoffConstants& constants, Player player) {
  const std::array<double, 8>* source = nullptr;
  switch (player) {
    case Player::kA:
      source = &constants.alpha;
      break;
    case Player::kB:
      source = &constants.beta;
      break;
    case Player::kC:
      source = &constants.gamma;
      break;
  }
  std::array<double, 8> diag{};
  for (int pos = 0; pos < 8; ++pos) {
    diag[kOperatorOrderToBasis[pos]] = (*source)[pos];
  }
  return Matrix8::diagonal(diag);
}

double payoff_by_trace(const ThreeQubitState& state,
                       const StrategyProfile& profile,
                       const PayoffConstants& constants, Player player) {
  const DensityMatrix rho_in = density_of(state);
  const DensityMatrix rho_fin = apply_strategy_channel(rho_in, profile);
  const Matrix8 oper = payoff_operator(constants, player);
  const Complex value = trace_of_product(oper, rho_fin.matrix());
  if (std::abs(value.imag()) > 1e-10) {
    throw DomainError(
        fmt("payoff trace has non-real value: imaginary part %.12g",
            value.imag()));
  }
  return value.real();
}

StateWeights StateWeights::make(double w1, double w2, double w3, double w4) {
  const std::array<double, 4> ws = {w1, w2, w3, w4};
  for (double w : ws) {
    if (!std::isfinite(w) || w < 0.0) {
      throw DomainError(fmt("state weight is not a finite nonnegative "
                            "number: %.12g",
                            w));
    }
  }
  const double sum = w1 + w2 + w3 + w4;
  if (std::abs(sum - 1.0) > kNormTolerance) {
    throw NormalizationError(
        fmt("state weights do not sum to 1: sum is %.12g", sum), sum);
  }
  StateWeights out;
  out.w1 = w1;
  out.w2 = w2;
  out.w3 = w3;
  out.w4 = w4;
  return out;
}

StateWeights state_weights(const ThreeQubitState& state) {
  const auto& c = state.amplitudes();
  const auto sq = [](Complex z) { return std::norm(z); };
  // Basis indices: |111> 0, |112> 1, |121> 2, |122> 3, |211> 4, |212> 5,
  // |221> 6, |222> 7.
  const double w1 = sq(c[0]) + sq(c[7]);
  const double w2 = sq(c[4]) + sq(c[3]);
  const double w3 = sq(c[2]) + sq(c[5]);
  const double w4 = sq(c[1]) + sq(c[6]);
  return StateWeights::make(w1, w2, w3, w4);
}

bool is_admissible(const StateWeights& weights) {
  return weights.w3 <= kAdmissibilityTolerance &&
         weights.w4 <= kAdmissibilityTolerance;
}

double payoff_closed_form_A(const StrategyProfile& profile,
                            const StateWeights& weights) {
  const double p = profile.p();
  const double q = profile.q();
  const double r = profile.r();
  const double rq = r * q;
  const double row1 = -4 * rq - 2 * p + 2 * p * r + 2 * p * q + r + q;
  const double row2 = -4 * rq + 2 * p - 2 * p * r - 2 * p * q + 3 * r + 3 * q - 2;
  const double row3 = 4 * rq + 2 * p * r - 2 * p * q - 3 * r - q + 1;
  const double row4 = 4 * rq - 2 * p * r + 2 * p * q - r - 3 * q + 1;
  return weights.w1 * row1 + weights.w2 * row2 + weights.w3 * row3 +
         weights.w4 * row4;
}

double payoff_closed_form(const StrategyProfile& profile,
                          const StateWeights& weights, Player player) {
  const double p = profile.p();
  const double q = profile.q();
  const double r = profile.r();
  switch (player) {
    case Player::kA:
      return payoff_closed_form_A(profile, weights);
    case Player::kB:
      return payoff_closed_form_A(
          StrategyProfile(q, p, r),
          StateWeights::make(weights.w1, weights.w3, weights.w2, weights.w4));
    case Player::kC:
      return payoff_closed_form_A(
          StrategyProfile(r, q, p),
          StateWeights::make(weights.w1, weights.w4, weights.w3, weights.w2));
  }
  throw DomainError("unknown player");
}

double symmetric_payoff(const StrategyProfile& profile,
                        const StateWeights& weights) {
  if (weights.w3 > kAdmissibilityTolerance) {
    throw AdmissibilityError(
        fmt("state is not admissible: w3 = %.12g", weights.w3));
  }
  if (weights.w4 > kAdmissibilityTolerance) {
    throw AdmissibilityError(
        fmt("state is not admissible: w4 = %.12g", weights.w4));
  }
  return payoff_closed_form_A(profile, weights);
}

SymmetryVerdict check_symmetry(const ThreeQubitState& state,
                               const PayoffConstants& constants) {
  SymmetryVerdict verdict;
  const StateWeights w = state_weights(state);
  if (w.w3 > kAdmissibilityTolerance) {
    verdict.violations.push_back({"w3 nonzero", w.w3});
  }
  if (w.w4 > kAdmissibilityTolerance) {
    verdict.violations.push_back({"w4 nonzero", w.w4});
  }
  for (const Relation& rel : kRelations) {
    const double a = constants.alpha[rel.a - 1];
    const double b = constants.beta[rel.b - 1];
    const double g = constants.gamma[rel.g - 1];
    const double dev = std::max(std::abs(a - b), std::abs(a - g));
    if (dev > kConstantRelationTolerance) {
      char name[64];
      std::snprintf(name, sizeof(name), "alpha%d = beta%d = gamma%d", rel.a,
                    rel.b, rel.g);
      verdict.violations.push_back({name, dev});
    }
  }
  verdict.admissible = verdict.violations.empty();
  return verdict;
}

const char* player_name(Player player) {
  switch (player) {
    case Player::kA:
      return "A";
    case Player::kB:
      return "B";
    case Player::kC:
      return "C";
  }
  return "?";
}

}  // namespace qcoop
