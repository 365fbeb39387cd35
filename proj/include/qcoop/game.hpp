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

#ifndef QCOOP_GAME_HPP_
#define QCOOP_GAME_HPP_

#include <array>
#include <string>
#include <vector>

#include "qcoop/channel.hpp"
#include "qcoop/linalg.hpp"

namespace qcoop {

// Weight below which the |121>/|212> and |112>/|221> pairs count as
// structurally unoccupied, making a state admissible for the symmetric
// analysis.
inline constexpr double kAdmissibilityTolerance = 1e-9;

// Tolerance for the constant relations of a symmetric game.
inline constexpr double kConstantRelationTolerance = 1e-12;

enum class Player { kA, kB, kC };

// The 24 constants defining a three-player diagonal payoff game.
//
// Each array is indexed in the operator enumeration order
//   |111>, |211>, |121>, |112>, |122>, |212>, |221>, |222>
// (alpha[0] pairs with |111>, alpha[1] with |211>, and so on). This is
// the order in which the constants are conventionally listed and differs
// from the basis-index order of Matrix8; payoff_operator performs the
// reindexing.
struct PayoffConstants {
  std::array<double, 8> alpha;  // player A
  std::array<double, 8> beta;   // player B
  std::array<double, 8> gamma;  // player C
  // Set when the constants satisfy the symmetric-game relations.
  bool symmetric = false;
};

// Mapping from operator enumeration position to Matrix8 basis index.
extern const std::array<int, 8> kOperatorOrderToBasis;

// The "two matching players win one unit each from the odd man" game:
// alpha = (0, -2, 1, 1, -2, 1, 1, 0) with beta and gamma filled in from
// the symmetric-game relations.
PayoffConstants standard_constants();

// Diagonal payoff operator for one player; entry (k, k) holds the
// player's constant for basis state k.
Matrix8 payoff_operator(const PayoffConstants& constants, Player player);

// Expectation value of the player's payoff operator in the channel
// output state. This is the oracle path: it runs the full strategy
// channel and takes the trace.
double payoff_by_trace(const ThreeQubitState& state,
                       const StrategyProfile& profile,
                       const PayoffConstants& constants, Player player);

// The four pair weights of a state; the only state data entering the
// mixed-strategy payoffs.
struct StateWeights {
  double w1;  // |c111|^2 + |c222|^2
  double w2;  // |c211|^2 + |c122|^2
  double w3;  // |c121|^2 + |c212|^2
  double w4;  // |c112|^2 + |c221|^2

  // Validates nonnegativity and unit sum (within kNormTolerance).
  static StateWeights make(double w1, double w2, double w3, double w4);
};

StateWeights state_weights(const ThreeQubitState& state);

bool is_admissible(const StateWeights& weights);

// Closed-form mixed-strategy payoff to player A in the standard game:
// a polynomial in (p, q, r) dotted with the state weights. Exact for
// arbitrary states.
double payoff_closed_form_A(const StrategyProfile& profile,
                            const StateWeights& weights);

// Closed-form payoff for any player in the standard game, obtained from
// the A form by permuting the profile and the weights.
double payoff_closed_form(const StrategyProfile& profile,
                          const StateWeights& weights, Player player);

// Identity-free payoff P(p, q, r) of the symmetric game: the payoff to a
// player applying identity with probability p against opponents playing
// q and r. Defined only for admissible weights; throws AdmissibilityError
// when w3 or w4 exceeds kAdmissibilityTolerance.
double symmetric_payoff(const StrategyProfile& profile,
                        const StateWeights& weights);

struct SymmetryViolation {
  std::string condition;
  double magnitude;
};

struct SymmetryVerdict {
  bool admissible;
  std::vector<SymmetryViolation> violations;
};

// Checks the state weight conditions (w3 = w4 = 0) and the eight constant
// relations; admissible iff no violation.
SymmetryVerdict check_symmetry(const ThreeQubitState& state,
                               const PayoffConstants& constants);

const char* player_name(Player player);

}  // namespace qcoop

#endif  // QCOOP_GAME_HPP_
