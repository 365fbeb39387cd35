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

#ifndef QCOOP_CLASSICAL_HPP_
#define QCOOP_CLASSICAL_HPP_

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qcoop/game.hpp"

namespace qcoop {

// A pure strategy choice per player, each labeled 1 or 2.
class PureProfile {
 public:
  PureProfile(int a, int b, int c);

  int a() const { return a_; }
  int b() const { return b_; }
  int c() const { return c_; }
  int choice(Player player) const;

 private:
  int a_;
  int b_;
  int c_;
};

// A nonempty proper subset of the players, of size one or two.
class CoalitionSpec {
 public:
  explicit CoalitionSpec(std::vector<Player> members);

  const std::vector<Player>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(Player player) const;
  // The player outside a two-member coalition.
  Player odd_man() const;
  // "{B,C}" style, members in A, B, C order.
  std::string label() const;

  friend bool operator<(const CoalitionSpec& lhs, const CoalitionSpec& rhs) {
    return lhs.mask_ < rhs.mask_;
  }
  friend bool operator==(const CoalitionSpec& lhs, const CoalitionSpec& rhs) {
    return lhs.mask_ == rhs.mask_;
  }

 private:
  std::vector<Player> members_;
  int mask_;
};

// Payoffs to a two-member coalition, rows indexed by the coalition's joint
// pure strategies and columns by the odd man's. Labels travel with the
// rows through elimination.
struct CoalitionMatrix {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::array<double, 2>> entries;
};

struct MixedSolution {
  std::vector<double> row_mixture;
  std::vector<double> col_mixture;
  double value;
};

// Pure payoff triple (P_A, P_B, P_C): two matching players receive one
// unit each from the odd man; all-same pays nothing.
std::array<double, 3> classical_payoff(const PureProfile& profile);

// The 4x2 coalition payoff table; entries sum the two members' payoffs.
CoalitionMatrix coalition_matrix(const CoalitionSpec& coalition);

// Removes rows weakly dominated (with at least one strict entry) by a
// surviving row, repeating to fixpoint; of exactly identical rows only
// the first in label order survives.
CoalitionMatrix eliminate_dominated(const CoalitionMatrix& matrix);

// Solves a 2x2 zero-sum game for the row maximizer: pure saddle point if
// one exists (lexicographically first), interior mixture otherwise.
MixedSolution solve_2x2_zero_sum(const std::array<std::array<double, 2>, 2>& m);

// Values of all six one- and two-member coalitions; pairs via the matrix
// pipeline, singletons via zero-sum complementarity.
std::map<CoalitionSpec, double> classical_coalition_values();

}  // namespace qcoop

#endif  // QCOOP_CLASSICAL_HPP_
