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

#include "qcoop/classical.hpp"

#include <algorithm>
#include <cmath>

#include "qcoop/errors.hpp"

namespace qcoop {

namespace {

int player_bit(Player player) {
  switch (player) {
    case Player::kA:
      return 0;
    case Player::kB:
      return 1;
    case Player::kC:
      return 2;
  }
  throw DomainError("unknown player");
}

bool row_equal(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  return a[0] == b[0] && a[1] == b[1];
}

// True when `a` is weakly dominated by `b` with at least one strict entry.
bool dominated_by(const std::array<double, 2>& a,
                  const std::array<double, 2>& b) {
  return a[0] <= b[0] && a[1] <= b[1] && (a[0] < b[0] || a[1] < b[1]);
}

}  // namespace

PureProfile::PureProfile(int a, int b, int c) : a_(a), b_(b), c_(c) {
  for (int choice : {a, b, c}) {
    if (choice != 1 && choice != 2) {
      throw DomainError("pure strategy label must be 1 or 2");
    }
  }
}

int PureProfile::choice(Player player) const {
  switch (player) {
    case Player::kA:
      return a_;
    case Player::kB:
      return b_;
    case Player::kC:
      return c_;
  }
  throw DomainError("unknown player");
}

CoalitionSpec::CoalitionSpec(std::vector<Player> members) : mask_(0) {
  for (Player p : members) {
    mask_ |= 1 << player_bit(p);
  }
  members_.clear();
  for (Player p : {Player::kA, Player::kB, Player::kC}) {
    if (mask_ & (1 << player_bit(p))) {
      members_.push_back(p);
    }
  }
  if (members_.empty() || members_.size() > 2) {
    throw CoalitionSizeError("coalition must have one or two members");
  }
}

bool CoalitionSpec::contains(Player player) const {
  return (mask_ & (1 << player_bit(player))) != 0;
}

Player CoalitionSpec::odd_man() const {
  if (size() != 2) {
    throw CoalitionSizeError("odd man is defined only for a two-member "
                             "coalition");
  }
  for (Player p : {Player::kA, Player::kB, Player::kC}) {
    if (!contains(p)) {
      return p;
    }
  }
  throw DomainError("coalition covers all players");
}

std::string CoalitionSpec::label() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += player_name(members_[i]);
  }
  out += "}";
  return out;
}

std::array<double, 3> classical_payoff(const PureProfile& profile) {
  const int a = profile.a();
  const int b = profile.b();
  const int c = profile.c();
  if (a == b && b == c) {
    return {0.0, 0.0, 0.0};
  }
  // Exactly one player differs from the other two; the pair take one unit
  // each from the odd man.
  if (a == b) {
    return {1.0, 1.0, -2.0};
  }
  if (a == c) {
    return {1.0, -2.0, 1.0};
  }
  return {-2.0, 1.0, 1.0};
}

CoalitionMatrix coalition_matrix(const CoalitionSpec& coalition) {
  if (coalition.size() != 2) {
    throw CoalitionSizeError(
        "coalition matrix requires a two-member coalition");
  }
  const Player first = coalition.members()[0];
  const Player second = coalition.members()[1];
  const Player odd = coalition.odd_man();

  CoalitionMatrix out;
  out.row_labels = {"[11]", "[12]", "[21]", "[22]"};
  out.col_labels = {"[1]", "[2]"};
  for (int x : {1, 2}) {
    for (int y : {1, 2}) {
      std::array<double, 2> row{};
      for (int z : {1, 2}) {
        int choices[3] = {0, 0, 0};
        choices[player_bit(first)] = x;
        choices[player_bit(second)] = y;
        choices[player_bit(odd)] = z;
        const PureProfile profile(choices[0], choices[1], choices[2]);
        const auto payoffs = classical_payoff(profile);
        row[z - 1] = payoffs[player_bit(first)] + payoffs[player_bit(second)];
      }
      out.entries.push_back(row);
    }
  }
  return out;
}

CoalitionMatrix eliminate_dominated(const CoalitionMatrix& matrix) {
  const std::size_t n = matrix.entries.size();
  std::vector<bool> alive(n, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i]) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || !alive[j]) {
          continue;
        }
        const bool duplicate_of_earlier =
            row_equal(matrix.entries[i], matrix.entries[j]) && j < i;
        if (dominated_by(matrix.entries[i], matrix.entries[j]) ||
            duplicate_of_earlier) {
          alive[i] = false;
          changed = true;
          break;
        }
      }
    }
  }
  CoalitionMatrix out;
  out.col_labels = matrix.col_labels;
  for (std::size_t i = 0; i < n; ++i) {
    if (alive[i]) {
      out.row_labels.push_back(matrix.row_labels[i]);
      out.entries.push_back(matrix.entries[i]);
    }
  }
  return out;
}

MixedSolution solve_2x2_zero_sum(
    const std::array<std::array<double, 2>, 2>& m) {
  // Pure saddle: an entry minimal in its row and maximal in its column.
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double v = m[i][j];
      const bool row_min = v <= m[i][1 - j];
      const bool col_max = v >= m[1 - i][j];
      if (row_min && col_max) {
        MixedSolution out;
        out.row_mixture = {i == 0 ? 1.0 : 0.0, i == 0 ? 0.0 : 1.0};
        out.col_mixture = {j == 0 ? 1.0 : 0.0, j == 0 ? 0.0 : 1.0};
        out.value = v;
        return out;
      }
    }
  }
  const double denom = m[0][0] + m[1][1] - m[0][1] - m[1][0];
  if (denom == 0.0) {
    throw DegenerateError("2x2 game has neither a saddle point nor an "
                          "interior solution");
  }
  MixedSolution out;
  const double x = (m[1][1] - m[1][0]) / denom;
  const double y = (m[1][1] - m[0][1]) / denom;
  out.row_mixture = {x, 1.0 - x};
  out.col_mixture = {y, 1.0 - y};
  out.value = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / denom;
  return out;
}

std::map<CoalitionSpec, double> classical_coalition_values() {
  std::map<CoalitionSpec, double> values;
  const std::array<std::array<Player, 2>, 3> pairs = {{
      {Player::kA, Player::kB},
      {Player::kA, Player::kC},
      {Player::kB, Player::kC},
  }};
  for (const auto& pair : pairs) {
    const CoalitionSpec coalition({pair[0], pair[1]});
    const CoalitionMatrix reduced =
        eliminate_dominated(coalition_matrix(coalition));
    if (reduced.entries.size() != 2) {
      throw DegenerateError("reduced coalition matrix is not 2x2");
    }
    const std::array<std::array<double, 2>, 2> m = {reduced.entries[0],
                                                    reduced.entries[1]};
    const MixedSolution solution = solve_2x2_zero_sum(m);
    values.emplace(coalition, solution.value);
    // The full game is zero-sum, so the left-out player's value is the
    // negative of the pair's.
    const CoalitionSpec singleton({coalition.odd_man()});
    values.emplace(singleton, -solution.value);
  }
  return values;
}

}  // namespace qcoop
