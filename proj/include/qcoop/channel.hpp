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

#ifndef QCOOP_CHANNEL_HPP_
#define QCOOP_CHANNEL_HPP_

#include <array>
#include <string>

#include "qcoop/linalg.hpp"

namespace qcoop {

// |norm - 1| bound accepted by make_state.
inline constexpr double kNormTolerance = 1e-9;
// Eigenvalue floor accepted by the positive-semidefiniteness check.
inline constexpr double kPsdFloor = -1e-9;

// Basis labels in index order: label "ijk" sits at index
// 4*(i-1) + 2*(j-1) + (k-1).
extern const std::array<std::string, 8> kBasisLabels;

// Index of the basis vector |ijk>, each label in {1, 2}.
int basis_index(int i, int j, int k);

// Pure state of the three-qubit system handed out by the arbiter.
// Amplitudes are stored in basis-index order (|111> first, |222> last)
// and must be normalized; no renormalization is ever applied.
class ThreeQubitState {
 public:
  const std::array<Complex, 8>& amplitudes() const { return amps_; }
  const Complex& amplitude(int index) const { return amps_[index]; }

  // The single basis state |ijk>.
  static ThreeQubitState basis(int i, int j, int k);

 private:
  friend ThreeQubitState make_state(const std::array<Complex, 8>& amplitudes);
  explicit ThreeQubitState(const std::array<Complex, 8>& amps) : amps_(amps) {}
  std::array<Complex, 8> amps_;
};

// Validates and wraps the amplitude vector.
// Throws DomainError on non-finite entries and NormalizationError when
// the squared norm differs from 1 by more than kNormTolerance.
ThreeQubitState make_state(const std::array<Complex, 8>& amplitudes);

// An 8x8 density matrix: Hermitian, unit trace, positive semidefinite.
// Every instance has passed validation.
class DensityMatrix {
 public:
  const Matrix8& matrix() const { return m_; }

  // Checks the three invariants (Hermitian within kEntryTolerance, trace
  // within kEntryTolerance of 1, eigenvalues above kPsdFloor) and throws
  // DomainError naming the first violated one.
  static DensityMatrix validated(const Matrix8& m);

 private:
  explicit DensityMatrix(const Matrix8& m) : m_(m) {}
  Matrix8 m_;
};

// Per-player probabilities of applying the identity operator; the flip
// operator is applied with the complementary probability.
class StrategyProfile {
 public:
  // Throws DomainError unless each probability is finite and in [0, 1].
  StrategyProfile(double p, double q, double r);

  double p() const { return p_; }
  double q() const { return q_; }
  double r() const { return r_; }

 private:
  double p_, q_, r_;
};

// The two operators a player can apply.
enum class LocalOperator { kIdentity, kFlip };

Matrix2 local_operator_matrix(LocalOperator op);

// Outer product |psi><psi| of a pure state.
DensityMatrix density_of(const ThreeQubitState& state);

// The strategy channel: the convex combination, over all eight operator
// choices (I or flip per player), of U rho U^dagger weighted by the
// product of the players' choice probabilities.
DensityMatrix apply_strategy_channel(const DensityMatrix& rho_in,
                                     const StrategyProfile& profile);

}  // namespace qcoop

#endif  // QCOOP_CHANNEL_HPP_
