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

#include "qcoop/channel.hpp"

#include <cmath>
#include <cstdio>

#include "qcoop/errors.hpp"

namespace qcoop {

const std::array<std::string, 8> kBasisLabels = {
    "111", "112", "121", "122", "211", "212", "221", "222"};

int basis_index(int i, int j, int k) {
  return 4 * (i - 1) + 2 * (j - 1) + (k - 1);
}

ThreeQubitState ThreeQubitState::basis(int i, int j, int k) {
  std::array<Complex, 8> amps{};
  amps[basis_index(i, j, k)] = 1.0;
  return ThreeQubitState(amps);
}

ThreeQubitState make_state(const std::array<Complex, 8>& amplitudes) {
  double norm = 0.0;
  for (const Complex& c : amplitudes) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw DomainError("state amplitude is not finite");
    }
    norm += std::norm(c);
  }
  if (std::abs(norm - 1.0) > kNormTolerance) {
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "state is not normalized: squared norm is %.12g", norm);
    throw NormalizationError(buf, norm);
  }
  return ThreeQubitState(amplitudes);
}

DensityMatrix DensityMatrix::validated(const Matrix8& m) {
  if (!m.is_finite()) {
    throw DomainError("density matrix has non-finite entries");
  }
  if (!is_hermitian(m, kEntryTolerance)) {
    throw DomainError("density matrix is not Hermitian");
  }
  const Complex tr = trace(m);
  if (std::abs(tr - Complex(1.0)) > kEntryTolerance) {
    throw DomainError("density matrix trace differs from 1");
  }
  const auto eig = hermitian_eigenvalues(m);
  if (eig.front() < kPsdFloor) {
    throw DomainError("density matrix is not positive semidefinite");
  }
  return DensityMatrix(m);
}

StrategyProfile::StrategyProfile(double p, double q, double r)
    : p_(p), q_(q), r_(r) {
  for (double v : {p, q, r}) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
      throw DomainError("strategy probability outside [0, 1]");
    }
  }
}

Matrix2 local_operator_matrix(LocalOperator op) {
  return op == LocalOperator::kIdentity ? Matrix2::identity() : Matrix2::flip();
}

DensityMatrix density_of(const ThreeQubitState& state) {
  Matrix8 m;
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c)
      m(r, c) = state.amplitude(r) * std::conj(state.amplitude(c));
  return DensityMatrix::validated(m);
}

DensityMatrix apply_strategy_channel(const DensityMatrix& rho_in,
                                     const StrategyProfile& profile) {
  const LocalOperator choices[2] = {LocalOperator::kIdentity,
                                    LocalOperator::kFlip};
  const double pr_a[2] = {profile.p(), 1.0 - profile.p()};
  const double pr_b[2] = {profile.q(), 1.0 - profile.q()};
  const double pr_c[2] = {profile.r(), 1.0 - profile.r()};

  Matrix8 acc = Matrix8::zero();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        const Matrix8 u = kron(local_operator_matrix(choices[a]),
                               local_operator_matrix(choices[b]),
                               local_operator_matrix(choices[c]));
        const double weight = pr_a[a] * pr_b[b] * pr_c[c];
        acc = acc + weight * mul(mul(u, rho_in.matrix()), dagger(u));
      }
    }
  }
  return DensityMatrix::validated(acc);
}

}  // namespace qcoop
