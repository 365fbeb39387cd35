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

#ifndef QCOOP_LINALG_HPP_
#define QCOOP_LINALG_HPP_

#include <array>
#include <complex>

namespace qcoop {

using Complex = std::complex<double>;

// Absolute entrywise tolerance for matrix equality and Hermiticity checks.
inline constexpr double kEntryTolerance = 1e-12;

// Dense 2x2 complex matrix, the single-qubit operator type.
class Matrix2 {
 public:
  Matrix2() = default;

  Complex& operator()(int row, int col) { return e_[row * 2 + col]; }
  const Complex& operator()(int row, int col) const { return e_[row * 2 + col]; }

  static Matrix2 identity();
  // The inversion (spin-flip) operator: |1> <-> |2>.
  static Matrix2 flip();

 private:
  std::array<Complex, 4> e_{};
};

// Dense 8x8 complex matrix over the three-qubit Hilbert space.
//
// Row/column indices follow the big-endian basis convention: the basis
// vector |ijk> (i, j, k in {1, 2}; i for player A, j for B, k for C) sits
// at index 4*(i-1) + 2*(j-1) + (k-1). Index 0 is |111>, index 7 is |222>,
// and player A owns the most significant bit.
class Matrix8 {
 public:
  static constexpr int kDim = 8;

  Matrix8() = default;

  Complex& operator()(int row, int col) { return e_[row * kDim + col]; }
  const Complex& operator()(int row, int col) const {
    return e_[row * kDim + col];
  }

  static Matrix8 zero();
  static Matrix8 identity();
  // Diagonal matrix with the given real entries, in basis-index order.
  static Matrix8 diagonal(const std::array<double, kDim>& entries);

  bool is_finite() const;

 private:
  std::array<Complex, kDim * kDim> e_{};
};

Matrix8 operator+(const Matrix8& a, const Matrix8& b);
Matrix8 operator*(double scalar, const Matrix8& m);

// Kronecker product a (x) b (x) c with a as the most significant factor,
// so that entry indices follow the Matrix8 basis convention.
Matrix8 kron(const Matrix2& a, const Matrix2& b, const Matrix2& c);

Matrix8 mul(const Matrix8& a, const Matrix8& b);

// Conjugate transpose.
Matrix8 dagger(const Matrix8& a);

// Tr(a * b) without materializing the product.
Complex trace_of_product(const Matrix8& a, const Matrix8& b);

Complex trace(const Matrix8& m);

double max_abs_diff(const Matrix8& a, const Matrix8& b);
bool approx_equal(const Matrix8& a, const Matrix8& b,
                  double tol = kEntryTolerance);
bool is_hermitian(const Matrix8& m, double tol = kEntryTolerance);

// Eigenvalues of a Hermitian matrix, ascending. Cyclic Jacobi with complex
// rotations; the input is symmetrized first, so deviations from exact
// Hermiticity within kEntryTolerance do not disturb the result.
std::array<double, Matrix8::kDim> hermitian_eigenvalues(const Matrix8& m);

}  // namespace qcoop

#endif  // QCOOP_LINALG_HPP_
