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
#include <random>

#include "qcoop/linalg.hpp"

namespace qcoop {
namespace {

Matrix8 random_matrix(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Matrix8 m;
  for (int r = 0; r < Matrix8::kDim; ++r) {
    for (int c = 0; c < Matrix8::kDim; ++c) {
      m(r, c) = Complex(unit(rng), unit(rng));
    }
  }
  return m;
}

Matrix8 basis_projector(int k) {
  Matrix8 m = Matrix8::zero();
  m(k, k) = 1.0;
  return m;
}

// All eight local operator combinations, indexed by the flip bitmask
// (bit 2 = first factor, bit 1 = second, bit 0 = third).
Matrix8 flip_combination(int mask) {
  const Matrix2 id = Matrix2::identity();
  const Matrix2 fl = Matrix2::flip();
  return kron((mask & 4) ? fl : id, (mask & 2) ? fl : id,
              (mask & 1) ? fl : id);
}

TEST_CASE("kron of identities is the identity") {
  CHECK(approx_equal(flip_combination(0), Matrix8::identity()));
}

TEST_CASE("kron puts the first factor on the most significant bit") {
  const Matrix8 m = flip_combination(4);
  // Swaps basis indices 0<->4, 1<->5, 2<->6, 3<->7.
  for (int j = 0; j < 8; ++j) {
    CHECK(m(j ^ 4, j) == Complex(1.0, 0.0));
    CHECK(m(j, j) == Complex(0.0, 0.0));
  }
}

TEST_CASE("kron of three flips reverses the basis") {
  const Matrix8 m = flip_combination(7);
  for (int j = 0; j < 8; ++j) {
    CHECK(m(7 - j, j) == Complex(1.0, 0.0));
  }
}

TEST_CASE("kron follows the big-endian index convention") {
  // Every combination acts as the permutation j -> j XOR mask.
  for (int mask = 0; mask < 8; ++mask) {
    const Matrix8 m = flip_combination(mask);
    for (int j = 0; j < 8; ++j) {
      for (int i = 0; i < 8; ++i) {
        const Complex expected = (i == (j ^ mask)) ? 1.0 : 0.0;
        CHECK(std::abs(m(i, j) - expected) <= kEntryTolerance);
      }
    }
  }
}

TEST_CASE("mul by the identity is a no-op") {
  std::mt19937_64 rng(7);
  const Matrix8 x = random_matrix(rng);
  CHECK(approx_equal(mul(Matrix8::identity(), x), x));
  CHECK(approx_equal(mul(x, Matrix8::identity()), x));
}

TEST_CASE("local operator combinations are unitary") {
  for (int mask = 0; mask < 8; ++mask) {
    const Matrix8 u = flip_combination(mask);
    CHECK(approx_equal(mul(u, dagger(u)), Matrix8::identity()));
  }
}

TEST_CASE("product of a diagonal with itself squares the entries") {
  const Matrix8 d = Matrix8::diagonal({0, -2, 1, 1, -2, 1, 1, 0});
  const Matrix8 expected = Matrix8::diagonal({0, 4, 1, 1, 4, 1, 1, 0});
  CHECK(approx_equal(mul(d, d), expected));
}

TEST_CASE("dagger of the identity is the identity") {
  CHECK(approx_equal(dagger(Matrix8::identity()), Matrix8::identity()));
}

TEST_CASE("dagger is an involution") {
  std::mt19937_64 rng(11);
  const Matrix8 x = random_matrix(rng);
  CHECK(approx_equal(dagger(dagger(x)), x));
}

TEST_CASE("single-flip combination is Hermitian") {
  const Matrix8 u = flip_combination(4);
  CHECK(approx_equal(dagger(u), u));
  CHECK(is_hermitian(u));
}

TEST_CASE("trace of identity times a unit-trace matrix is one") {
  Matrix8 rho = Matrix8::zero();
  rho(0, 0) = 0.5;
  rho(7, 7) = 0.5;
  rho(0, 7) = 0.5;
  rho(7, 0) = 0.5;
  const Complex tr = trace_of_product(Matrix8::identity(), rho);
  CHECK(std::abs(tr - Complex(1.0, 0.0)) <= kEntryTolerance);
}

TEST_CASE("trace against a projector picks one diagonal entry") {
  const std::array<double, 8> d = {0.25, -1, 3, 0.5, -2, 7, 1, 0};
  const Matrix8 dm = Matrix8::diagonal(d);
  for (int k = 0; k < 8; ++k) {
    const Complex tr = trace_of_product(dm, basis_projector(k));
    CHECK(std::abs(tr - Complex(d[k], 0.0)) <= kEntryTolerance);
  }
}

TEST_CASE("trace reads the loser entry of the first-player operator") {
  // Player A's diagonal in basis order; |211> sits at index 4.
  const Matrix8 d = Matrix8::diagonal({0, 1, 1, -2, -2, 1, 1, 0});
  const Complex tr = trace_of_product(d, basis_projector(4));
  CHECK(std::abs(tr - Complex(-2.0, 0.0)) <= kEntryTolerance);
}

TEST_CASE("trace_of_product is linear in each argument") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix8 x = random_matrix(rng);
    const Matrix8 y = random_matrix(rng);
    const Matrix8 z = random_matrix(rng);
    const double a = 0.375;
    const double b = -1.25;
    const Complex lhs = trace_of_product(a * x + b * y, z);
    const Complex rhs =
        a * trace_of_product(x, z) + b * trace_of_product(y, z);
    CHECK(std::abs(lhs - rhs) <= 1e-12);
    const Complex lhs2 = trace_of_product(z, a * x + b * y);
    const Complex rhs2 =
        a * trace_of_product(z, x) + b * trace_of_product(z, y);
    CHECK(std::abs(lhs2 - rhs2) <= 1e-12);
  }
}

TEST_CASE("trace_of_product matches trace of mul") {
  std::mt19937_64 rng(29);
  const Matrix8 x = random_matrix(rng);
  const Matrix8 y = random_matrix(rng);
  CHECK(std::abs(trace_of_product(x, y) - trace(mul(x, y))) <= 1e-12);
}

TEST_CASE("eigenvalues of a diagonal matrix are its sorted entries") {
  const Matrix8 d = Matrix8::diagonal({0, 1, 1, -2, -2, 1, 1, 0});
  const auto eig = hermitian_eigenvalues(d);
  const std::array<double, 8> expected = {-2, -2, 0, 0, 1, 1, 1, 1};
  for (int k = 0; k < 8; ++k) {
    CHECK(eig[k] == doctest::Approx(expected[k]).epsilon(1e-12));
  }
}

TEST_CASE("eigenvalues of a rank-one projector are one and zeros") {
  Matrix8 rho = Matrix8::zero();
  rho(0, 0) = 0.5;
  rho(7, 7) = 0.5;
  rho(0, 7) = 0.5;
  rho(7, 0) = 0.5;
  const auto eig = hermitian_eigenvalues(rho);
  for (int k = 0; k < 7; ++k) {
    CHECK(std::abs(eig[k]) <= 1e-12);
  }
  CHECK(eig[7] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eigenvalues reproduce trace and Frobenius invariants") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix8 x = random_matrix(rng);
    const Matrix8 h = 0.5 * (x + dagger(x));
    const auto eig = hermitian_eigenvalues(h);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (double v : eig) {
      sum += v;
      sum_sq += v * v;
    }
    CHECK(sum == doctest::Approx(trace(h).real()).epsilon(1e-9));
    CHECK(sum_sq ==
          doctest::Approx(trace_of_product(h, h).real()).epsilon(1e-9));
  }
}

TEST_CASE("approx_equal distinguishes matrices beyond tolerance") {
  Matrix8 a = Matrix8::identity();
  Matrix8 b = Matrix8::identity();
  CHECK(approx_equal(a, b));
  b(3, 5) = 1e-11;
  CHECK_FALSE(approx_equal(a, b));
  CHECK(max_abs_diff(a, b) == doctest::Approx(1e-11));
}

}  // namespace
}  // namespace qcoop
