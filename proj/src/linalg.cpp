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

#include "qcoop/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace qcoop {

namespace {
constexpr int kDim = Matrix8::kDim;
}  // namespace

Matrix2 Matrix2::identity() {
  Matrix2 m;
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  return m;
}

Matrix2 Matrix2::flip() {
  Matrix2 m;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

Matrix8 Matrix8::zero() { return Matrix8(); }

Matrix8 Matrix8::identity() {
  Matrix8 m;
  for (int i = 0; i < kDim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix8 Matrix8::diagonal(const std::array<double, kDim>& entries) {
  Matrix8 m;
  for (int i = 0; i < kDim; ++i) m(i, i) = entries[i];
  return m;
}

bool Matrix8::is_finite() const {
  for (const Complex& v : e_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

Matrix8 operator+(const Matrix8& a, const Matrix8& b) {
  Matrix8 out;
  for (int r = 0; r < kDim; ++r)
    for (int c = 0; c < kDim; ++c) out(r, c) = a(r, c) + b(r, c);
  return out;
}

Matrix8 operator*(double scalar, const Matrix8& m) {
  Matrix8 out;
  for (int r = 0; r < kDim; ++r)
    for (int c = 0; c < kDim; ++c) out(r, c) = scalar * m(r, c);
  return out;
}

Matrix8 kron(const Matrix2& a, const Matrix2& b, const Matrix2& c) {
  Matrix8 out;
  for (int ia = 0; ia < 2; ++ia)
    for (int ib = 0; ib < 2; ++ib)
      for (int ic = 0; ic < 2; ++ic)
        for (int ja = 0; ja < 2; ++ja)
          for (int jb = 0; jb < 2; ++jb)
            for (int jc = 0; jc < 2; ++jc)
              out(4 * ia + 2 * ib + ic, 4 * ja + 2 * jb + jc) =
                  a(ia, ja) * b(ib, jb) * c(ic, jc);
  return out;
}

Matrix8 mul(const Matrix8& a, const Matrix8& b) {
  Matrix8 out;
  for (int r = 0; r < kDim; ++r) {
    for (int c = 0; c < kDim; ++c) {
      Complex acc = 0.0;
      for (int k = 0; k < kDim; ++k) acc += a(r, k) * b(k, c);
      out(r, c) = acc;
    }
  }
  return out;
}

Matrix8 dagger(const Matrix8& a) {
  Matrix8 out;
  for (int r = 0; r < kDim; ++r)
    for (int c = 0; c < kDim; ++c) out(r, c) = std::conj(a(c, r));
  return out;
}

Complex trace_of_product(const Matrix8& a, const Matrix8& b) {
  Complex acc = 0.0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) acc += a(i, j) * b(j, i);
  return acc;
}

Complex trace(const Matrix8& m) {
  Complex acc = 0.0;
  for (int i = 0; i < kDim; ++i) acc += m(i, i);
  return acc;
}

double max_abs_diff(const Matrix8& a, const Matrix8& b) {
  double worst = 0.0;
  for (int r = 0; r < kDim; ++r)
    for (int c = 0; c < kDim; ++c)
      worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  return worst;
}

bool approx_equal(const Matrix8& a, const Matrix8& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

bool is_hermitian(const Matrix8& m, double tol) {
  for (int r = 0; r < kDim; ++r)
    for (int c = 0; c < kDim; ++c)
      if (std::abs(m(r, c) - std::conj(m(c, r))) > tol) return false;
  return true;
}

std::array<double, kDim> hermitian_eigenvalues(const Matrix8& m) {
  // Work on the Hermitian part so sub-tolerance asymmetry cannot leak in.
  Matrix8 a;
  for (int r = 0; r < kDim; ++r)
    for (int c = 0; c < kDim; ++c)
      a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));

  auto off_norm = [&a]() {
    double s = 0.0;
    for (int r = 0; r < kDim; ++r)
      for (int c = r + 1; c < kDim; ++c) s += std::norm(a(r, c));
    return std::sqrt(s);
  };

  double scale = 0.0;
  for (int r = 0; r < kDim; ++r)
    for (int c = 0; c < kDim; ++c) scale = std::max(scale, std::abs(a(r, c)));
  const double stop = std::max(scale, 1.0) * 1e-15;

  for (int sweep = 0; sweep < 100 && off_norm() > stop; ++sweep) {
    for (int p = 0; p < kDim; ++p) {
      for (int q = p + 1; q < kDim; ++q) {
        const double apq_abs = std::abs(a(p, q));
        if (apq_abs <= stop * 1e-2) continue;
        const Complex phase = a(p, q) / apq_abs;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Angle zeroing the (p, q) entry of the rotated 2x2 block.
        const double theta = 0.5 * std::atan2(2.0 * apq_abs, app - aqq);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        const Complex sp = s * phase;          // applied on the p side
        const Complex spc = s * std::conj(phase);

        // Column update: A <- A V with V(p,p)=c, V(p,q)=-s*phase,
        // V(q,p)=s*conj(phase), V(q,q)=c.
        for (int i = 0; i < kDim; ++i) {
          const Complex aip = a(i, p);
          const Complex aiq = a(i, q);
          a(i, p) = c * aip + spc * aiq;
          a(i, q) = -sp * aip + c * aiq;
        }
        // Row update: A <- V^dagger A.
        for (int i = 0; i < kDim; ++i) {
          const Complex api = a(p, i);
          const Complex aqi = a(q, i);
          a(p, i) = c * api + sp * aqi;
          a(q, i) = -spc * api + c * aqi;
        }
      }
    }
  }

  std::array<double, kDim> eig;
  for (int i = 0; i < kDim; ++i) eig[i] = a(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace qcoop
