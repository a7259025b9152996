// Copyright 2026 The qwalk authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "qwalk/tolerances.hpp"

namespace qwalk {

using cplx = std::complex<double>;

//============================================================================
// 2x2 complex matrices
//============================================================================

struct Mat2 {
  // Row-major entries.
  std::array<cplx, 4> a{};

  cplx& operator()(int i, int j) { return a[static_cast<std::size_t>(2 * i + j)]; }
  const cplx& operator()(int i, int j) const { return a[static_cast<std::size_t>(2 * i + j)]; }

  static Mat2 zero() { return Mat2{}; }
  static Mat2 identity() { return Mat2{{cplx(1), cplx(0), cplx(0), cplx(1)}}; }
  static Mat2 diag(cplx d0, cplx d1) { return Mat2{{d0, cplx(0), cplx(0), d1}}; }

  Mat2 adjoint() const {
    return Mat2{{std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])}};
  }
  cplx trace() const { return a[0] + a[3]; }
  cplx det() const { return a[0] * a[3] - a[1] * a[2]; }

  double frobenius_norm() const {
    double s = 0;
    for (const auto& x : a) s += std::norm(x);
    return std::sqrt(s);
  }
  double max_abs() const {
    double m = 0;
    for (const auto& x : a) m = std::max(m, std::abs(x));
    return m;
  }
  bool is_finite() const {
    for (const auto& x : a)
      if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
    return true;
  }
};

inline Mat2 operator+(const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (int i = 0; i < 4; ++i) r.a[static_cast<std::size_t>(i)] = x.a[static_cast<std::size_t>(i)] + y.a[static_cast<std::size_t>(i)];
  return r;
}

inline Mat2 operator-(const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (int i = 0; i < 4; ++i) r.a[static_cast<std::size_t>(i)] = x.a[static_cast<std::size_t>(i)] - y.a[static_cast<std::size_t>(i)];
  return r;
}

inline Mat2 operator*(const Mat2& x, const Mat2& y) {
  Mat2 r;
  r.a[0] = x.a[0] * y.a[0] + x.a[1] * y.a[2];
  r.a[1] = x.a[0] * y.a[1] + x.a[1] * y.a[3];
  r.a[2] = x.a[2] * y.a[0] + x.a[3] * y.a[2];
  r.a[3] = x.a[2] * y.a[1] + x.a[3] * y.a[3];
  return r;
}

inline Mat2 operator*(cplx s, const Mat2& x) {
  Mat2 r;
  for (int i = 0; i < 4; ++i) r.a[static_cast<std::size_t>(i)] = s * x.a[static_cast<std::size_t>(i)];
  return r;
}

// Hilbert-Schmidt inner product <A,B> = Tr(A* B) and the norm it induces.
inline cplx hs_inner(const Mat2& x, const Mat2& y) {
  cplx s = 0;
  for (int i = 0; i < 4; ++i) s += std::conj(x.a[static_cast<std::size_t>(i)]) * y.a[static_cast<std::size_t>(i)];
  return s;
}
inline double hs_norm(const Mat2& x) { return x.frobenius_norm(); }

//============================================================================
// Pauli basis {sigma_0 = I, sigma_1 = X, sigma_2 = Y, sigma_3 = Z}
//============================================================================

const Mat2& pauli_matrix(int i);

// Coefficients of an element of L(H_2) in the Pauli basis:
// m = r0*I + r1*X + r2*Y + r3*Z.
struct PauliVector {
  std::array<cplx, 4> r{};

  cplx& operator[](int i) { return r[static_cast<std::size_t>(i)]; }
  const cplx& operator[](int i) const { return r[static_cast<std::size_t>(i)]; }

  double max_abs() const {
    double m = 0;
    for (const auto& x : r) m = std::max(m, std::abs(x));
    return m;
  }
};

// r0 = Tr(m)/2 exactly; round trip with pauli_compose is identity to roundoff.
PauliVector pauli_decompose(const Mat2& m);
Mat2 pauli_compose(const PauliVector& v);

//============================================================================
// 4x4 complex matrices (superoperators in the Pauli basis)
//============================================================================

struct Mat4 {
  std::array<cplx, 16> a{};

  cplx& operator()(int i, int j) { return a[static_cast<std::size_t>(4 * i + j)]; }
  const cplx& operator()(int i, int j) const { return a[static_cast<std::size_t>(4 * i + j)]; }

  static Mat4 zero() { return Mat4{}; }
  static Mat4 identity() {
    Mat4 r;
    for (int i = 0; i < 4; ++i) r(i, i) = 1.0;
    return r;
  }
  static Mat4 diag(cplx d0, cplx d1, cplx d2, cplx d3) {
    Mat4 r;
    r(0, 0) = d0;
    r(1, 1) = d1;
    r(2, 2) = d2;
    r(3, 3) = d3;
    return r;
  }

  cplx trace() const { return a[0] + a[5] + a[10] + a[15]; }
  double frobenius_norm() const {
    double s = 0;
    for (const auto& x : a) s += std::norm(x);
    return std::sqrt(s);
  }
  bool is_finite() const {
    for (const auto& x : a)
      if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
    return true;
  }
};

inline Mat4 operator*(const Mat4& x, const Mat4& y) {
  Mat4 r;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      cplx s = 0;
      for (int l = 0; l < 4; ++l) s += x(i, l) * y(l, j);
      r(i, j) = s;
    }
  }
  return r;
}

inline Mat4 operator-(const Mat4& x, const Mat4& y) {
  Mat4 r;
  for (int i = 0; i < 16; ++i) r.a[static_cast<std::size_t>(i)] = x.a[static_cast<std::size_t>(i)] - y.a[static_cast<std::size_t>(i)];
  return r;
}

inline PauliVector operator*(const Mat4& m, const PauliVector& v) {
  PauliVector r;
  for (int i = 0; i < 4; ++i) {
    cplx s = 0;
    for (int j = 0; j < 4; ++j) s += m(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

// Determinant via LU with partial pivoting.
cplx det4(const Mat4& m);

// Solve m*x = rhs. Throws numeric_error on a (numerically) singular system.
PauliVector solve4(const Mat4& m, const PauliVector& rhs);

//============================================================================
// Degree <= 4 polynomials and their roots
//============================================================================

struct Poly4 {
  // c[i] is the coefficient of z^i.
  std::array<cplx, 5> c{};

  cplx eval(cplx z) const {
    cplx s = c[4];
    for (int i = 3; i >= 0; --i) s = s * z + c[static_cast<std::size_t>(i)];
    return s;
  }
  cplx deriv(cplx z) const {
    cplx s = 4.0 * c[4];
    for (int i = 3; i >= 1; --i) s = s * z + static_cast<double>(i) * c[static_cast<std::size_t>(i)];
    return s;
  }
  double max_abs_coeff() const {
    double m = 0;
    for (const auto& x : c) m = std::max(m, std::abs(x));
    return m;
  }
  // Effective degree after demoting negligible leading coefficients.
  int degree(double rel_tol = 1e-13) const;
};

// Monic characteristic polynomial det(lambda I - m) = lambda^4 + a3 lambda^3
// + a2 lambda^2 + a1 lambda + a0, returned as {a0, a1, a2, a3}.
std::array<cplx, 4> char_poly4(const Mat4& m);

// g(z) = det(I - z*m) as a polynomial in z; g(0) = 1 always.
Poly4 det_poly(const Mat4& m);

// All roots of p, counted with multiplicity (degree-many of them).
// Solved via the companion matrix of the monic polynomial with a shifted
// complex QR iteration, then one guarded Newton step per root.
std::vector<cplx> poly_roots(const Poly4& p, const Tolerances& tol = default_tolerances());

// Eigenvalues of m with algebraic multiplicity: roots of the characteristic
// polynomial, clustered to the tolerance radius so exactly coincident
// eigenvalues are reported as equal values.
std::array<cplx, 4> eigenvalues4(const Mat4& m, const Tolerances& tol = default_tolerances());

// Rank of m under rank-revealing Gaussian elimination with full pivoting;
// pivots below threshold * (largest initial pivot) count as zero.
int rank4(const Mat4& m, double threshold);

}  // namespace qwalk
