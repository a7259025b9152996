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

#include "qwalk/complex_linalg.hpp"

#include <algorithm>
#include <cstddef>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

//============================================================================
// Pauli basis
//============================================================================

const Mat2& pauli_matrix(int i) {
  static const std::array<Mat2, 4> sigma = {
      Mat2{{cplx(1), cplx(0), cplx(0), cplx(1)}},    // I
      Mat2{{cplx(0), cplx(1), cplx(1), cplx(0)}},    // X
      Mat2{{cplx(0), cplx(0, -1), cplx(0, 1), cplx(0)}},  // Y
      Mat2{{cplx(1), cplx(0), cplx(0), cplx(-1)}},   // Z
  };
  return sigma[static_cast<std::size_t>(i)];
}

PauliVector pauli_decompose(const Mat2& m) {
  PauliVector v;
  v[0] = 0.5 * (m(0, 0) + m(1, 1));
  v[1] = 0.5 * (m(0, 1) + m(1, 0));
  v[2] = 0.5 * cplx(0, 1) * (m(0, 1) - m(1, 0));
  v[3] = 0.5 * (m(0, 0) - m(1, 1));
  return v;
}

Mat2 pauli_compose(const PauliVector& v) {
  Mat2 m;
  m(0, 0) = v[0] + v[3];
  m(1, 1) = v[0] - v[3];
  m(0, 1) = v[1] - cplx(0, 1) * v[2];
  m(1, 0) = v[1] + cplx(0, 1) * v[2];
  return m;
}

//============================================================================
// LU-based 4x4 helpers
//============================================================================

namespace {

// In-place LU with partial pivoting. Returns the permutation sign, pivot
// magnitudes end up on the diagonal of `a`. No throw: a zero pivot simply
// yields a zero determinant.
int lu_decompose(std::array<cplx, 16>& a, std::array<int, 4>& perm) {
  int sign = 1;
  for (int i = 0; i < 4; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    double best = std::abs(a[static_cast<std::size_t>(4 * col + col)]);
    for (int r = col + 1; r < 4; ++r) {
      double v = std::abs(a[static_cast<std::size_t>(4 * r + col)]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (piv != col) {
      for (int j = 0; j < 4; ++j)
        std::swap(a[static_cast<std::size_t>(4 * piv + j)], a[static_cast<std::size_t>(4 * col + j)]);
      std::swap(perm[static_cast<std::size_t>(piv)], perm[static_cast<std::size_t>(col)]);
      sign = -sign;
    }
    const cplx d = a[static_cast<std::size_t>(4 * col + col)];
    if (d == cplx(0)) continue;
    for (int r = col + 1; r < 4; ++r) {
      const cplx f = a[static_cast<std::size_t>(4 * r + col)] / d;
      a[static_cast<std::size_t>(4 * r + col)] = f;
      for (int j = col + 1; j < 4; ++j)
        a[static_cast<std::size_t>(4 * r + j)] -= f * a[static_cast<std::size_t>(4 * col + j)];
    }
  }
  return sign;
}

}  // namespace

cplx det4(const Mat4& m) {
  std::array<cplx, 16> a = m.a;
  std::array<int, 4> perm;
  const int sign = lu_decompose(a, perm);
  cplx d = static_cast<double>(sign);
  for (int i = 0; i < 4; ++i) d *= a[static_cast<std::size_t>(4 * i + i)];
  return d;
}

PauliVector solve4(const Mat4& m, const PauliVector& rhs) {
  std::array<cplx, 16> a = m.a;
  std::array<int, 4> perm;
  lu_decompose(a, perm);
  double scale = 0;
  for (const auto& x : m.a) scale = std::max(scale, std::abs(x));
  for (int i = 0; i < 4; ++i) {
    if (std::abs(a[static_cast<std::size_t>(4 * i + i)]) <= 1e-300 + 1e-16 * scale)
      throw numeric_error("solve4: singular system (pivot " + std::to_string(i) + ")");
  }
  // Permuted forward substitution, then back substitution.
  PauliVector y;
  for (int i = 0; i < 4; ++i) {
    cplx s = rhs[perm[static_cast<std::size_t>(i)]];
    for (int j = 0; j < i; ++j) s -= a[static_cast<std::size_t>(4 * i + j)] * y[j];
    y[i] = s;
  }
  PauliVector x;
  for (int i = 3; i >= 0; --i) {
    cplx s = y[i];
    for (int j = i + 1; j < 4; ++j) s -= a[static_cast<std::size_t>(4 * i + j)] * x[j];
    x[i] = s / a[static_cast<std::size_t>(4 * i + i)];
  }
  return x;
}

//============================================================================
// Characteristic polynomial (Faddeev-LeVerrier)
//============================================================================

std::array<cplx, 4> char_poly4(const Mat4& m) {
  // Faddeev-LeVerrier: p(lambda) = lambda^4 + a3 lambda^3 + ... + a0.
  std::array<cplx, 4> a{};
  Mat4 mn = m;          // M * N_k, starting from N_1 = I
  cplx coeff = -mn.trace();
  a[3] = coeff;
  for (int step = 2; step <= 4; ++step) {
    for (int i = 0; i < 4; ++i) mn(i, i) += coeff;  // N_k = M*N_{k-1} + a I
    mn = m * mn;
    coeff = -mn.trace() / static_cast<double>(step);
    a[static_cast<std::size_t>(4 - step)] = coeff;
  }
  return a;
}

Poly4 det_poly(const Mat4& m) {
  // det(I - z m) = z^4 det((1/z) I - m) = 1 + a3 z + a2 z^2 + a1 z^3 + a0 z^4.
  const auto a = char_poly4(m);
  Poly4 g;
  g.c[0] = 1.0;
  g.c[1] = a[3];
  g.c[2] = a[2];
  g.c[3] = a[1];
  g.c[4] = a[0];
  return g;
}

int Poly4::degree(double rel_tol) const {
  const double scale = max_abs_coeff();
  if (scale == 0) return -1;
  for (int d = 4; d >= 0; --d)
    if (std::abs(c[static_cast<std::size_t>(d)]) > rel_tol * scale) return d;
  return -1;
}

//============================================================================
// Shifted complex QR on an upper Hessenberg matrix (n <= 4)
//============================================================================

namespace {

struct Givens {
  double c;
  cplx s;
};

// Unitary [[c, s], [-conj(s), c]] with (f, g) -> (r, 0).
Givens make_givens(cplx f, cplx g) {
  const double af = std::abs(f);
  const double ag = std::abs(g);
  if (ag == 0) return {1.0, cplx(0)};
  if (af == 0) return {0.0, std::conj(g) / ag};
  const double d = std::hypot(af, ag);
  const cplx fs = f / af;
  return {af / d, fs * std::conj(g) / d};
}

void eig2(cplx a, cplx b, cplx c, cplx d, cplx& l1, cplx& l2) {
  const cplx m = 0.5 * (a + d);
  const cplx disc = std::sqrt(m * m - (a * d - b * c));
  l1 = m + disc;
  l2 = m - disc;
}

// Eigenvalues of the leading n x n upper Hessenberg block of h (stride 4).
// Explicit shifted QR with deflation; throws on non-convergence.
std::vector<cplx> hessenberg_eigs(std::array<cplx, 16> h, int n, int max_iters) {
  auto at = [&h](int i, int j) -> cplx& { return h[static_cast<std::size_t>(4 * i + j)]; };
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(n));
  int hi = n - 1;
  int iters = 0;
  while (hi >= 0) {
    // Find the top of the active unreduced window.
    int lo = hi;
    while (lo > 0) {
      const double sub = std::abs(at(lo, lo - 1));
      const double diag = std::abs(at(lo - 1, lo - 1)) + std::abs(at(lo, lo));
      if (sub <= 1e-15 * diag + 1e-300) {
        at(lo, lo - 1) = 0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      out.push_back(at(hi, hi));
      --hi;
      iters = 0;
      continue;
    }
    if (lo == hi - 1) {
      cplx l1, l2;
      eig2(at(lo, lo), at(lo, hi), at(hi, lo), at(hi, hi), l1, l2);
      out.push_back(l1);
      out.push_back(l2);
      hi -= 2;
      iters = 0;
      continue;
    }
    if (++iters > max_iters)
      throw numeric_error("hessenberg_eigs: QR iteration did not converge");

    // Wilkinson shift from the trailing 2x2; occasionally an exceptional
    // shift to break symmetry stalls.
    cplx mu;
    if (iters % 16 == 0) {
      mu = at(hi, hi) + 0.75 * std::abs(at(hi, hi - 1));
    } else {
      cplx l1, l2;
      eig2(at(hi - 1, hi - 1), at(hi - 1, hi), at(hi, hi - 1), at(hi, hi), l1, l2);
      mu = (std::abs(l1 - at(hi, hi)) < std::abs(l2 - at(hi, hi))) ? l1 : l2;
    }

    for (int i = lo; i <= hi; ++i) at(i, i) -= mu;
    std::array<Givens, 3> rots{};
    for (int i = lo; i < hi; ++i) {
      const Givens g = make_givens(at(i, i), at(i + 1, i));
      rots[static_cast<std::size_t>(i - lo)] = g;
      for (int j = i; j < 4; ++j) {
        const cplx f = at(i, j);
        const cplx v = at(i + 1, j);
        at(i, j) = g.c * f + g.s * v;
        at(i + 1, j) = -std::conj(g.s) * f + g.c * v;
      }
    }
    for (int i = lo; i < hi; ++i) {
      const Givens g = rots[static_cast<std::size_t>(i - lo)];
      for (int r = 0; r <= std::min(i + 1, hi); ++r) {
        const cplx f = at(r, i);
        const cplx v = at(r, i + 1);
        at(r, i) = g.c * f + std::conj(g.s) * v;
        at(r, i + 1) = -g.s * f + g.c * v;
      }
    }
    for (int i = lo; i <= hi; ++i) at(i, i) += mu;
  }
  return out;
}

// Monic coefficients b[0..deg-1]: p(z) = z^deg + sum b[i] z^i.
std::vector<cplx> monic_roots(const std::array<cplx, 4>& b, int deg, const Tolerances& tol) {
  std::vector<cplx> roots;
  if (deg <= 0) return roots;
  if (deg == 1) {
    roots.push_back(-b[0]);
    return roots;
  }
  if (deg == 2) {
    cplx l1, l2;
    // z^2 + b1 z + b0 as the 2x2 companion [[0, -b0], [1, -b1]].
    eig2(cplx(0), -b[0], cplx(1), -b[1], l1, l2);
    roots.push_back(l1);
    roots.push_back(l2);
    return roots;
  }
  std::array<cplx, 16> h{};
  for (int i = 1; i < deg; ++i) h[static_cast<std::size_t>(4 * i + (i - 1))] = 1.0;
  for (int i = 0; i < deg; ++i) h[static_cast<std::size_t>(4 * i + (deg - 1))] = -b[static_cast<std::size_t>(i)];
  return hessenberg_eigs(h, deg, tol.qr_max_iters);
}

void newton_refine(cplx& z, const Poly4& p) {
  const cplx pv = p.eval(z);
  const cplx dv = p.deriv(z);
  if (std::abs(dv) <= 1e-300) return;
  const cplx zn = z - pv / dv;
  if (std::abs(p.eval(zn)) < std::abs(pv)) z = zn;
}

}  // namespace

std::vector<cplx> poly_roots(const Poly4& p, const Tolerances& tol) {
  const int deg = p.degree();
  if (deg < 0) throw validation_error("poly_roots: zero polynomial has no well-defined roots");
  if (deg == 0) return {};

  const cplx lead = p.c[static_cast<std::size_t>(deg)];
  std::array<cplx, 4> b{};
  for (int i = 0; i < deg; ++i) b[static_cast<std::size_t>(i)] = p.c[static_cast<std::size_t>(i)] / lead;

  std::vector<cplx> roots = monic_roots(b, deg, tol);
  for (auto& z : roots) newton_refine(z, p);

  const double bound = tol.root_residual * (1.0 + p.max_abs_coeff());
  for (const auto& z : roots) {
    if (std::abs(p.eval(z)) > bound)
      throw numeric_error("poly_roots: residual above contract at root (" +
                          std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")");
  }
  return roots;
}

namespace {

bool is_upper_triangular(const Mat4& m) {
  for (int i = 1; i < 4; ++i)
    for (int j = 0; j < i; ++j)
      if (m(i, j) != cplx(0)) return false;
  return true;
}

}  // namespace

std::array<cplx, 4> eigenvalues4(const Mat4& m, const Tolerances& tol) {
  if (!m.is_finite()) throw validation_error("eigenvalues4: non-finite entries");

  // Triangular input: the diagonal is exact, and in particular repeated
  // eigenvalues do not suffer the eps^(1/m) smearing of the polynomial route.
  if (is_upper_triangular(m)) {
    std::array<cplx, 4> out = {m(0, 0), m(1, 1), m(2, 2), m(3, 3)};
    std::sort(out.begin(), out.end(), [](const cplx& x, const cplx& y) {
      const double ax = std::abs(x), ay = std::abs(y);
      if (ax != ay) return ax > ay;
      if (x.real() != y.real()) return x.real() > y.real();
      return x.imag() > y.imag();
    });
    return out;
  }

  const auto a = char_poly4(m);
  const Poly4 p{{a[0], a[1], a[2], a[3], cplx(1)}};
  std::vector<cplx> roots = monic_roots({a[0], a[1], a[2], a[3]}, 4, tol);
  for (auto& z : roots) newton_refine(z, p);

  // Cluster within the multiplicity radius and replace members by the
  // cluster mean, so exactly coincident eigenvalues compare equal.
  std::array<int, 4> label{};
  for (int i = 0; i < 4; ++i) label[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (std::abs(roots[static_cast<std::size_t>(i)] - roots[static_cast<std::size_t>(j)]) <= tol.root_cluster) {
        const int li = label[static_cast<std::size_t>(i)];
        const int lj = label[static_cast<std::size_t>(j)];
        for (int l = 0; l < 4; ++l)
          if (label[static_cast<std::size_t>(l)] == lj) label[static_cast<std::size_t>(l)] = li;
      }
    }
  }
  std::array<cplx, 4> out{};
  for (int c = 0; c < 4; ++c) {
    cplx sum = 0;
    int count = 0;
    for (int i = 0; i < 4; ++i) {
      if (label[static_cast<std::size_t>(i)] == c) {
        sum += roots[static_cast<std::size_t>(i)];
        ++count;
      }
    }
    if (count == 0) continue;
    const cplx mean = sum / static_cast<double>(count);
    for (int i = 0; i < 4; ++i)
      if (label[static_cast<std::size_t>(i)] == c) out[static_cast<std::size_t>(i)] = mean;
  }

  std::sort(out.begin(), out.end(), [](const cplx& x, const cplx& y) {
    const double ax = std::abs(x), ay = std::abs(y);
    if (ax != ay) return ax > ay;
    if (x.real() != y.real()) return x.real() > y.real();
    return x.imag() > y.imag();
  });

  // Residual contract: every reported eigenvalue must nearly annihilate the
  // characteristic determinant.
  const double bound = tol.eig_residual * (1.0 + m.frobenius_norm());
  for (const auto& lambda : out) {
    Mat4 shifted = m;
    for (int i = 0; i < 4; ++i) shifted(i, i) -= lambda;
    if (std::abs(det4(shifted)) > bound)
      throw numeric_error("eigenvalues4: residual above contract");
  }
  return out;
}

int rank4(const Mat4& m, double threshold) {
  std::array<cplx, 16> a = m.a;
  auto at = [&a](int i, int j) -> cplx& { return a[static_cast<std::size_t>(4 * i + j)]; };
  double scale = 0;
  for (const auto& x : a) scale = std::max(scale, std::abs(x));
  if (scale == 0) return 0;

  int rank = 0;
  std::array<bool, 4> used_row{}, used_col{};
  for (int step = 0; step < 4; ++step) {
    // Full pivot among unused rows/columns.
    int pr = -1, pc = -1;
    double best = 0;
    for (int i = 0; i < 4; ++i) {
      if (used_row[static_cast<std::size_t>(i)]) continue;
      for (int j = 0; j < 4; ++j) {
        if (used_col[static_cast<std::size_t>(j)]) continue;
        const double v = std::abs(at(i, j));
        if (v > best) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    }
    if (pr < 0 || best <= threshold * scale) break;
    ++rank;
    used_row[static_cast<std::size_t>(pr)] = true;
    used_col[static_cast<std::size_t>(pc)] = true;
    for (int i = 0; i < 4; ++i) {
      if (used_row[static_cast<std::size_t>(i)]) continue;
      const cplx f = at(i, pc) / at(pr, pc);
      for (int j = 0; j < 4; ++j) {
        if (used_col[static_cast<std::size_t>(j)]) continue;
        at(i, j) -= f * at(pr, j);
      }
      at(i, pc) = 0;
    }
  }
  return rank;
}

}  // namespace qwalk
