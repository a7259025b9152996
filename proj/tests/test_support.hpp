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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "qwalk/complex_linalg.hpp"
#include "qwalk/walk_model.hpp"

namespace qwalk::testing {

constexpr double kPi = 3.141592653589793238462643383279502884;

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline cplx random_cplx(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  return {gauss(rng), gauss(rng)};
}

inline Mat2 random_mat2(std::mt19937_64& rng) {
  Mat2 m;
  for (auto& x : m.a) x = random_cplx(rng);
  return m;
}

inline Mat4 random_mat4(std::mt19937_64& rng) {
  Mat4 m;
  for (auto& x : m.a) x = random_cplx(rng);
  return m;
}

inline Mat2 random_hermitian(std::mt19937_64& rng) {
  const Mat2 g = random_mat2(rng);
  return cplx(0.5) * (g + g.adjoint());
}

// Haar U(2): Gaussian 4-sphere point for the SU(2) part, uniform phase.
inline Mat2 random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> uni(0.0, 2.0 * kPi);
  double v[4];
  double n2 = 0;
  do {
    n2 = 0;
    for (auto& x : v) {
      x = gauss(rng);
      n2 += x * x;
    }
  } while (n2 < 1e-12);
  const double inv = 1.0 / std::sqrt(n2);
  const cplx alpha(v[0] * inv, v[1] * inv);
  const cplx beta(v[2] * inv, v[3] * inv);
  const cplx phase = std::polar(1.0, uni(rng));
  Mat2 u;
  u(0, 0) = phase * alpha;
  u(0, 1) = -phase * std::conj(beta);
  u(1, 0) = phase * beta;
  u(1, 1) = phase * std::conj(alpha);
  return u;
}

inline Mat2 random_density(std::mt19937_64& rng) {
  const Mat2 g = random_mat2(rng);
  Mat2 rho = g * g.adjoint();
  const cplx tr = rho.trace();
  return (1.0 / tr) * rho;
}

inline double max_entry_diff(const Mat2& a, const Mat2& b) { return (a - b).max_abs(); }

inline double max_entry_diff4(const Mat4& a, const Mat4& b) {
  double m = 0;
  for (int i = 0; i < 16; ++i)
    m = std::max(m, std::abs(a.a[static_cast<std::size_t>(i)] - b.a[static_cast<std::size_t>(i)]));
  return m;
}

// Greedy multiset matching distance between two equally sized sets.
inline double multiset_distance(std::vector<cplx> a, std::vector<cplx> b) {
  if (a.size() != b.size()) return 1e300;
  double worst = 0;
  for (const cplx& x : a) {
    std::size_t best = 0;
    double bd = 1e300;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double d = std::abs(x - b[j]);
      if (d < bd) {
        bd = d;
        best = j;
      }
    }
    worst = std::max(worst, bd);
    b.erase(b.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return worst;
}

// The closed-form transfer matrix for the reflection-type O(2) coin under
// the rank-1 projective measurement family; sampled entrywise as the oracle
// for matrix_rep.
inline Mat4 o2_superop_oracle(double theta, double p, double k, double nu) {
  const double q = 1.0 - p;
  const double s2t = std::sin(2.0 * theta);
  const double c2t = std::cos(2.0 * theta);
  const cplx i1(0.0, 1.0);
  Mat4 m;
  m(0, 0) = std::cos(nu);
  m(0, 1) = q * i1 * std::sin(nu) * s2t;
  m(0, 2) = 0.0;
  m(0, 3) = i1 * std::sin(nu) * c2t;
  m(1, 0) = 0.0;
  m(1, 1) = -q * std::cos(2.0 * k + nu) * c2t;
  m(1, 2) = q * std::sin(2.0 * k + nu);
  m(1, 3) = std::cos(2.0 * k + nu) * s2t;
  m(2, 0) = 0.0;
  m(2, 1) = -q * std::sin(2.0 * k + nu) * c2t;
  m(2, 2) = -q * std::cos(2.0 * k + nu);
  m(2, 3) = std::sin(2.0 * k + nu) * s2t;
  m(3, 0) = i1 * std::sin(nu);
  m(3, 1) = q * std::cos(nu) * s2t;
  m(3, 2) = 0.0;
  m(3, 3) = std::cos(nu) * c2t;
  return m;
}

inline double binomial_coeff(int n, int l) {
  double b = 1;
  for (int i = 0; i < l; ++i) b = b * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return b;
}

// Symmetric classical walk pmf: C(t, (t+x)/2) / 2^t on parity-allowed sites.
inline double binomial_pmf(long t, long x) {
  if ((x + t) % 2 != 0 || x < -t || x > t) return 0.0;
  return binomial_coeff(static_cast<int>(t), static_cast<int>((t + x) / 2)) /
         std::pow(2.0, static_cast<double>(t));
}

}  // namespace qwalk::testing
