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

#include "qwalk/walk_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

double unitarity_defect(const Mat2& m) { return (m * m.adjoint() - Mat2::identity()).frobenius_norm(); }

constexpr double kPi = 3.141592653589793238462643383279502884;

}  // namespace

bool theta_is_degenerate(double theta, double window) {
  const double x = theta / (kPi / 2);
  return std::abs(x - std::round(x)) * (kPi / 2) < window;
}

CoinOperator coin_from_u2(const Mat2& m, const Tolerances& tol) {
  const double defect = unitarity_defect(m);
  if (!(defect <= tol.unitarity))
    throw validation_error("coin_from_u2: input is not unitary, ||u u* - I|| = " + std::to_string(defect));

  CoinOperator coin;
  coin.u = m;
  coin.gamma = std::arg(m.det());
  const cplx phase = std::polar(1.0, -coin.gamma / 2.0);
  const Mat2 w = phase * m;  // SU(2) member: [[alpha, -conj(beta)], [beta, conj(alpha)]]
  coin.alpha = w(0, 0);
  coin.beta = w(1, 0);

  // Real orthogonal detection.
  double imag_part = 0;
  for (const auto& x : m.a) imag_part = std::max(imag_part, std::abs(x.imag()));
  if (imag_part <= tol.o2_detection) {
    const double det = m.det().real();
    const int det_sign = det >= 0 ? 1 : -1;
    const double theta = std::atan2(m(1, 0).real(), m(0, 0).real());
    const CoinOperator candidate = coin_o2(theta, det_sign);
    if ((candidate.u - m).frobenius_norm() <= tol.o2_detection)
      coin.o2_form = O2Form{theta, det_sign};
  }
  return coin;
}

CoinOperator coin_o2(double theta, int det_sign) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Mat2 u;
  if (det_sign >= 0) {
    u = Mat2{{cplx(c), cplx(-s), cplx(s), cplx(c)}};
  } else {
    u = Mat2{{cplx(c), cplx(s), cplx(s), cplx(-c)}};
  }
  CoinOperator coin;
  coin.u = u;
  coin.o2_form = O2Form{theta, det_sign >= 0 ? 1 : -1};
  coin.gamma = std::arg(u.det());
  const cplx phase = std::polar(1.0, -coin.gamma / 2.0);
  const Mat2 w = phase * u;
  coin.alpha = w(0, 0);
  coin.beta = w(1, 0);
  return coin;
}

Mat2 momentum_coin(const CoinOperator& coin, double k) {
  const cplx er = std::polar(1.0, -k);
  const cplx el = std::polar(1.0, k);
  Mat2 r;
  r(0, 0) = er * coin.u(0, 0);
  r(0, 1) = er * coin.u(0, 1);
  r(1, 0) = el * coin.u(1, 0);
  r(1, 1) = el * coin.u(1, 1);
  return r;
}

//============================================================================
// Kraus sets
//============================================================================

double KrausSet::completeness_defect() const {
  Mat2 s;
  for (const auto& a : operators) s = s + a.adjoint() * a;
  return (s - Mat2::identity()).frobenius_norm();
}

double KrausSet::unitality_defect() const {
  Mat2 s;
  for (const auto& a : operators) s = s + a * a.adjoint();
  return (s - Mat2::identity()).frobenius_norm();
}

KrausSet projective_kraus(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw validation_error("projective_kraus: decoherence rate must lie in [0, 1], got " + std::to_string(p));
  KrausSet set;
  const double s = std::sqrt(p);
  const double c = std::sqrt(1.0 - p);
  set.operators = {
      cplx(c) * Mat2::identity(),
      cplx(s) * Mat2::diag(1.0, 0.0),  // |R><R|
      cplx(s) * Mat2::diag(0.0, 1.0),  // |L><L|
  };
  set.decoherence_rate = p;
  return set;
}

KrausSet kraus_from_matrices(std::vector<Mat2> ops, const Tolerances& tol) {
  if (ops.empty()) throw validation_error("kraus_from_matrices: empty operator list");
  KrausSet set;
  set.operators = std::move(ops);
  const double cd = set.completeness_defect();
  if (!(cd <= tol.kraus_certificate))
    throw validation_error("kraus_from_matrices: completeness defect " + std::to_string(cd));
  const double ud = set.unitality_defect();
  if (!(ud <= tol.kraus_certificate))
    throw validation_error("kraus_from_matrices: unitality defect " + std::to_string(ud));
  return set;
}

Mat2 apply_channel(const KrausSet& kraus, const Mat2& rho) {
  Mat2 out;
  for (const auto& a : kraus.operators) out = out + a * rho * a.adjoint();
  return out;
}

//============================================================================
// Initial coin states
//============================================================================

InitialCoinState InitialCoinState::right() { return pure(1.0, 0.0); }
InitialCoinState InitialCoinState::left() { return pure(0.0, 1.0); }

InitialCoinState InitialCoinState::mixed() {
  InitialCoinState s;
  s.density_ = cplx(0.5) * Mat2::identity();
  return s;
}

InitialCoinState InitialCoinState::pure(cplx c_r, cplx c_l) {
  const double n2 = std::norm(c_r) + std::norm(c_l);
  if (n2 <= 0) throw validation_error("InitialCoinState::pure: zero state vector");
  const double inv = 1.0 / std::sqrt(n2);
  c_r *= inv;
  c_l *= inv;
  InitialCoinState s;
  s.density_(0, 0) = c_r * std::conj(c_r);
  s.density_(0, 1) = c_r * std::conj(c_l);
  s.density_(1, 0) = c_l * std::conj(c_r);
  s.density_(1, 1) = c_l * std::conj(c_l);
  s.amplitudes_ = std::array<cplx, 2>{c_r, c_l};
  return s;
}

InitialCoinState InitialCoinState::bloch(double nx, double ny, double nz, const Tolerances& tol) {
  const double n = std::sqrt(nx * nx + ny * ny + nz * nz);
  if (n > 1.0 + tol.density_psd)
    throw validation_error("InitialCoinState::bloch: |n| = " + std::to_string(n) + " exceeds 1");
  Mat2 rho;
  rho(0, 0) = 0.5 * (1.0 + nz);
  rho(1, 1) = 0.5 * (1.0 - nz);
  rho(0, 1) = 0.5 * cplx(nx, -ny);
  rho(1, 0) = 0.5 * cplx(nx, ny);
  InitialCoinState s;
  s.density_ = rho;
  if (std::abs(n - 1.0) <= 1e-12) {
    // Pure state: reconstruct amplitudes from the Bloch direction.
    const double half = std::acos(std::clamp(nz, -1.0, 1.0)) / 2.0;
    const double phi = std::atan2(ny, nx);
    s.amplitudes_ = std::array<cplx, 2>{cplx(std::cos(half)), std::polar(std::sin(half), phi)};
  }
  return s;
}

InitialCoinState InitialCoinState::from_density(const Mat2& rho, const Tolerances& tol) {
  const double herm = (rho - rho.adjoint()).frobenius_norm();
  if (!(herm <= tol.unitarity))
    throw validation_error("from_density: not Hermitian, defect " + std::to_string(herm));
  const double tr = std::abs(rho.trace() - cplx(1.0));
  if (!(tr <= tol.unitarity))
    throw validation_error("from_density: trace differs from 1 by " + std::to_string(tr));
  // Eigenvalues of a 2x2 Hermitian matrix, in closed form.
  const double m = 0.5 * (rho(0, 0).real() + rho(1, 1).real());
  const double d = 0.5 * (rho(0, 0).real() - rho(1, 1).real());
  const double off = std::abs(rho(0, 1));
  const double radius = std::sqrt(d * d + off * off);
  if (m - radius < -tol.density_psd)
    throw validation_error("from_density: negative eigenvalue " + std::to_string(m - radius));
  InitialCoinState s;
  s.density_ = rho;
  return s;
}

}  // namespace qwalk
