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

#include <optional>
#include <vector>

#include "qwalk/complex_linalg.hpp"
#include "qwalk/tolerances.hpp"

namespace qwalk {

// Basis convention used throughout: |R> = (1,0)^T moves right (+1),
// |L> = (0,1)^T moves left (-1); P_R = diag(1,0), P_L = diag(0,1).

//============================================================================
// Coin operators
//============================================================================

// Real-orthogonal normal form: rotation by theta when det_sign = +1,
// reflection [[cos, sin], [sin, -cos]] when det_sign = -1.
struct O2Form {
  double theta;
  int det_sign;
};

struct CoinOperator {
  Mat2 u;
  // SU(2) normalization: e^{-i gamma/2} u = [[alpha, -conj(beta)],
  // [beta, conj(alpha)]] with |alpha|^2 + |beta|^2 = 1 and det u = e^{i gamma}.
  cplx alpha;
  cplx beta;
  double gamma = 0;  // principal branch of arg(det u)
  std::optional<O2Form> o2_form;
};

// Validates unitarity and extracts the normal forms. Throws validation_error
// (reporting the unitarity defect) on non-unitary input.
CoinOperator coin_from_u2(const Mat2& m, const Tolerances& tol = default_tolerances());

// The O(2) coin with the given angle and determinant sign.
CoinOperator coin_o2(double theta, int det_sign);

// U_k = diag(e^{-ik}, e^{ik}) * U.
Mat2 momentum_coin(const CoinOperator& coin, double k);

// True when theta is within `window` of a multiple of pi/2.
bool theta_is_degenerate(double theta, double window);

//============================================================================
// Measurement (Kraus) families
//============================================================================

struct KrausSet {
  std::vector<Mat2> operators;
  // Set when the family is the rank-1 projective one, p in [0, 1].
  std::optional<double> decoherence_rate;

  double completeness_defect() const;  // || sum A*A - I ||_F
  double unitality_defect() const;     // || sum A A* - I ||_F
};

// {sqrt(1-p) I, sqrt(p) |R><R|, sqrt(p) |L><L|}. Throws on p outside [0, 1].
KrausSet projective_kraus(double p);

// General unital measurement from explicit matrices; both certificates are
// checked against the tolerance.
KrausSet kraus_from_matrices(std::vector<Mat2> ops, const Tolerances& tol = default_tolerances());

// rho -> sum_n A_n rho A_n*.
Mat2 apply_channel(const KrausSet& kraus, const Mat2& rho);

//============================================================================
// Initial coin states
//============================================================================

class InitialCoinState {
 public:
  static InitialCoinState right();
  static InitialCoinState left();
  static InitialCoinState mixed();
  // Pure c_R |R> + c_L |L>; amplitudes are normalized.
  static InitialCoinState pure(cplx c_r, cplx c_l);
  // (I + n . sigma) / 2; requires |n| <= 1.
  static InitialCoinState bloch(double nx, double ny, double nz,
                                const Tolerances& tol = default_tolerances());
  // Validates Hermiticity, unit trace and positive semidefiniteness.
  static InitialCoinState from_density(const Mat2& rho,
                                       const Tolerances& tol = default_tolerances());

  const Mat2& density() const { return density_; }
  PauliVector pauli() const { return pauli_decompose(density_); }

  // Set when the state is pure and the amplitudes are known.
  const std::optional<std::array<cplx, 2>>& amplitudes() const { return amplitudes_; }

 private:
  Mat2 density_;
  std::optional<std::array<cplx, 2>> amplitudes_;
};

}  // namespace qwalk
