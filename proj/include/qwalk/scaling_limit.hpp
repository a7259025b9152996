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

#include "qwalk/spectral.hpp"
#include "qwalk/superoperator.hpp"
#include "qwalk/walk_model.hpp"

namespace qwalk {

//============================================================================
// Root continuation
//============================================================================

// z0(nu) is the root of det(I - z L(k, nu)) = 0 continued from z0(0) = 1.
// Its second derivative at 0 is the per-momentum variance of the diffusive
// limit; the first derivative vanishes.
struct RootTrack {
  double k = 0;
  double nu_step = 0;
  std::vector<double> nu;  // 0, nu_step, 2 nu_step, ...
  std::vector<cplx> z0;
  cplx z0_prime_0;
  cplx z0_double_prime_0;

  double variance() const { return z0_double_prime_0.real(); }
};

// Newton continuation in nu. Derivatives at 0 use symmetric differences on
// the halving ladder (h, h/2, h/4) with two Richardson levels, h being
// tol.fd_step. Requires the spectral classification to hold at this k;
// throws numeric_error when the tracked root collides with another branch
// (naming the failing nu), and when the extracted second derivative is not
// real positive within tolerance.
RootTrack track_root(const CoinOperator& coin, double p, double k, double nu_max = 0.1,
                     int steps = 100, const Tolerances& tol = default_tolerances());

//============================================================================
// The diffusive limit
//============================================================================

// Per-momentum variance curve of the limiting mixture of normals, sampled on
// a uniform k grid. For O(2) coins the closed form (theta, q) is recorded.
struct LimitModel {
  CoinOperator coin;
  double p = 0;
  int k_grid = 0;
  std::vector<double> variance_curve;  // z0''(0; k_j), k_j = 2 pi j / k_grid

  struct ClosedForm {
    double theta;
    double q;
    // Reflection coins (det = -1) realize the closed form as stated;
    // rotation coins (det = +1) realize it with k shifted by pi/2. The
    // k-integrated quantities (limit, moments) are shift-invariant.
    double k_shift;
  };
  std::optional<ClosedForm> closed_form;

  double max_variance() const;
};

// Samples z0''(0; k) over the grid. Every grid point must satisfy the
// spectral hypotheses; otherwise a validation_error names the failing k.
LimitModel build_limit_model(const CoinOperator& coin, double p, int k_grid = 256,
                             const Tolerances& tol = default_tolerances());

// (1 + 2 q cos 2k + q^2) / (1 - q^2) * cot^2(theta). Errors on degenerate
// theta (use degenerate_limits) and on q outside [0, 1).
double variance_closed_form(double theta, double q, double k,
                            const Tolerances& tol = default_tolerances());

// Limiting characteristic function: the k-average of exp(-variance nu^2 / 2).
// Real by construction, in (0, 1].
double limit_char_fn(const LimitModel& model, double nu);

// Density of the limiting mixture of centered normals.
double limit_density(const LimitModel& model, double x);

// Simpson integral of the density over [-L, L], L = 8 sqrt(max variance);
// should be 1 within 1e-6. Exposed as a diagnostic.
double limit_density_normalization(const LimitModel& model, int quad_points = 4097);

//============================================================================
// Moments and critical exponents
//============================================================================

struct MomentTable {
  std::vector<int> orders;       // 0, 1, ..., max_order
  std::vector<double> values;    // M_n (odd entries are exactly 0)
  std::vector<double> tn_values; // T_{n/2}(q) for even n, 0 for odd entries
};

// T_n(q) = sum_l binom(n, l)^2 q^(2l).
double tn_polynomial(int n, double q);

// Closed-form moments for O(2) coins:
// M_{2n} = (2n)!/(n! 2^n) (cot^2 theta / (1-q^2))^n T_n(q), odd moments 0.
MomentTable moments_closed(double theta, double q, int max_order,
                           const Tolerances& tol = default_tolerances());

// Quadrature moments of the mixture: M_{2n} = (2n)!/(n! 2^n) <variance^n>_k.
MomentTable moments_numeric(const LimitModel& model, int max_order);

// Least-squares slope of -ln M_{2n} against ln p over the samples; the
// samples must decrease towards 0 inside (0, 1).
double critical_exponent(double theta, int order_2n, const std::vector<double>& p_samples,
                         const Tolerances& tol = default_tolerances());

//============================================================================
// Generating function and degenerate limits
//============================================================================

// G contribution at fixed momentum: Tr{(I - z L(k, nu))^{-1} O} in Pauli
// coordinates. Requires |z| < 1.
cplx generating_fn(const DecoherentWalk& walk, double k, double nu, cplx z,
                   const InitialCoinState& init);

// Limits for the coins whose diffusive limit does not exist: diagonal coins
// give |c_R|^2 e^{i nu} + |c_L|^2 e^{-i nu} under nu/t scaling, antidiagonal
// coins give 1. Errors on generic coins.
cplx degenerate_limits(const CoinOperator& coin, const InitialCoinState& init, double nu,
                       const Tolerances& tol = default_tolerances());

}  // namespace qwalk
