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

#include <vector>

#include "qwalk/superoperator.hpp"
#include "qwalk/walk_model.hpp"

namespace qwalk {

// Matrix-element classes of the coin that decide the degenerate walks:
// diagonal coins move the walker one way forever, antidiagonal coins bounce
// it between two sites.
enum class U2Condition { generic, diagonal_coin, antidiagonal_coin };

enum class DegenerateCase { none, ballistic, oscillatory };

struct SpectralReport {
  double k = 0;
  double p = 0;
  // Eigenvalues of the diagonal superoperator, with algebraic multiplicity,
  // sorted by decreasing modulus.
  std::array<cplx, 4> eigenvalues{};
  // Sub-multiset with modulus >= 1 - tol.peripheral.
  std::vector<cplx> peripheral;
  int mult_one = 0;   // algebraic multiplicity of eigenvalue 1
  int dim_one = 0;    // geometric dimension of its eigenspace
  bool has_minus_one = false;
  // True iff 1 is simple and every other eigenvalue has modulus < 1 - tol:
  // the diffusive scaling limit exists at this k.
  bool theorem_applies = false;
  DegenerateCase degenerate_case = DegenerateCase::none;
};

// Pure matrix-element test on the coin (tolerance 1e-9 by default).
U2Condition u2_condition(const CoinOperator& coin, const Tolerances& tol = default_tolerances());

// Spectral classification of the diagonal superoperator at momentum k for
// the projective measurement family at rate p. The full peripheral-spectrum
// guarantees hold for 0 < p < 1; the endpoints are reported as computed,
// without those guarantees.
SpectralReport classify(const CoinOperator& coin, double p, double k,
                        const Tolerances& tol = default_tolerances());

// min over a uniform k grid of (1 - max modulus among non-unit eigenvalues),
// where one eigenvalue closest to 1 is excluded at each k. A positive value
// certifies the spectral-gap hypothesis on the grid.
double peripheral_gap(const CoinOperator& coin, double p, int k_grid, int threads = 0,
                      const Tolerances& tol = default_tolerances());

}  // namespace qwalk
