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

namespace qwalk {

// Every numerical threshold used by the library, gathered in one record so
// that tests can sweep or tighten them without hunting through the code.
struct Tolerances {
  // Matrix certificates (unitarity, Kraus completeness/unitality, density
  // matrix admissibility).
  double unitarity = 1e-10;
  double kraus_certificate = 1e-10;
  double density_psd = 1e-12;

  // Pauli-basis conversion round trip and O(2)-form detection.
  double pauli_round_trip = 1e-12;
  double o2_detection = 1e-12;

  // Small eigenproblem / polynomial root contracts.
  double eig_residual = 1e-8;    // |det(M - lambda I)| <= eig_residual*(1+||M||)
  double root_residual = 1e-9;   // |p(root)| <= root_residual*(1+max|coeff|)
  double root_cluster = 1e-7;    // multiplicity assignment radius
  int qr_max_iters = 80;         // per deflation step

  // Spectral classification.
  double peripheral = 1e-9;      // |lambda| >= 1 - peripheral counts as unit modulus
  double rank_threshold = 1e-8;  // rank-revealing elimination pivot cutoff
  double unit_eig_match = 1e-6;  // identify a peripheral eigenvalue with +1 / -1
  double u2_element = 1e-9;      // diagonal / antidiagonal coin element test

  // Degenerate-coin gate: |theta - n*pi/2| below this is the degenerate case.
  double theta_degenerate = 1e-9;

  // Contraction certificate: norm growth and nu-dependence bound.
  double contraction = 1e-10;

  // Root continuation (scaling limit).
  double newton_residual = 1e-12;
  int newton_max_iters = 50;
  double branch_collision = 1e-4;
  double fd_step = 1e-3;         // base step, one Richardson level on top

  // Distribution post-processing.
  double prob_clip = 1e-10;      // negatives above -prob_clip are clipped to 0
  double imag_residue = 1e-9;    // max tolerated imaginary part after inversion
  double mass_defect = 1e-8;     // |total - 1| bound for exact methods

  // Resource caps.
  int density_matrix_cap = 64;   // max t for the position-space oracle
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace qwalk
