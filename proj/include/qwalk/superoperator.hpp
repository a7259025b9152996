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

#include <cstdint>

#include "qwalk/complex_linalg.hpp"
#include "qwalk/walk_model.hpp"

namespace qwalk {

// The transfer matrix of B -> sum_n U_k A_n B A_n* U_{k+nu}* in the Pauli
// basis. Structural facts (certified by the test suite):
//   - first column is (cos nu, 0, 0, i sin nu)^T,
//   - at nu = 0 the first row is (1, 0, 0, 0),
//   - the spectrum lies in the closed unit disk for unital Kraus sets.
struct SuperoperatorMatrix {
  Mat4 l;
  double k = 0;
  double nu = 0;
};

struct ContractionReport {
  int samples = 0;
  // max over samples of ||L O|| / ||O|| (Hilbert-Schmidt).
  double max_norm_ratio = 0;
  // max over samples of | ||L_{k,k+nu} O|| - ||L_{k,k} O|| |.
  double max_nu_dependence = 0;
  bool contraction_ok = false;
  bool nu_independence_ok = false;
};

// A coin plus a unital measurement family; the walk's one-step transfer
// structure in momentum space.
class DecoherentWalk {
 public:
  DecoherentWalk(CoinOperator coin, KrausSet kraus);

  const CoinOperator& coin() const { return coin_; }
  const KrausSet& kraus() const { return kraus_; }

  // sum_n U_k A_n b A_n* U_{k+nu}*.
  Mat2 apply(double k, double nu, const Mat2& b) const;

  // Pauli-basis matrix of apply(k, nu, .); column j is the decomposition of
  // the image of sigma_j.
  SuperoperatorMatrix matrix_rep(double k, double nu) const;

  // L^t v by repeated matrix-vector products (L^t is never formed).
  PauliVector power_apply(double k, double nu, const PauliVector& v, long t) const;

  // Monte-Carlo certificate for the contraction property: random operators
  // O, checking ||L_{k,k+nu} O|| = ||L_{k,k} O|| and <= ||O||.
  ContractionReport contraction_check(double k, double nu, int samples,
                                      std::uint64_t seed = 0x5eed0ull,
                                      const Tolerances& tol = default_tolerances()) const;

 private:
  CoinOperator coin_;
  KrausSet kraus_;
  // Channel images of the Pauli basis; k-independent, precomputed once.
  std::array<Mat2, 4> channel_sigma_;
};

// The walk driven by the rank-1 projective measurement family at rate p.
DecoherentWalk projective_walk(const CoinOperator& coin, double p);

}  // namespace qwalk
