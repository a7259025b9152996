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

#include "doctest.h"

#include <cmath>

#include "qwalk/errors.hpp"
#include "qwalk/superoperator.hpp"
#include "test_support.hpp"

using namespace qwalk;
using namespace qwalk::testing;

TEST_CASE("apply on the identity gives the pure phase diagonal") {
  auto rng = make_rng(3);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (int it = 0; it < 30; ++it) {
    const DecoherentWalk walk = projective_walk(coin_from_u2(random_unitary(rng)), 0.4);
    const double k = angle(rng);
    const double nu = angle(rng);
    const Mat2 out = walk.apply(k, nu, Mat2::identity());
    const Mat2 expect = Mat2::diag(std::polar(1.0, nu), std::polar(1.0, -nu));
    CHECK(max_entry_diff(out, expect) < 1e-13);
  }
}

TEST_CASE("diagonal superoperator preserves trace and Hermiticity") {
  auto rng = make_rng(13);
  const DecoherentWalk walk = projective_walk(coin_o2(1.1, -1), 0.7);
  CHECK(max_entry_diff(walk.apply(0.3, 0.0, Mat2::identity()), Mat2::identity()) < 1e-13);
  for (int it = 0; it < 200; ++it) {
    const Mat2 h = random_hermitian(rng);
    const Mat2 out = walk.apply(0.3, 0.0, h);
    CHECK(std::abs(out.trace() - h.trace()) < 1e-12);
    CHECK((out - out.adjoint()).frobenius_norm() < 1e-12);
  }
}

TEST_CASE("matrix_rep matches the closed-form O(2) transfer matrix") {
  const double thetas[] = {kPi / 4, kPi / 6, kPi / 3, 1.0};
  const double ps[] = {0.3, 0.8};
  const double ks[] = {0.0, 0.7, kPi / 2, 2.9};
  const double nus[] = {0.25, 1.7};
  for (const double theta : thetas) {
    for (const double p : ps) {
      const DecoherentWalk walk = projective_walk(coin_o2(theta, -1), p);
      for (const double k : ks) {
        for (const double nu : nus) {
          const Mat4 l = walk.matrix_rep(k, nu).l;
          CHECK(max_entry_diff4(l, o2_superop_oracle(theta, p, k, nu)) < 1e-12);
          // Row 1, column 2 in particular.
          const cplx expect = (1.0 - p) * cplx(0, 1) * std::sin(nu) * std::sin(2 * theta);
          CHECK(std::abs(l(0, 1) - expect) < 1e-13);
        }
      }
    }
  }
}

TEST_CASE("structural facts: first column and nu = 0 first row") {
  auto rng = make_rng(37);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (int it = 0; it < 40; ++it) {
    const DecoherentWalk walk = projective_walk(coin_from_u2(random_unitary(rng)), 0.25);
    const double k = angle(rng);
    const double nu = angle(rng);
    const Mat4 l = walk.matrix_rep(k, nu).l;
    CHECK(std::abs(l(0, 0) - cplx(std::cos(nu))) < 1e-12);
    CHECK(std::abs(l(1, 0)) < 1e-12);
    CHECK(std::abs(l(2, 0)) < 1e-12);
    CHECK(std::abs(l(3, 0) - cplx(0, std::sin(nu))) < 1e-12);

    const Mat4 d = walk.matrix_rep(k, 0.0).l;
    CHECK(std::abs(d(0, 0) - cplx(1.0)) < 1e-12);
    for (int j = 1; j < 4; ++j) CHECK(std::abs(d(0, j)) < 1e-12);
  }
}

TEST_CASE("full dephasing removes every q-weighted entry") {
  const DecoherentWalk walk = projective_walk(coin_o2(kPi / 4, -1), 1.0);
  const Mat4 l = walk.matrix_rep(0.8, 0.0).l;
  CHECK(std::abs(l(0, 1)) < 1e-14);
  CHECK(std::abs(l(1, 1)) < 1e-14);
  CHECK(std::abs(l(1, 2)) < 1e-14);
  CHECK(std::abs(l(2, 1)) < 1e-14);
  CHECK(std::abs(l(2, 2)) < 1e-14);
  CHECK(std::abs(l(3, 1)) < 1e-14);
}

TEST_CASE("l44 equals |alpha|^2 - |beta|^2 at nu = 0") {
  auto rng = make_rng(43);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (int it = 0; it < 50; ++it) {
    const CoinOperator coin = coin_from_u2(random_unitary(rng));
    const DecoherentWalk walk = projective_walk(coin, 0.6);
    const Mat4 l = walk.matrix_rep(angle(rng), 0.0).l;
    const double expect = std::norm(coin.alpha) - std::norm(coin.beta);
    CHECK(std::abs(l(3, 3) - cplx(expect)) < 1e-12);
  }
}

TEST_CASE("power_apply") {
  const DecoherentWalk walk = projective_walk(coin_o2(kPi / 3, -1), 0.45);
  const PauliVector v{{cplx(0.5), cplx(0.1, 0.2), cplx(-0.3), cplx(0.5)}};

  const PauliVector v0 = walk.power_apply(1.2, 0.4, v, 0);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(v0[i] - v[i]) == 0.0);

  const PauliVector v1 = walk.power_apply(1.2, 0.4, v, 1);
  const PauliVector direct = walk.matrix_rep(1.2, 0.4).l * v;
  for (int i = 0; i < 4; ++i) CHECK(std::abs(v1[i] - direct[i]) < 1e-14);

  // Trace conservation at nu = 0: the first coordinate never moves.
  PauliVector rho{{cplx(0.5), cplx(0.2), cplx(0.0), cplx(-0.1)}};
  for (const long t : {1L, 5L, 40L}) {
    const PauliVector out = walk.power_apply(0.9, 0.0, rho, t);
    CHECK(std::abs(out[0] - rho[0]) < 1e-12);
  }

  CHECK_THROWS_AS(walk.power_apply(0.0, 0.0, v, -1), validation_error);
}

TEST_CASE("contraction_check") {
  const CoinOperator had = coin_o2(kPi / 4, -1);

  // p = 0: unitary conjugation preserves the norm exactly.
  const ContractionReport free_report = projective_walk(had, 0.0).contraction_check(0.7, 1.3, 200);
  CHECK(free_report.contraction_ok);
  CHECK(free_report.max_norm_ratio == doctest::Approx(1.0).epsilon(1e-12));

  // p = 0.5: contraction plus nu-independence of the norm.
  const DecoherentWalk walk = projective_walk(had, 0.5);
  const ContractionReport report = walk.contraction_check(0.7, 1.3, 500);
  CHECK(report.contraction_ok);
  CHECK(report.nu_independence_ok);
  CHECK(report.max_norm_ratio <= 1.0 + 1e-10);

  // Coherence-free operators sit exactly on the equality case.
  const Mat2 diag_op = Mat2::diag(0.8, cplx(0.3, 0.1));
  CHECK(hs_norm(walk.apply(0.7, 1.3, diag_op)) ==
        doctest::Approx(hs_norm(diag_op)).epsilon(1e-12));

  // sigma_x has only coherences: strictly contracted, by the factor q.
  const double ratio = hs_norm(walk.apply(0.7, 0.0, pauli_matrix(1))) / hs_norm(pauli_matrix(1));
  CHECK(ratio == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(walk.contraction_check(0.0, 0.0, 0), validation_error);
}

TEST_CASE("spectrum stays inside the closed unit disk on a k-nu grid") {
  const DecoherentWalk walk = projective_walk(coin_o2(kPi / 4, -1), 0.3);
  auto rng = make_rng(53);
  const CoinOperator random_coin = coin_from_u2(random_unitary(rng));
  const DecoherentWalk walk2 = projective_walk(random_coin, 0.85);
  for (int i = 0; i < 32; ++i) {
    for (int j = 0; j < 32; ++j) {
      const double k = 2.0 * kPi * i / 32.0;
      const double nu = 2.0 * kPi * j / 32.0;
      for (const DecoherentWalk* w : {&walk, &walk2}) {
        const auto eigs = eigenvalues4(w->matrix_rep(k, nu).l);
        for (const auto& l : eigs) CHECK(std::abs(l) <= 1.0 + 1e-9);
      }
    }
  }
}
