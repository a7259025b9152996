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

#include "qwalk/complex_linalg.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/superoperator.hpp"
#include "test_support.hpp"

using namespace qwalk;
using namespace qwalk::testing;

TEST_CASE("pauli decompose: basis elements and projectors") {
  const PauliVector id = pauli_decompose(Mat2::identity());
  CHECK(std::abs(id[0] - cplx(1.0)) == 0.0);
  CHECK(std::abs(id[1]) == 0.0);
  CHECK(std::abs(id[2]) == 0.0);
  CHECK(std::abs(id[3]) == 0.0);

  const PauliVector x = pauli_decompose(pauli_matrix(1));
  CHECK(std::abs(x[0]) == 0.0);
  CHECK(std::abs(x[1] - cplx(1.0)) == 0.0);

  // |R><R| = diag(1, 0).
  const PauliVector rr = pauli_decompose(Mat2::diag(1.0, 0.0));
  CHECK(std::abs(rr[0] - cplx(0.5)) < 1e-15);
  CHECK(std::abs(rr[3] - cplx(0.5)) < 1e-15);
  CHECK(std::abs(rr[1]) < 1e-15);
  CHECK(std::abs(rr[2]) < 1e-15);
}

TEST_CASE("pauli compose: inverse direction") {
  CHECK(max_entry_diff(pauli_compose(PauliVector{{cplx(1), 0, 0, 0}}), Mat2::identity()) == 0.0);
  CHECK(max_entry_diff(pauli_compose(PauliVector{{0, 0, 0, cplx(1)}}), Mat2::diag(1.0, -1.0)) == 0.0);
  // (1/2, 0, 0, -1/2) -> |L><L|.
  CHECK(max_entry_diff(pauli_compose(PauliVector{{cplx(0.5), 0, 0, cplx(-0.5)}}),
                       Mat2::diag(0.0, 1.0)) < 1e-15);
}

TEST_CASE("pauli round trip on random operators") {
  auto rng = make_rng(41);
  for (int it = 0; it < 1000; ++it) {
    const Mat2 m = random_mat2(rng);
    const Mat2 back = pauli_compose(pauli_decompose(m));
    CHECK(max_entry_diff(m, back) < 1e-12);
    // r0 is exactly Tr/2.
    CHECK(pauli_decompose(m)[0] == 0.5 * m.trace());
  }
}

TEST_CASE("eigenvalues4: diagonal and identity") {
  const auto ones = eigenvalues4(Mat4::identity());
  for (const auto& l : ones) CHECK(std::abs(l - cplx(1.0)) < 1e-12);

  const Mat4 d = Mat4::diag(1.0, 0.5, cplx(0.0, 0.5), -0.25);
  const auto eigs = eigenvalues4(d);
  CHECK(multiset_distance({eigs.begin(), eigs.end()},
                          {cplx(1.0), cplx(0.5), cplx(0.0, 0.5), cplx(-0.25)}) < 1e-12);
}

TEST_CASE("eigenvalues4: Hadamard superoperator at p = 0.3") {
  const DecoherentWalk walk = projective_walk(coin_o2(kPi / 4, -1), 0.3);
  const auto eigs = eigenvalues4(walk.matrix_rep(0.0, 0.0).l);
  int at_one = 0;
  for (const auto& l : eigs) {
    if (std::abs(l - cplx(1.0)) < 1e-9)
      ++at_one;
    else
      CHECK(std::abs(l) < 1.0 - 1e-6);
  }
  CHECK(at_one == 1);
}

TEST_CASE("det_poly: trivial and diagonal cases") {
  const Poly4 one = det_poly(Mat4::zero());
  CHECK(std::abs(one.c[0] - cplx(1.0)) < 1e-15);
  for (int i = 1; i <= 4; ++i) CHECK(std::abs(one.c[static_cast<std::size_t>(i)]) < 1e-15);

  // (1 - z)(1 - z/2)^2 (1 - z/4) = 1 - 2.25 z + 1.75 z^2 - 0.5625 z^3 + 0.0625 z^4.
  const Poly4 g = det_poly(Mat4::diag(1.0, 0.5, 0.5, 0.25));
  CHECK(std::abs(g.c[0] - cplx(1.0)) < 1e-14);
  CHECK(std::abs(g.c[1] - cplx(-2.25)) < 1e-14);
  CHECK(std::abs(g.c[2] - cplx(1.75)) < 1e-14);
  CHECK(std::abs(g.c[3] - cplx(-0.5625)) < 1e-14);
  CHECK(std::abs(g.c[4] - cplx(0.0625)) < 1e-14);
}

TEST_CASE("det_poly matches the determinant at sample points") {
  auto rng = make_rng(42);
  for (int it = 0; it < 50; ++it) {
    const Mat4 l = random_mat4(rng);
    const Poly4 g = det_poly(l);
    for (const double z : {0.0, 0.3, -0.7, 0.11, -0.05}) {
      Mat4 a = Mat4::identity();
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) -= z * l(i, j);
      const cplx direct = det4(a);
      CHECK(std::abs(g.eval(z) - direct) < 1e-10 * (1.0 + std::abs(direct)));
    }
  }
}

TEST_CASE("poly_roots: explicit roots") {
  Poly4 lin;
  lin.c[0] = 1.0;
  lin.c[1] = -1.0;
  const auto r1 = poly_roots(lin);
  REQUIRE(r1.size() == 1);
  CHECK(std::abs(r1[0] - cplx(1.0)) < 1e-12);

  const auto r4 = poly_roots(det_poly(Mat4::diag(1.0, 0.5, 0.5, 0.25)));
  REQUIRE(r4.size() == 4);
  CHECK(multiset_distance(r4, {cplx(1.0), cplx(2.0), cplx(2.0), cplx(4.0)}) < 1e-7);
}

TEST_CASE("poly_roots: Hadamard determinant polynomial") {
  const DecoherentWalk walk = projective_walk(coin_o2(kPi / 4, -1), 0.5);
  const Mat4 l = walk.matrix_rep(0.9, 0.0).l;
  const auto roots = poly_roots(det_poly(l));
  bool has_one = false;
  for (const auto& r : roots) {
    if (std::abs(r - cplx(1.0)) < 1e-9) has_one = true;
    CHECK(std::abs(1.0 / r) <= 1.0 + 1e-9);  // reciprocals are eigenvalues
  }
  CHECK(has_one);
}

TEST_CASE("poly_roots: zero polynomial is rejected") {
  CHECK_THROWS_AS(poly_roots(Poly4{}), validation_error);
}

TEST_CASE("spectral consistency: roots of det_poly are reciprocal eigenvalues") {
  auto rng = make_rng(7);
  int tested = 0;
  while (tested < 200) {
    const Mat4 l = random_mat4(rng);
    const auto eigs = eigenvalues4(l);
    double min_mod = 1e300;
    for (const auto& e : eigs) min_mod = std::min(min_mod, std::abs(e));
    if (min_mod < 1e-3) continue;  // need invertible samples
    ++tested;
    std::vector<cplx> recip;
    for (const auto& e : eigs) recip.push_back(1.0 / e);
    CHECK(multiset_distance(poly_roots(det_poly(l)), recip) < 1e-7);
  }
}

TEST_CASE("solve4 and det4 basics") {
  auto rng = make_rng(11);
  for (int it = 0; it < 50; ++it) {
    const Mat4 m = random_mat4(rng);
    PauliVector rhs;
    for (int i = 0; i < 4; ++i) rhs[i] = random_cplx(rng);
    const PauliVector x = solve4(m, rhs);
    const PauliVector back = m * x;
    for (int i = 0; i < 4; ++i) CHECK(std::abs(back[i] - rhs[i]) < 1e-9);
  }
  CHECK(std::abs(det4(Mat4::identity()) - cplx(1.0)) < 1e-15);
  CHECK_THROWS_AS(solve4(Mat4::zero(), PauliVector{{cplx(1), 0, 0, 0}}), numeric_error);
}

TEST_CASE("rank4 pivot threshold") {
  CHECK(rank4(Mat4::identity(), 1e-8) == 4);
  CHECK(rank4(Mat4::zero(), 1e-8) == 0);
  Mat4 m = Mat4::diag(1.0, 1.0, 1e-12, 0.0);
  CHECK(rank4(m, 1e-8) == 2);
}
