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

#include "qwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qwalk/errors.hpp"
#include "qwalk/parallel.hpp"

namespace qwalk {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559005768;

}  // namespace

U2Condition u2_condition(const CoinOperator& coin, const Tolerances& tol) {
  const double off = std::max(std::abs(coin.u(0, 1)), std::abs(coin.u(1, 0)));
  const double diag = std::max(std::abs(coin.u(0, 0)), std::abs(coin.u(1, 1)));
  const double eps = tol.u2_element;
  if (off <= eps && std::abs(std::abs(coin.u(0, 0)) - 1.0) <= eps &&
      std::abs(std::abs(coin.u(1, 1)) - 1.0) <= eps)
    return U2Condition::diagonal_coin;
  if (diag <= eps && std::abs(std::abs(coin.u(0, 1)) - 1.0) <= eps &&
      std::abs(std::abs(coin.u(1, 0)) - 1.0) <= eps)
    return U2Condition::antidiagonal_coin;
  return U2Condition::generic;
}

SpectralReport classify(const CoinOperator& coin, double p, double k, const Tolerances& tol) {
  if (!(p >= 0.0 && p <= 1.0))
    throw validation_error("classify: decoherence rate must lie in [0, 1], got " + std::to_string(p));

  const DecoherentWalk walk = projective_walk(coin, p);
  const Mat4 l = walk.matrix_rep(k, 0.0).l;

  SpectralReport report;
  report.k = k;
  report.p = p;
  report.eigenvalues = eigenvalues4(l, tol);

  for (const auto& lambda : report.eigenvalues) {
    if (std::abs(lambda) >= 1.0 - tol.peripheral) report.peripheral.push_back(lambda);
    if (std::abs(lambda - cplx(1.0)) <= tol.unit_eig_match) ++report.mult_one;
    if (std::abs(lambda + cplx(1.0)) <= tol.unit_eig_match) report.has_minus_one = true;
  }

  Mat4 shifted = l;
  for (int i = 0; i < 4; ++i) shifted(i, i) -= 1.0;
  report.dim_one = 4 - rank4(shifted, tol.rank_threshold);

  double second = 0;
  {
    // Exclude one copy closest to 1, take the max modulus of the rest.
    int skip = 0;
    double best = std::abs(report.eigenvalues[0] - cplx(1.0));
    for (int i = 1; i < 4; ++i) {
      const double d = std::abs(report.eigenvalues[static_cast<std::size_t>(i)] - cplx(1.0));
      if (d < best) {
        best = d;
        skip = i;
      }
    }
    for (int i = 0; i < 4; ++i)
      if (i != skip)
        second = std::max(second, std::abs(report.eigenvalues[static_cast<std::size_t>(i)]));
  }
  report.theorem_applies = report.mult_one == 1 && second < 1.0 - tol.peripheral;

  switch (u2_condition(coin, tol)) {
    case U2Condition::diagonal_coin:
      report.degenerate_case = DegenerateCase::ballistic;
      break;
    case U2Condition::antidiagonal_coin:
      report.degenerate_case = DegenerateCase::oscillatory;
      break;
    case U2Condition::generic:
      report.degenerate_case = DegenerateCase::none;
      break;
  }
  return report;
}

double peripheral_gap(const CoinOperator& coin, double p, int k_grid, int threads,
                      const Tolerances& tol) {
  if (k_grid < 8) throw validation_error("peripheral_gap: need a grid of at least 8 points");
  const DecoherentWalk walk = projective_walk(coin, p);

  std::vector<double> gap(static_cast<std::size_t>(k_grid));
  parallel_for(static_cast<std::size_t>(k_grid), threads, [&](std::size_t j) {
    const double k = kTwoPi * static_cast<double>(j) / static_cast<double>(k_grid);
    const auto eigs = eigenvalues4(walk.matrix_rep(k, 0.0).l, tol);
    int skip = 0;
    double best = std::abs(eigs[0] - cplx(1.0));
    for (int i = 1; i < 4; ++i) {
      const double d = std::abs(eigs[static_cast<std::size_t>(i)] - cplx(1.0));
      if (d < best) {
        best = d;
        skip = i;
      }
    }
    double second = 0;
    for (int i = 0; i < 4; ++i)
      if (i != skip) second = std::max(second, std::abs(eigs[static_cast<std::size_t>(i)]));
    gap[j] = 1.0 - second;
  });

  // Fixed-order reduction keeps the result independent of the thread count.
  double out = gap[0];
  for (const double g : gap) out = std::min(out, g);
  return out;
}

}  // namespace qwalk
