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

#include "qwalk/superoperator.hpp"

#include <cmath>
#include <random>
#include <utility>

#include "qwalk/errors.hpp"

namespace qwalk {

DecoherentWalk::DecoherentWalk(CoinOperator coin, KrausSet kraus)
    : coin_(std::move(coin)), kraus_(std::move(kraus)) {
  for (int i = 0; i < 4; ++i)
    channel_sigma_[static_cast<std::size_t>(i)] = apply_channel(kraus_, pauli_matrix(i));
}

Mat2 DecoherentWalk::apply(double k, double nu, const Mat2& b) const {
  const Mat2 uk = momentum_coin(coin_, k);
  const Mat2 ukv = momentum_coin(coin_, k + nu);
  return uk * apply_channel(kraus_, b) * ukv.adjoint();
}

SuperoperatorMatrix DecoherentWalk::matrix_rep(double k, double nu) const {
  const Mat2 uk = momentum_coin(coin_, k);
  const Mat2 ukv_dag = momentum_coin(coin_, k + nu).adjoint();
  SuperoperatorMatrix rep;
  rep.k = k;
  rep.nu = nu;
  for (int j = 0; j < 4; ++j) {
    const PauliVector col = pauli_decompose(uk * channel_sigma_[static_cast<std::size_t>(j)] * ukv_dag);
    for (int i = 0; i < 4; ++i) rep.l(i, j) = col[i];
  }
  return rep;
}

PauliVector DecoherentWalk::power_apply(double k, double nu, const PauliVector& v, long t) const {
  if (t < 0) throw validation_error("power_apply: negative time");
  const SuperoperatorMatrix rep = matrix_rep(k, nu);
  PauliVector x = v;
  for (long step = 0; step < t; ++step) x = rep.l * x;
  return x;
}

ContractionReport DecoherentWalk::contraction_check(double k, double nu, int samples,
                                                    std::uint64_t seed, const Tolerances& tol) const {
  if (samples < 1) throw validation_error("contraction_check: samples must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  ContractionReport report;
  report.samples = samples;
  for (int s = 0; s < samples; ++s) {
    Mat2 o;
    for (auto& x : o.a) x = cplx(gauss(rng), gauss(rng));
    const double n0 = hs_norm(o);
    if (n0 == 0) continue;
    const double n_diag = hs_norm(apply(k, 0.0, o));
    const double n_off = hs_norm(apply(k, nu, o));
    report.max_norm_ratio = std::max(report.max_norm_ratio, n_off / n0);
    report.max_nu_dependence = std::max(report.max_nu_dependence, std::abs(n_off - n_diag));
  }
  report.contraction_ok = report.max_norm_ratio <= 1.0 + tol.contraction;
  report.nu_independence_ok = report.max_nu_dependence <= tol.contraction;
  return report;
}

DecoherentWalk projective_walk(const CoinOperator& coin, double p) {
  return DecoherentWalk(coin, projective_kraus(p));
}

}  // namespace qwalk
