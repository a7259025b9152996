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
#include <string>
#include <vector>

#include "qwalk/scaling_limit.hpp"
#include "qwalk/superoperator.hpp"
#include "qwalk/walk_model.hpp"

namespace qwalk {

enum class Method { fourier, density_matrix, monte_carlo };

const char* method_name(Method m);

// Exact or empirical p(x, t) on the lattice window {-t, ..., t}.
struct DistributionTable {
  long t = 0;
  std::vector<double> probs;  // index i corresponds to x = i - t
  double total = 0;           // mass before any clipping
  Method method = Method::fourier;

  // Diagnostics recorded by the exact routes.
  double clipped_mass = 0;        // total negative mass clipped to 0
  double max_imag_residue = 0;    // Fourier inversion only
  double max_parity_residue = 0;  // mass found on parity-forbidden sites

  // Monte-Carlo metadata.
  std::uint64_t mc_samples = 0;
  std::uint64_t seed = 0;
  int workers = 0;
  std::string rng_id;

  double prob(long x) const;
  double mean() const;
  double second_moment() const;
  double variance() const;
};

// 1/2 sum_x |a(x) - b(x)|; tables must share the same t.
double tv_distance(const DistributionTable& a, const DistributionTable& b);

struct CharFnSample {
  double nu = 0;
  long t = 0;
  cplx value;
};

// Full position-space density matrix on the truncated lattice, indexed by
// (x, coin; x', coin').
struct LatticeDensity {
  long t = 0;
  std::vector<cplx> rho;  // row-major, dimension 2(2t+1)

  int dim() const { return static_cast<int>(2 * (2 * t + 1)); }
  cplx& at(long x, int c, long x2, int c2);
  const cplx& at(long x, int c, long x2, int c2) const;

  double trace() const;
  double hermiticity_defect() const;
  // Shifted power iteration estimate of the smallest eigenvalue; used to
  // certify positive semidefiniteness in tests.
  double smallest_eigenvalue_estimate(int iters = 2000) const;
};

// P-hat(nu, t): uniform k-grid average of Tr{L^t_{k,k+nu} rho0}, computed
// with sequential superoperator powers; cost O(k_grid * t). k_grid = 0
// selects max(256, 4t + 2), which integrates the trigonometric-polynomial
// integrand exactly.
CharFnSample char_fn_exact(const DecoherentWalk& walk, double nu, long t,
                           const InitialCoinState& init, int k_grid = 0, int threads = 0);

// Exact p(., t) by sampling P-hat at the 2t+1 discrete frequencies and
// inverting the finite Fourier relation. Imaginary residues and negative
// clips above tolerance raise numeric_error.
DistributionTable distribution_fourier(const DecoherentWalk& walk, long t,
                                       const InitialCoinState& init, int k_grid = 0,
                                       int threads = 0,
                                       const Tolerances& tol = default_tolerances());

// Brute-force oracle: alternate the coin measurement channel and the unitary
// step on the truncated lattice. O(t^2) memory; capped by tol.density_matrix_cap.
LatticeDensity lattice_density(const DecoherentWalk& walk, long t, const InitialCoinState& init,
                               const Tolerances& tol = default_tolerances());
DistributionTable distribution_density_matrix(const DecoherentWalk& walk, long t,
                                              const InitialCoinState& init,
                                              const Tolerances& tol = default_tolerances());

// Stochastic unraveling of the measurement channel: per step, sample a Kraus
// branch with probability ||A_n psi||^2, renormalize, apply the unitary
// step; the final position is sampled from the trajectory's marginal.
// Deterministic for a fixed (seed, workers) pair.
DistributionTable trajectories(const DecoherentWalk& walk, long t,
                               const std::array<cplx, 2>& init_amplitudes,
                               std::uint64_t n_samples, std::uint64_t seed, int workers = 1);

// p(., t) re-indexed onto the lattice Z / sqrt(t).
struct RescaledPmf {
  long t = 0;
  std::vector<double> x;  // site / sqrt(t)
  std::vector<double> p;
  double moment(int order) const;
};
RescaledPmf rescaled_pmf(const DecoherentWalk& walk, long t, const InitialCoinState& init,
                         int k_grid = 0, int threads = 0,
                         const Tolerances& tol = default_tolerances());

// e(t) = max over nu of |P-hat(nu / sqrt(t), t) - phi(nu)| against the
// limiting characteristic function.
struct ConvergenceReport {
  std::vector<long> t_list;
  std::vector<double> nu_list;
  std::vector<double> max_err;               // per t
  std::vector<std::vector<double>> per_nu;   // per t, per nu
  bool decreasing = false;
};
ConvergenceReport convergence_study(const CoinOperator& coin, double p,
                                    const InitialCoinState& init, const std::vector<long>& t_list,
                                    const std::vector<double>& nu_list, int model_k_grid = 256,
                                    int threads = 0,
                                    const Tolerances& tol = default_tolerances());

}  // namespace qwalk
