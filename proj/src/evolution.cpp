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

#include "qwalk/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "qwalk/errors.hpp"
#include "qwalk/parallel.hpp"

namespace qwalk {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559005768;

// Above this horizon the Fourier inversion switches from sequential
// matrix-vector powers to binary matrix powers (same operator, ~log t cost).
constexpr long kSequentialPowerCap = 64;

int default_k_grid(long t) {
  const long exact = 4 * t + 2;
  return static_cast<int>(std::max<long>(256, exact));
}

Mat4 mat4_power(Mat4 m, long t) {
  Mat4 result = Mat4::identity();
  while (t > 0) {
    if (t & 1) result = result * m;
    m = m * m;
    t >>= 1;
  }
  return result;
}

// 2 * first component of L^t v0 == Tr of the evolved operator.
cplx evolved_trace(const Mat4& l, const PauliVector& v0, long t) {
  if (t <= kSequentialPowerCap) {
    PauliVector v = v0;
    for (long s = 0; s < t; ++s) v = l * v;
    return 2.0 * v[0];
  }
  const Mat4 lt = mat4_power(l, t);
  cplx first = 0;
  for (int j = 0; j < 4; ++j) first += lt(0, j) * v0[j];
  return 2.0 * first;
}

// Characteristic function by uniform k-grid quadrature; shared by the
// public operations. `sequential_only` pins the O(k_grid * t) power route.
cplx char_value(const DecoherentWalk& walk, double nu, long t, const PauliVector& v0, int k_grid,
                int threads, bool sequential_only) {
  std::vector<cplx> per_k(static_cast<std::size_t>(k_grid));
  parallel_for(static_cast<std::size_t>(k_grid), threads, [&](std::size_t j) {
    const double k = kTwoPi * static_cast<double>(j) / static_cast<double>(k_grid);
    const Mat4 l = walk.matrix_rep(k, nu).l;
    if (sequential_only) {
      PauliVector v = v0;
      for (long s = 0; s < t; ++s) v = l * v;
      per_k[j] = 2.0 * v[0];
    } else {
      per_k[j] = evolved_trace(l, v0, t);
    }
  });
  cplx sum = 0;
  for (const cplx& v : per_k) sum += v;
  return sum / static_cast<double>(k_grid);
}

// Shared post-processing: fold the raw (possibly complex) site values into a
// validated DistributionTable.
DistributionTable finalize_table(long t, const std::vector<cplx>& raw, Method method,
                                 const Tolerances& tol) {
  DistributionTable table;
  table.t = t;
  table.method = method;
  table.probs.resize(raw.size());

  for (std::size_t i = 0; i < raw.size(); ++i) {
    const double im = std::abs(raw[i].imag());
    table.max_imag_residue = std::max(table.max_imag_residue, im);
    table.probs[i] = raw[i].real();
  }
  if (table.max_imag_residue > tol.imag_residue)
    throw numeric_error("distribution: imaginary residue " + std::to_string(table.max_imag_residue) +
                        " exceeds tolerance");

  for (std::size_t i = 0; i < table.probs.size(); ++i) {
    const long x = static_cast<long>(i) - t;
    double& p = table.probs[i];
    if ((x + t) % 2 != 0) {
      // Parity-forbidden site: the walker moves one step per tick.
      table.max_parity_residue = std::max(table.max_parity_residue, std::abs(p));
      if (std::abs(p) > tol.prob_clip)
        throw numeric_error("distribution: parity-forbidden mass " + std::to_string(p) +
                            " at x = " + std::to_string(x));
      p = 0;
      continue;
    }
    if (p < 0) {
      if (p < -tol.prob_clip)
        throw numeric_error("distribution: negative probability " + std::to_string(p) +
                            " at x = " + std::to_string(x));
      table.clipped_mass += -p;
      p = 0;
    }
  }

  table.total = 0;
  for (const double p : table.probs) table.total += p;
  if (std::abs(table.total - 1.0) > tol.mass_defect)
    throw numeric_error("distribution: total mass " + std::to_string(table.total) +
                        " differs from 1 beyond tolerance");
  return table;
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::fourier: return "fourier";
    case Method::density_matrix: return "density_matrix";
    case Method::monte_carlo: return "monte_carlo";
  }
  return "unknown";
}

double DistributionTable::prob(long x) const {
  if (x < -t || x > t) return 0.0;
  return probs[static_cast<std::size_t>(x + t)];
}

double DistributionTable::mean() const {
  double m = 0;
  for (std::size_t i = 0; i < probs.size(); ++i)
    m += probs[i] * static_cast<double>(static_cast<long>(i) - t);
  return m;
}

double DistributionTable::second_moment() const {
  double m = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double x = static_cast<double>(static_cast<long>(i) - t);
    m += probs[i] * x * x;
  }
  return m;
}

double DistributionTable::variance() const {
  const double mu = mean();
  return second_moment() - mu * mu;
}

double tv_distance(const DistributionTable& a, const DistributionTable& b) {
  if (a.t != b.t) throw validation_error("tv_distance: tables have different horizons");
  double s = 0;
  for (std::size_t i = 0; i < a.probs.size(); ++i) s += std::abs(a.probs[i] - b.probs[i]);
  return 0.5 * s;
}

//============================================================================
// Fourier route
//============================================================================

CharFnSample char_fn_exact(const DecoherentWalk& walk, double nu, long t,
                           const InitialCoinState& init, int k_grid, int threads) {
  if (t < 0) throw validation_error("char_fn_exact: negative time");
  if (k_grid == 0) k_grid = default_k_grid(t);
  if (k_grid < 2) throw validation_error("char_fn_exact: k_grid too small");

  CharFnSample sample;
  sample.nu = nu;
  sample.t = t;
  sample.value = char_value(walk, nu, t, init.pauli(), k_grid, threads, /*sequential_only=*/true);
  if (std::abs(sample.value) > 1.0 + 1e-9)
    throw numeric_error("char_fn_exact: |P-hat| = " + std::to_string(std::abs(sample.value)) +
                        " exceeds 1");
  return sample;
}

DistributionTable distribution_fourier(const DecoherentWalk& walk, long t,
                                       const InitialCoinState& init, int k_grid, int threads,
                                       const Tolerances& tol) {
  if (t < 1) throw validation_error("distribution_fourier: t must be >= 1");
  if (k_grid == 0) k_grid = default_k_grid(t);
  const long n = 2 * t + 1;  // support size: the inversion below is exact
  const PauliVector v0 = init.pauli();

  std::vector<cplx> phat(static_cast<std::size_t>(n));
  parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t j) {
    const double nu = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
    phat[j] = char_value(walk, nu, t, v0, k_grid, /*threads=*/1, /*sequential_only=*/false);
  });

  // p(x) = (1/n) sum_j e^{-i nu_j x} P-hat(nu_j); phases from a single table.
  std::vector<cplx> phase(static_cast<std::size_t>(n));
  for (long m = 0; m < n; ++m)
    phase[static_cast<std::size_t>(m)] =
        std::polar(1.0, -kTwoPi * static_cast<double>(m) / static_cast<double>(n));

  std::vector<cplx> raw(static_cast<std::size_t>(n));
  parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t i) {
    const long x = static_cast<long>(i) - t;
    cplx sum = 0;
    for (long j = 0; j < n; ++j) {
      const long m = ((j * x) % n + n) % n;
      sum += phase[static_cast<std::size_t>(m)] * phat[static_cast<std::size_t>(j)];
    }
    raw[i] = sum / static_cast<double>(n);
  });

  return finalize_table(t, raw, Method::fourier, tol);
}

//============================================================================
// Position-space density matrix (oracle route)
//============================================================================

cplx& LatticeDensity::at(long x, int c, long x2, int c2) {
  const long d = 2 * (2 * t + 1);
  const long row = 2 * (x + t) + c;
  const long col = 2 * (x2 + t) + c2;
  return rho[static_cast<std::size_t>(row * d + col)];
}

const cplx& LatticeDensity::at(long x, int c, long x2, int c2) const {
  const long d = 2 * (2 * t + 1);
  const long row = 2 * (x + t) + c;
  const long col = 2 * (x2 + t) + c2;
  return rho[static_cast<std::size_t>(row * d + col)];
}

double LatticeDensity::trace() const {
  const long d = dim();
  double tr = 0;
  for (long i = 0; i < d; ++i) tr += rho[static_cast<std::size_t>(i * d + i)].real();
  return tr;
}

double LatticeDensity::hermiticity_defect() const {
  const long d = dim();
  double defect = 0;
  for (long i = 0; i < d; ++i)
    for (long j = 0; j <= i; ++j)
      defect = std::max(defect, std::abs(rho[static_cast<std::size_t>(i * d + j)] -
                                         std::conj(rho[static_cast<std::size_t>(j * d + i)])));
  return defect;
}

double LatticeDensity::smallest_eigenvalue_estimate(int iters) const {
  const long d = dim();
  // Power iteration on (c I - rho); c = trace + 1 dominates the spectrum of
  // a near-PSD density matrix.
  const double c = trace() + 1.0;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cplx> v(static_cast<std::size_t>(d));
  for (auto& x : v) x = cplx(gauss(rng), gauss(rng));

  std::vector<cplx> w(static_cast<std::size_t>(d));
  double lambda = 0;
  for (int it = 0; it < iters; ++it) {
    for (long i = 0; i < d; ++i) {
      cplx s = c * v[static_cast<std::size_t>(i)];
      const cplx* row = &rho[static_cast<std::size_t>(i * d)];
      for (long j = 0; j < d; ++j) s -= row[j] * v[static_cast<std::size_t>(j)];
      w[static_cast<std::size_t>(i)] = s;
    }
    double norm = 0;
    for (const auto& x : w) norm += std::norm(x);
    norm = std::sqrt(norm);
    if (norm == 0) return c;
    lambda = norm;  // Rayleigh quotient surrogate for the dominant mode
    for (long i = 0; i < d; ++i) v[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] / norm;
  }
  return c - lambda;
}

LatticeDensity lattice_density(const DecoherentWalk& walk, long t, const InitialCoinState& init,
                               const Tolerances& tol) {
  if (t < 0) throw validation_error("lattice_density: negative time");
  if (t > tol.density_matrix_cap)
    throw resource_error("lattice_density: t = " + std::to_string(t) + " exceeds the oracle cap " +
                         std::to_string(tol.density_matrix_cap));

  LatticeDensity state;
  state.t = t;
  const long d = state.dim();
  state.rho.assign(static_cast<std::size_t>(d * d), cplx(0));
  for (int c = 0; c < 2; ++c)
    for (int c2 = 0; c2 < 2; ++c2) state.at(0, c, 0, c2) = init.density()(c, c2);

  const Mat2 u = walk.coin().u;
  std::vector<cplx> next(static_cast<std::size_t>(d * d));
  for (long step = 1; step <= t; ++step) {
    // Measurement channel followed by the coin rotation, blockwise on the
    // coin indices.
    for (long x = -t; x <= t; ++x) {
      for (long x2 = -t; x2 <= t; ++x2) {
        Mat2 b;
        for (int c = 0; c < 2; ++c)
          for (int c2 = 0; c2 < 2; ++c2) b(c, c2) = state.at(x, c, x2, c2);
        b = u * apply_channel(walk.kraus(), b) * u.adjoint();
        for (int c = 0; c < 2; ++c)
          for (int c2 = 0; c2 < 2; ++c2) state.at(x, c, x2, c2) = b(c, c2);
      }
    }
    // Conditional shift: coin R moves right, coin L moves left.
    std::fill(next.begin(), next.end(), cplx(0));
    auto idx = [t](long x, int c) { return 2 * (x + t) + c; };
    for (long x = -t; x <= t; ++x) {
      for (int c = 0; c < 2; ++c) {
        const long xs = x + (c == 0 ? 1 : -1);
        if (xs < -t || xs > t) continue;
        for (long x2 = -t; x2 <= t; ++x2) {
          for (int c2 = 0; c2 < 2; ++c2) {
            const long xs2 = x2 + (c2 == 0 ? 1 : -1);
            if (xs2 < -t || xs2 > t) continue;
            next[static_cast<std::size_t>(idx(xs, c) * d + idx(xs2, c2))] =
                state.rho[static_cast<std::size_t>(idx(x, c) * d + idx(x2, c2))];
          }
        }
      }
    }
    state.rho.swap(next);

    const double tr = state.trace();
    if (std::abs(tr - 1.0) > 1e-9)
      throw numeric_error("lattice_density: trace drift " + std::to_string(tr - 1.0) +
                          " at step " + std::to_string(step));
  }
  return state;
}

DistributionTable distribution_density_matrix(const DecoherentWalk& walk, long t,
                                              const InitialCoinState& init,
                                              const Tolerances& tol) {
  if (t < 1) throw validation_error("distribution_density_matrix: t must be >= 1");
  const LatticeDensity state = lattice_density(walk, t, init, tol);
  std::vector<cplx> raw(static_cast<std::size_t>(2 * t + 1));
  for (long x = -t; x <= t; ++x)
    raw[static_cast<std::size_t>(x + t)] = state.at(x, 0, x, 0) + state.at(x, 1, x, 1);
  return finalize_table(t, raw, Method::density_matrix, tol);
}

//============================================================================
// Monte-Carlo trajectories
//============================================================================

namespace {

inline double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void run_trajectories(const DecoherentWalk& walk, long t, const std::array<cplx, 2>& amp,
                      std::uint64_t n_samples, std::mt19937_64& rng,
                      std::vector<std::uint64_t>& counts) {
  const std::size_t sites = static_cast<std::size_t>(2 * t + 1);
  const std::size_t n_ops = walk.kraus().operators.size();
  const Mat2 u = walk.coin().u;

  std::vector<cplx> psi(2 * sites), tmp(2 * sites);
  std::vector<std::vector<cplx>> branch(n_ops, std::vector<cplx>(2 * sites));
  std::vector<double> weight(n_ops);

  for (std::uint64_t s = 0; s < n_samples; ++s) {
    std::fill(psi.begin(), psi.end(), cplx(0));
    psi[static_cast<std::size_t>(2 * t + 0)] = amp[0];  // x = 0, coin R
    psi[static_cast<std::size_t>(2 * t + 1)] = amp[1];  // x = 0, coin L

    for (long step = 0; step < t; ++step) {
      // Branch weights ||A_n psi||^2; their sum is 1 by completeness.
      for (std::size_t n = 0; n < n_ops; ++n) {
        const Mat2& a = walk.kraus().operators[n];
        double w = 0;
        auto& out = branch[n];
        for (std::size_t site = 0; site < sites; ++site) {
          const cplx pr = psi[2 * site + 0];
          const cplx pl = psi[2 * site + 1];
          const cplx qr = a(0, 0) * pr + a(0, 1) * pl;
          const cplx ql = a(1, 0) * pr + a(1, 1) * pl;
          out[2 * site + 0] = qr;
          out[2 * site + 1] = ql;
          w += std::norm(qr) + std::norm(ql);
        }
        weight[n] = w;
      }
      double wsum = 0;
      for (const double w : weight) wsum += w;
      const double draw = u01(rng) * wsum;
      std::size_t pick = n_ops - 1;
      double acc = 0;
      for (std::size_t n = 0; n < n_ops; ++n) {
        acc += weight[n];
        if (draw < acc) {
          pick = n;
          break;
        }
      }
      if (weight[pick] <= 0)
        throw numeric_error("trajectories: selected a zero-norm Kraus branch");
      const double inv = 1.0 / std::sqrt(weight[pick]);

      // Renormalize, rotate the coin, shift.
      std::fill(tmp.begin(), tmp.end(), cplx(0));
      const auto& src = branch[pick];
      for (std::size_t site = 0; site < sites; ++site) {
        const long x = static_cast<long>(site) - t;
        const cplx pr = inv * src[2 * site + 0];
        const cplx pl = inv * src[2 * site + 1];
        const cplx qr = u(0, 0) * pr + u(0, 1) * pl;
        const cplx ql = u(1, 0) * pr + u(1, 1) * pl;
        if (x + 1 <= t) tmp[2 * static_cast<std::size_t>(x + 1 + t) + 0] += qr;
        if (x - 1 >= -t) tmp[2 * static_cast<std::size_t>(x - 1 + t) + 1] += ql;
      }
      psi.swap(tmp);
    }

    // Sample the final position from the trajectory's marginal.
    double norm = 0;
    for (const auto& x : psi) norm += std::norm(x);
    const double draw = u01(rng) * norm;
    double acc = 0;
    std::size_t site_pick = sites - 1;
    for (std::size_t site = 0; site < sites; ++site) {
      acc += std::norm(psi[2 * site + 0]) + std::norm(psi[2 * site + 1]);
      if (draw < acc) {
        site_pick = site;
        break;
      }
    }
    ++counts[site_pick];
  }
}

}  // namespace

DistributionTable trajectories(const DecoherentWalk& walk, long t,
                               const std::array<cplx, 2>& init_amplitudes,
                               std::uint64_t n_samples, std::uint64_t seed, int workers) {
  if (t < 0) throw validation_error("trajectories: negative time");
  if (n_samples < 1) throw validation_error("trajectories: need at least one sample");
  if (workers < 1) throw validation_error("trajectories: need at least one worker");

  const double n2 = std::norm(init_amplitudes[0]) + std::norm(init_amplitudes[1]);
  if (std::abs(n2 - 1.0) > 1e-12)
    throw validation_error("trajectories: initial amplitudes must be normalized");

  const std::size_t sites = static_cast<std::size_t>(2 * t + 1);
  std::vector<std::vector<std::uint64_t>> counts(
      static_cast<std::size_t>(workers), std::vector<std::uint64_t>(sites, 0));

  // Derived per-worker seeds; sample counts split as evenly as possible.
  const std::uint64_t base = n_samples / static_cast<std::uint64_t>(workers);
  const std::uint64_t extra = n_samples % static_cast<std::uint64_t>(workers);
  parallel_for(static_cast<std::size_t>(workers), workers, [&](std::size_t w) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(w)};
    std::mt19937_64 rng(seq);
    const std::uint64_t mine = base + (w < extra ? 1 : 0);
    run_trajectories(walk, t, init_amplitudes, mine, rng, counts[w]);
  });

  DistributionTable table;
  table.t = t;
  table.method = Method::monte_carlo;
  table.mc_samples = n_samples;
  table.seed = seed;
  table.workers = workers;
  table.rng_id = "mt19937_64+u53";
  table.probs.assign(sites, 0.0);
  for (const auto& c : counts)
    for (std::size_t i = 0; i < sites; ++i)
      table.probs[i] += static_cast<double>(c[i]) / static_cast<double>(n_samples);
  table.total = 0;
  for (const double p : table.probs) table.total += p;
  return table;
}

//============================================================================
// Rescaled pmf and convergence
//============================================================================

double RescaledPmf::moment(int order) const {
  double m = 0;
  for (std::size_t i = 0; i < x.size(); ++i) m += p[i] * std::pow(x[i], order);
  return m;
}

RescaledPmf rescaled_pmf(const DecoherentWalk& walk, long t, const InitialCoinState& init,
                         int k_grid, int threads, const Tolerances& tol) {
  if (t < 1) throw validation_error("rescaled_pmf: t must be >= 1");
  const DistributionTable table = distribution_fourier(walk, t, init, k_grid, threads, tol);
  RescaledPmf out;
  out.t = t;
  const double scale = 1.0 / std::sqrt(static_cast<double>(t));
  out.x.resize(table.probs.size());
  out.p = table.probs;
  for (std::size_t i = 0; i < out.x.size(); ++i)
    out.x[i] = static_cast<double>(static_cast<long>(i) - t) * scale;
  return out;
}

ConvergenceReport convergence_study(const CoinOperator& coin, double p,
                                    const InitialCoinState& init, const std::vector<long>& t_list,
                                    const std::vector<double>& nu_list, int model_k_grid,
                                    int threads, const Tolerances& tol) {
  if (t_list.empty() || nu_list.empty())
    throw validation_error("convergence_study: empty t or nu list");
  const LimitModel model = build_limit_model(coin, p, model_k_grid, tol);
  const DecoherentWalk walk = projective_walk(coin, p);

  ConvergenceReport report;
  report.t_list = t_list;
  report.nu_list = nu_list;
  for (const long t : t_list) {
    if (t < 1) throw validation_error("convergence_study: t must be >= 1");
    const double rt = std::sqrt(static_cast<double>(t));
    std::vector<double> errs;
    double worst = 0;
    for (const double nu : nu_list) {
      const CharFnSample sample = char_fn_exact(walk, nu / rt, t, init, 0, threads);
      const double err = std::abs(sample.value - cplx(limit_char_fn(model, nu)));
      errs.push_back(err);
      worst = std::max(worst, err);
    }
    report.per_nu.push_back(std::move(errs));
    report.max_err.push_back(worst);
  }
  report.decreasing = true;
  for (std::size_t i = 1; i < report.max_err.size(); ++i)
    if (!(report.max_err[i] < report.max_err[i - 1])) report.decreasing = false;
  return report;
}

}  // namespace qwalk
