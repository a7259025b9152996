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

#include "qwalk/scaling_limit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

// One Newton solve of det(I - z L(k, nu)) = 0 from the given seed. Also
// reports the distance to the nearest other root of the quartic for branch
// collision detection.
cplx newton_root(const DecoherentWalk& walk, double k, double nu, cplx seed,
                 double* min_branch_distance, const Tolerances& tol) {
  const Poly4 g = det_poly(walk.matrix_rep(k, nu).l);
  cplx z = seed;
  bool converged = false;
  for (int it = 0; it < tol.newton_max_iters; ++it) {
    const cplx gv = g.eval(z);
    if (std::abs(gv) <= tol.newton_residual) {
      converged = true;
      break;
    }
    const cplx dv = g.deriv(z);
    if (std::abs(dv) <= 1e-300)
      throw numeric_error("track_root: vanishing derivative at nu = " + std::to_string(nu));
    z -= gv / dv;
  }
  if (!converged && std::abs(g.eval(z)) > tol.newton_residual)
    throw numeric_error("track_root: Newton did not converge at nu = " + std::to_string(nu));
  {
    // One polishing step past the stopping residual; the finite differences
    // taken on z0(nu) divide by h^2 and need the root at machine precision.
    const cplx gv = g.eval(z);
    const cplx dv = g.deriv(z);
    if (std::abs(dv) > 1e-300) {
      const cplx zp = z - gv / dv;
      if (std::abs(g.eval(zp)) <= std::abs(gv)) z = zp;
    }
  }

  if (min_branch_distance != nullptr) {
    // The closest root of the quartic is the tracked one; the distance to the
    // second closest measures separation from the other branches.
    double d_self = 1e300, d_other = 1e300;
    for (const cplx& r : poly_roots(g, tol)) {
      const double d = std::abs(r - z);
      if (d < d_self) {
        d_other = d_self;
        d_self = d;
      } else if (d < d_other) {
        d_other = d;
      }
    }
    *min_branch_distance = d_other;
  }
  return z;
}

cplx continue_to(const DecoherentWalk& walk, double k, double nu_target, int steps,
                 const Tolerances& tol) {
  cplx z = 1.0;
  for (int s = 1; s <= steps; ++s) {
    const double nu = nu_target * static_cast<double>(s) / static_cast<double>(steps);
    double branch_dist = 0;
    z = newton_root(walk, k, nu, z, &branch_dist, tol);
    if (branch_dist < tol.branch_collision)
      throw numeric_error("track_root: root collides with another branch at nu = " +
                          std::to_string(nu));
  }
  return z;
}

double factorial(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<double>(i);
  return f;
}

double binomial(int n, int l) {
  double b = 1;
  for (int i = 0; i < l; ++i) b = b * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return b;
}

void require_theta_ok(double theta, const Tolerances& tol, const char* who) {
  if (theta_is_degenerate(theta, tol.theta_degenerate))
    throw validation_error(std::string(who) +
                           ": theta is a multiple of pi/2; the diffusive limit does not exist "
                           "(see degenerate_limits)");
}

}  // namespace

RootTrack track_root(const CoinOperator& coin, double p, double k, double nu_max, int steps,
                     const Tolerances& tol) {
  if (steps < 1) throw validation_error("track_root: steps must be >= 1");
  const SpectralReport report = classify(coin, p, k, tol);
  if (!report.theorem_applies)
    throw validation_error("track_root: spectral hypotheses fail at k = " + std::to_string(k) +
                           " (eigenvalue 1 not simple or another unit-modulus eigenvalue)");

  const DecoherentWalk walk = projective_walk(coin, p);
  RootTrack track;
  track.k = k;
  track.nu_step = nu_max / static_cast<double>(steps);

  // z0(0): Newton from the theoretical value 1.
  const cplx z_origin = newton_root(walk, k, 0.0, 1.0, nullptr, tol);
  if (std::abs(z_origin - cplx(1.0)) > 1e-10)
    throw numeric_error("track_root: root at nu = 0 is not 1 (got " +
                        std::to_string(std::abs(z_origin - cplx(1.0))) + " away)");

  track.nu.push_back(0.0);
  track.z0.push_back(z_origin);
  cplx z = z_origin;
  for (int s = 1; s <= steps; ++s) {
    const double nu = track.nu_step * static_cast<double>(s);
    double branch_dist = 0;
    z = newton_root(walk, k, nu, z, &branch_dist, tol);
    if (branch_dist < tol.branch_collision)
      throw numeric_error("track_root: root collides with another branch at nu = " +
                          std::to_string(nu));
    track.nu.push_back(nu);
    track.z0.push_back(z);
  }

  // Derivatives at 0: symmetric differences on a halving ladder h, h/2, h/4
  // with two Richardson levels (O(h^6) truncation). Near small spectral gaps
  // the analyticity radius of z0(nu) shrinks and a single level is not
  // accurate enough for the downstream moment contracts.
  const double h = tol.fd_step;
  const int h_steps = 4;
  auto z_at = [&](double nu_target) { return continue_to(walk, k, nu_target, h_steps, tol); };
  std::array<cplx, 3> d1{}, d2{};
  for (int level = 0; level < 3; ++level) {
    const double hh = h / static_cast<double>(1 << level);
    const cplx zp = z_at(hh);
    const cplx zm = z_at(-hh);
    d1[static_cast<std::size_t>(level)] = (zp - zm) / (2.0 * hh);
    d2[static_cast<std::size_t>(level)] = (zp - 2.0 * z_origin + zm) / (hh * hh);
  }
  auto richardson2 = [](const std::array<cplx, 3>& d) {
    const cplx r1a = (4.0 * d[1] - d[0]) / 3.0;
    const cplx r1b = (4.0 * d[2] - d[1]) / 3.0;
    return (16.0 * r1b - r1a) / 15.0;
  };
  track.z0_prime_0 = richardson2(d1);
  track.z0_double_prime_0 = richardson2(d2);

  if (std::abs(track.z0_prime_0) > 1e-6)
    throw numeric_error("track_root: |z0'(0)| = " + std::to_string(std::abs(track.z0_prime_0)) +
                        " exceeds tolerance at k = " + std::to_string(k));
  if (std::abs(track.z0_double_prime_0.imag()) > 1e-6 || track.z0_double_prime_0.real() <= 0)
    throw numeric_error("track_root: z0''(0) = (" +
                        std::to_string(track.z0_double_prime_0.real()) + ", " +
                        std::to_string(track.z0_double_prime_0.imag()) +
                        ") is not real positive at k = " + std::to_string(k));
  return track;
}

double variance_closed_form(double theta, double q, double k, const Tolerances& tol) {
  require_theta_ok(theta, tol, "variance_closed_form");
  if (!(q >= 0.0 && q < 1.0))
    throw validation_error("variance_closed_form: q must lie in [0, 1), got " + std::to_string(q));
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double cot2 = (c * c) / (s * s);
  return (1.0 + 2.0 * q * std::cos(2.0 * k) + q * q) / (1.0 - q * q) * cot2;
}

double LimitModel::max_variance() const {
  double m = 0;
  for (const double v : variance_curve) m = std::max(m, v);
  return m;
}

LimitModel build_limit_model(const CoinOperator& coin, double p, int k_grid, const Tolerances& tol) {
  if (k_grid < 8) throw validation_error("build_limit_model: k_grid must be >= 8");
  LimitModel model;
  model.coin = coin;
  model.p = p;
  model.k_grid = k_grid;
  model.variance_curve.resize(static_cast<std::size_t>(k_grid));
  for (int j = 0; j < k_grid; ++j) {
    const double k = kTwoPi * static_cast<double>(j) / static_cast<double>(k_grid);
    // track_root re-checks the spectral hypotheses at each grid point and
    // validates that the extracted variance is real positive.
    const RootTrack track = track_root(coin, p, k, 4.0 * tol.fd_step, 4, tol);
    model.variance_curve[static_cast<std::size_t>(j)] = track.variance();
  }
  if (coin.o2_form && !theta_is_degenerate(coin.o2_form->theta, tol.theta_degenerate)) {
    const double shift = coin.o2_form->det_sign == -1 ? 0.0 : kPi / 2.0;
    model.closed_form = LimitModel::ClosedForm{coin.o2_form->theta, 1.0 - p, shift};
  }
  return model;
}

double limit_char_fn(const LimitModel& model, double nu) {
  double sum = 0;
  for (const double v : model.variance_curve) sum += std::exp(-0.5 * v * nu * nu);
  return sum / static_cast<double>(model.k_grid);
}

double limit_density(const LimitModel& model, double x) {
  double sum = 0;
  for (const double v : model.variance_curve)
    sum += std::exp(-0.5 * x * x / v) / std::sqrt(kTwoPi * v);
  return sum / static_cast<double>(model.k_grid);
}

double limit_density_normalization(const LimitModel& model, int quad_points) {
  if (quad_points < 3 || quad_points % 2 == 0)
    throw validation_error("limit_density_normalization: need an odd number of points >= 3");
  const double half_width = 8.0 * std::sqrt(model.max_variance());
  const double step = 2.0 * half_width / static_cast<double>(quad_points - 1);
  double sum = 0;
  for (int i = 0; i < quad_points; ++i) {
    const double x = -half_width + step * static_cast<double>(i);
    const double w = (i == 0 || i == quad_points - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    sum += w * limit_density(model, x);
  }
  return sum * step / 3.0;
}

double tn_polynomial(int n, double q) {
  double sum = 0;
  for (int l = 0; l <= n; ++l) {
    const double b = binomial(n, l);
    sum += b * b * std::pow(q, 2 * l);
  }
  return sum;
}

MomentTable moments_closed(double theta, double q, int max_order, const Tolerances& tol) {
  require_theta_ok(theta, tol, "moments_closed");
  if (!(q >= 0.0 && q < 1.0))
    throw validation_error("moments_closed: q must lie in [0, 1), got " + std::to_string(q));
  if (max_order < 0) throw validation_error("moments_closed: negative order");

  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double sigma2 = (c * c) / (s * s) / (1.0 - q * q);

  MomentTable table;
  for (int order = 0; order <= max_order; ++order) {
    table.orders.push_back(order);
    if (order % 2 == 1) {
      table.values.push_back(0.0);
      table.tn_values.push_back(0.0);
      continue;
    }
    const int n = order / 2;
    const double tn = tn_polynomial(n, q);
    const double gauss = factorial(2 * n) / (factorial(n) * std::pow(2.0, n));
    table.values.push_back(gauss * std::pow(sigma2, n) * tn);
    table.tn_values.push_back(tn);
  }
  return table;
}

MomentTable moments_numeric(const LimitModel& model, int max_order) {
  if (max_order < 0) throw validation_error("moments_numeric: negative order");
  MomentTable table;
  for (int order = 0; order <= max_order; ++order) {
    table.orders.push_back(order);
    if (order % 2 == 1) {
      table.values.push_back(0.0);
      table.tn_values.push_back(0.0);
      continue;
    }
    const int n = order / 2;
    double mean_pow = 0;
    for (const double v : model.variance_curve) mean_pow += std::pow(v, n);
    mean_pow /= static_cast<double>(model.k_grid);
    const double gauss = factorial(2 * n) / (factorial(n) * std::pow(2.0, n));
    const double value = gauss * mean_pow;
    table.values.push_back(value);
    if (model.closed_form) {
      const double c = std::cos(model.closed_form->theta);
      const double s = std::sin(model.closed_form->theta);
      const double q = model.closed_form->q;
      const double sigma2 = (c * c) / (s * s) / (1.0 - q * q);
      table.tn_values.push_back(value / (gauss * std::pow(sigma2, n)));
    } else {
      table.tn_values.push_back(0.0);
    }
  }
  return table;
}

double critical_exponent(double theta, int order_2n, const std::vector<double>& p_samples,
                         const Tolerances& tol) {
  require_theta_ok(theta, tol, "critical_exponent");
  if (order_2n <= 0 || order_2n % 2 != 0)
    throw validation_error("critical_exponent: order must be a positive even integer");
  if (p_samples.size() < 2)
    throw validation_error("critical_exponent: need at least 2 decoherence samples");
  for (std::size_t i = 0; i < p_samples.size(); ++i) {
    if (!(p_samples[i] > 0.0 && p_samples[i] < 1.0))
      throw validation_error("critical_exponent: samples must lie in (0, 1)");
    if (i > 0 && !(p_samples[i] < p_samples[i - 1]))
      throw validation_error("critical_exponent: samples must decrease towards 0");
  }

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(p_samples.size());
  for (const double p : p_samples) {
    const MomentTable table = moments_closed(theta, 1.0 - p, order_2n, tol);
    const double x = std::log(p);
    const double y = -std::log(table.values[static_cast<std::size_t>(order_2n)]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

cplx generating_fn(const DecoherentWalk& walk, double k, double nu, cplx z,
                   const InitialCoinState& init) {
  if (!(std::abs(z) < 1.0))
    throw validation_error("generating_fn: |z| must be < 1 for the series to converge");
  const Mat4 l = walk.matrix_rep(k, nu).l;
  Mat4 a = Mat4::identity();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) -= z * l(i, j);
  const PauliVector x = solve4(a, init.pauli());
  return 2.0 * x[0];
}

cplx degenerate_limits(const CoinOperator& coin, const InitialCoinState& init, double nu,
                       const Tolerances& tol) {
  switch (u2_condition(coin, tol)) {
    case U2Condition::diagonal_coin: {
      const double pr = init.density()(0, 0).real();
      const double pl = init.density()(1, 1).real();
      return pr * std::polar(1.0, nu) + pl * std::polar(1.0, -nu);
    }
    case U2Condition::antidiagonal_coin:
      return 1.0;
    case U2Condition::generic:
      break;
  }
  throw validation_error("degenerate_limits: coin is generic; use the diffusive limit");
}

}  // namespace qwalk
