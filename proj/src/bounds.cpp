// Copyright 2026 The uncert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "uncert/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace uncert {

namespace {

BoundReport make_report(double lhs, double rhs,
                        std::map<std::string, double> components) {
  BoundReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = lhs - rhs;
  r.satisfied = r.slack >= -1e-6;
  r.components = std::move(components);
  return r;
}

// |<phi_x|theta_z>|^2 as an n_x by n_z table.
std::vector<std::vector<double>> overlap_table(const Basis& x,
                                               const Basis& z) {
  std::vector<std::vector<double>> t(x.vectors.size());
  for (size_t i = 0; i < x.vectors.size(); ++i) {
    t[i].resize(z.vectors.size());
    for (size_t k = 0; k < z.vectors.size(); ++k)
      t[i][k] = std::norm(x.vectors[i].dot(z.vectors[k]));
  }
  return t;
}

void check_same_dim(const Basis& x, const Basis& z, const char* what) {
  if (x.dim != z.dim) throw std::invalid_argument(std::string(what) +
                                                  ": basis dimensions differ");
}

}  // namespace

GaussianParams make_gaussian_params(double sigma_Q, double sigma_P) {
  if (!(sigma_Q > 0) || !(sigma_P > 0))
    throw std::invalid_argument("make_gaussian_params: widths must be positive");
  GaussianParams p;
  p.sigma_Q = sigma_Q;
  p.sigma_P = sigma_P;
  p.c = 2 * sigma_Q * sigma_P;
  return p;
}

namespace {

void check_params(const GaussianParams& p, const char* what) {
  if (!(p.sigma_Q > 0) || !(p.sigma_P > 0))
    throw std::invalid_argument(std::string(what) + ": widths must be positive");
  const double expected = 2 * p.sigma_Q * p.sigma_P;
  if (std::abs(p.c - expected) > 1e-12 * std::max(1.0, std::abs(expected)))
    throw std::invalid_argument(std::string(what) + ": c inconsistent with widths");
}

}  // namespace

double overlap_bound(const Basis& x, const Basis& z) {
  check_same_dim(x, z, "overlap_bound");
  const auto t = overlap_table(x, z);
  const int d = x.dim;
  double acc = 0.0;
  for (int i = 0; i < d; ++i) {
    double row = 0.0;
    for (int k = 0; k < d; ++k) row = std::max(row, t[i][k]);
    acc += row;
  }
  return 1.0 - acc / d;
}

double demerit_bound(const Basis& x, const Basis& z, DemeritVariant variant) {
  check_same_dim(x, z, "demerit_bound");
  const auto t = overlap_table(x, z);
  const int d = x.dim;
  double worst = 0.0;
  if (variant == DemeritVariant::Uniform) {
    for (int k = 0; k < d; ++k) {
      double dev = 0.0;
      for (int i = 0; i < d; ++i) dev += std::abs(1.0 / d - t[i][k]);
      worst = std::max(worst, 0.5 * dev);
    }
  } else {
    worst = std::numeric_limits<double>::infinity();
    for (int ref = 0; ref < d; ++ref) {
      double row_worst = 0.0;
      for (int k = 0; k < d; ++k) {
        double dev = 0.0;
        for (int i = 0; i < d; ++i) dev += std::abs(t[i][k] - t[i][ref]);
        row_worst = std::max(row_worst, 0.5 * dev);
      }
      worst = std::min(worst, row_worst);
    }
  }
  return (d - 1.0) / d - worst;
}

std::pair<BoundReport, BoundReport> check_theorem1(const Device& e,
                                                   const Basis& x,
                                                   const Basis& z,
                                                   double tolerance) {
  check_same_dim(x, z, "check_theorem1");
  const MeasureResult eps_r = epsilon(e, x, tolerance);
  const MeasureResult dist_r = nu(e, z, tolerance);
  const MeasureResult c_m_xz_r = nu(ideal_measurement(x, true), z, tolerance);
  const MeasureResult c_m_zx_r = nu(ideal_measurement(z, true), x, tolerance);
  const double eps = eps_r.value;
  const double dist = dist_r.value;
  const double gap = std::max({eps_r.gap, dist_r.gap, c_m_xz_r.gap,
                               c_m_zx_r.gap});
  const double iters =
      std::max({eps_r.iterations, dist_r.iterations, c_m_xz_r.iterations,
                c_m_zx_r.iterations});
  const BoundReport first = make_report(
      std::sqrt(2 * eps) + dist, c_m_xz_r.value,
      {{"epsilon", eps},
       {"nu", dist},
       {"c_m", c_m_xz_r.value},
       {"c_m_closed_form", overlap_bound(x, z)},
       {"solver_gap", gap},
       {"solver_iterations", iters}});
  const BoundReport second = make_report(
      eps + std::sqrt(2 * dist), c_m_zx_r.value,
      {{"epsilon", eps},
       {"nu", dist},
       {"c_m", c_m_zx_r.value},
       {"c_m_closed_form", overlap_bound(z, x)},
       {"solver_gap", gap},
       {"solver_iterations", iters}});
  return {first, second};
}

std::pair<BoundReport, BoundReport> check_theorem2(const Device& e,
                                                   const Basis& x,
                                                   const Basis& z,
                                                   double tolerance) {
  check_same_dim(x, z, "check_theorem2");
  const MeasureResult eps_r = epsilon(e, x, tolerance);
  const MeasureResult pres_r = eta(e, z, tolerance);
  const MeasureResult pres_hat_r = eta_hat(e, z, tolerance);
  const Device qx = ideal_measurement(x, true);
  const MeasureResult c_p_r = eta(qx, z, tolerance);
  const MeasureResult c_p_hat_r = eta_hat(qx, z, tolerance);
  const double eps = eps_r.value;
  const double gap = std::max({eps_r.gap, pres_r.gap, pres_hat_r.gap,
                               c_p_r.gap, c_p_hat_r.gap});
  const double iters =
      std::max({eps_r.iterations, pres_r.iterations, pres_hat_r.iterations,
                c_p_r.iterations, c_p_hat_r.iterations});
  const double root = std::sqrt(2 * eps);
  const BoundReport first = make_report(
      root + pres_r.value, c_p_r.value,
      {{"epsilon", eps},
       {"eta", pres_r.value},
       {"c_p", c_p_r.value},
       {"c_p_closed_form", overlap_bound(x, z)},
       {"solver_gap", gap},
       {"solver_iterations", iters}});
  const BoundReport second = make_report(
      root + pres_hat_r.value, c_p_hat_r.value,
      {{"epsilon", eps},
       {"eta_hat", pres_hat_r.value},
       {"c_p_hat", c_p_hat_r.value},
       {"c_p_hat_closed_form",
        demerit_bound(x, z, DemeritVariant::Uniform)},
       {"solver_gap", gap},
       {"solver_iterations", iters}});
  return {first, second};
}

BoundReport check_corollary1(const Device& n, const Basis& x, const Basis& z,
                             double tolerance) {
  check_same_dim(x, z, "check_corollary1");
  const int d = x.dim;
  if (n.in.letters != 1 || n.out.letters != 1 || n.in.dim != d)
    throw std::invalid_argument(
        "check_corollary1: expected a channel matching the bases");
  const MeasureResult eps_r = best_measurement_error(n, x, tolerance);
  const MeasureResult c_p_hat_r =
      eta_hat(ideal_measurement(x, true), z, tolerance);
  const Device complement = stinespring(n).complement;
  const Device pinched_outputs =
      compose(ideal_preparation(z), complement);
  const MeasureResult radius_r = constant_radius(pinched_outputs, tolerance);
  const double bound =
      std::sqrt(2 * eps_r.value) + (d - 1.0) / d - c_p_hat_r.value;
  return make_report(
      bound, radius_r.value,
      {{"epsilon", eps_r.value},
       {"c_p_hat", c_p_hat_r.value},
       {"radius", radius_r.value},
       {"bound", bound},
       {"solver_gap", std::max({eps_r.gap, c_p_hat_r.gap, radius_r.gap})},
       {"solver_iterations",
        static_cast<double>(std::max(
            {eps_r.iterations, c_p_hat_r.iterations, radius_r.iterations}))}});
}

double gaussian_bound(const GaussianParams& p, GaussianBoundKind kind) {
  check_params(p, "gaussian_bound");
  const double c = p.c;
  if (kind == GaussianBoundKind::Measurement) {
    if (c >= 1.0) return 0.0;
    return (1 - c * c) /
           std::pow(1 + std::cbrt(c * c) + std::cbrt(c * c * c * c), 1.5);
  }
  const double w = 1 + c * c;
  const double c23 = std::cbrt(c * c);
  return std::sqrt(w) /
         std::pow(w + c23 * std::cbrt(w * w) + c23 * c23 * std::cbrt(w), 1.5);
}

double optimal_sigma_f(const GaussianParams& p) {
  check_params(p, "optimal_sigma_f");
  if (p.c >= 1.0)
    throw std::invalid_argument(
        "optimal_sigma_f: no positive bound regime at c >= 1");
  const double c23 = std::cbrt(p.c * p.c);
  return p.sigma_P / std::sqrt(c23 * (1 + c23));
}

double gaussian_overlap(double sigma_psi, double sigma_noise, double sigma_f) {
  if (!(sigma_psi > 0) || !(sigma_noise > 0) || !(sigma_f > 0))
    throw std::invalid_argument("gaussian_overlap: widths must be positive");
  return sigma_f / std::sqrt(sigma_f * sigma_f + sigma_noise * sigma_noise +
                             sigma_psi * sigma_psi);
}

}  // namespace uncert
