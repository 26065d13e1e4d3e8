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

#include "uncert/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "uncert/bounds.hpp"
#include "uncert/channels.hpp"
#include "uncert/linalg.hpp"
#include "uncert/measures.hpp"

namespace uncert {

namespace {

constexpr double kPi = 3.14159265358979323846;

GalleryCheck make_check(std::string name, double computed, double expected,
                        double tolerance, std::string source,
                        bool floor = false) {
  GalleryCheck c;
  c.name = std::move(name);
  c.computed = computed;
  c.expected = expected;
  c.tolerance = tolerance;
  c.source = std::move(source);
  c.floor = floor;
  c.pass = floor ? computed >= expected - tolerance
                 : std::abs(computed - expected) <= tolerance;
  return c;
}

GalleryReport finish(std::string name, std::vector<GalleryCheck> checks) {
  GalleryReport r;
  r.name = std::move(name);
  r.checks = std::move(checks);
  r.pass = std::all_of(r.checks.begin(), r.checks.end(),
                       [](const GalleryCheck& c) { return c.pass; });
  return r;
}

std::string format_angle(double theta) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", theta);
  return buf;
}

}  // namespace

GalleryReport entangled_advantage() {
  const Basis computational = conjugate_basis(3).theta;
  std::vector<Vector> tilted(3, Vector(3));
  tilted[0] << 2.0 / 3, 2.0 / 3, -1.0 / 3;
  tilted[1] << -1.0 / 3, 2.0 / 3, 2.0 / 3;
  tilted[2] << 2.0 / 3, -1.0 / 3, 2.0 / 3;
  const Basis skew = make_basis(std::move(tilted), "skew");

  const Device m1 = ideal_measurement(computational, false);
  const Device m2 = ideal_measurement(skew, false);
  const double separable = unentangled_distinguishability(m1, m2);
  const double entangled = diamond_distance(m1, m2).value;

  // Witness input: the maximally entangled vector filtered through the
  // square root of a rank-two state orthogonal to the uniform vector.
  Matrix rho = Matrix::Identity(3, 3) * 0.5;
  rho -= Matrix::Constant(3, 3, Complex(1.0 / 6, 0.0));
  const Matrix sq = psd_sqrt(rho);
  const Vector omega = identity_vec(3);
  const Matrix filter = kron(Matrix::Identity(3, 3), sq);
  const Matrix psi = filter * (omega * omega.adjoint()) * filter.adjoint();
  double witness = 0.0;
  for (int k = 0; k < 3; ++k) {
    const Matrix t = basis_projector(computational, k) -
                     basis_projector(skew, k);
    const Matrix reduced =
        partial_trace(kron(t, Matrix::Identity(3, 3)) * psi, {3, 3}, {1});
    witness += 0.5 * schatten_norm(reduced, Schatten::Trace);
  }

  std::vector<GalleryCheck> checks;
  checks.push_back(make_check("unentangled value", separable,
                              std::sqrt(5.0) / 3, 1e-9, "enumeration"));
  checks.push_back(make_check("entangled witness", witness,
                              std::sqrt(3.0) / 2, 1e-10, "closed-form"));
  checks.push_back(make_check("entangled value", entangled,
                              std::sqrt(3.0) / 2, 1e-7, "closed-form",
                              /*floor=*/true));
  return finish("entangled-advantage", std::move(checks));
}

GalleryReport calibration_counterexample(int d) {
  if (d < 2 || d % 2 != 0) {
    throw std::invalid_argument(
        "calibration_counterexample: d must be even and >= 2");
  }
  // Column z of the table is a distribution over y: the first two columns
  // occupy complementary halves of the outcomes, the rest are uniform.
  std::vector<std::vector<double>> p(d, std::vector<double>(d, 0.0));
  for (int y = 0; y < d / 2; ++y) p[y][0] = 2.0 / d;
  for (int y = d / 2; y < d; ++y) p[y][1] = 2.0 / d;
  for (int z = 2; z < d; ++z) {
    for (int y = 0; y < d; ++y) p[y][z] = 1.0 / d;
  }

  // |z> -> sum_y sqrt(p_yz) |y>|z>|y>, output factors (y, z-copy), then the
  // environment copy of y. The complement keeps the environment instead.
  Matrix v = Matrix::Zero(d * d * d, d);
  Matrix vc = Matrix::Zero(d * d * d, d);
  for (int z = 0; z < d; ++z) {
    for (int y = 0; y < d; ++y) {
      const double amp = std::sqrt(p[y][z]);
      v((y * d + z) * d + y, z) = amp;
      vc(y * d * d + (y * d + z), z) = amp;
    }
  }
  const Device n = channel_from_isometry(v, d * d, d);
  const Device complement = channel_from_isometry(vc, d, d * d);

  const ConjugateBases cb = conjugate_basis(d);
  // Calibration score: feed each Fourier state, measure the z-copy factor in
  // the Fourier basis, and average the success probability.
  double guess = 0.0;
  for (int x = 0; x < d; ++x) {
    const Matrix out = apply_schrodinger(n, 0, basis_projector(cb.phi, x))[0];
    const Matrix effect =
        kron(Matrix::Identity(d, d), basis_projector(cb.phi, x));
    guess += std::real(trace_product(effect, out));
  }
  guess /= d;

  double oracle = 0.0;
  for (int y = 0; y < d; ++y) {
    double row = 0.0;
    for (int z = 0; z < d; ++z) row += std::sqrt(p[y][z]);
    oracle += row * row;
  }
  oracle /= static_cast<double>(d) * d;

  const double closed =
      std::pow(d + std::sqrt(2.0) - 2.0, 2.0) / (static_cast<double>(d) * d);

  std::vector<GalleryCheck> checks;
  checks.push_back(
      make_check("guessing probability", guess, closed, 1e-9, "closed-form"));
  checks.push_back(make_check("guessing probability oracle", oracle, closed,
                              1e-12, "closed-form"));
  if (d <= 4) {
    const MeasureResult err = best_measurement_error(n, cb.phi);
    const Device pinched =
        compose(ideal_preparation(cb.theta), complement);
    const MeasureResult radius = constant_radius(pinched);
    checks.push_back(make_check("best measurement error", err.value, 0.125,
                                1e-6, "closed-form", /*floor=*/true));
    checks.push_back(make_check("complement radius", radius.value, 0.5, 1e-6,
                                "closed-form", /*floor=*/true));
  }
  return finish("calibration-counterexample d=" + std::to_string(d),
                std::move(checks));
}

GalleryReport wave_particle_duality(double theta, double phi) {
  const ConjugateBases cb = conjugate_basis(2);

  // Detector states with overlap sin(theta).
  Vector g0(2), g1(2);
  g0 << std::cos(theta / 2), std::sin(theta / 2);
  g1 << std::sin(theta / 2), std::cos(theta / 2);
  const Matrix diff = g0 * g0.adjoint() - g1 * g1.adjoint();
  const double dist = 0.5 * schatten_norm(diff, Schatten::Trace);

  // Interferometer isometry with the phase in place; the visibility is the
  // operator norm of the pulled-back population difference and must not
  // depend on phi.
  Matrix u = Matrix::Zero(4, 2);
  for (int x = 0; x < 2; ++x) {
    const Vector& wave = cb.phi.vectors[x];
    const Vector lifted = kron(Matrix(wave), Matrix(x == 0 ? g0 : g1));
    u += std::exp(Complex(0.0, x * phi)) * lifted * wave.adjoint();
  }
  const Matrix population =
      basis_projector(cb.theta, 0) - basis_projector(cb.theta, 1);
  const Matrix pulled =
      u.adjoint() * kron(population, Matrix::Identity(2, 2)) * u;
  const double vis = schatten_norm(pulled, Schatten::Operator);

  const Device e = mz_apparatus(theta);
  const double err = epsilon(e, cb.phi).value;
  const double meas = nu(e, cb.theta).value;
  const double pres = eta(e, cb.theta).value;
  const double demerit = eta_hat(e, cb.theta).value;

  std::vector<GalleryCheck> checks;
  checks.push_back(make_check("path distinguishability", dist,
                              std::cos(theta), 1e-12, "closed-form"));
  checks.push_back(
      make_check("fringe visibility", vis, std::sin(theta), 1e-12,
                 "closed-form"));
  checks.push_back(make_check("duality identity", vis * vis + dist * dist,
                              1.0, 1e-12, "closed-form"));
  checks.push_back(
      make_check("error", err, 0.5 * (1 - dist), 1e-6, "closed-form"));
  checks.push_back(make_check("measurement disturbance", meas,
                              0.5 * (1 - vis), 1e-6, "closed-form"));
  checks.push_back(make_check("preservation disturbance", pres,
                              0.5 * (1 - vis), 1e-6, "closed-form"));
  checks.push_back(make_check("constant disturbance", demerit,
                              0.5 * (1 - vis), 1e-6, "closed-form"));
  return finish("wave-particle-duality theta=" + format_angle(theta),
                std::move(checks));
}

CurveTable figure_data(CurveKind which, int grid) {
  if (grid < 2) throw std::invalid_argument("figure_data: grid must be >= 2");
  CurveTable t;
  if (which == CurveKind::ErrorDisturbanceRegion) {
    t.columns = {"theta", "epsilon", "nu", "bound_nu", "bound_eta"};
    for (int k = 0; k < grid; ++k) {
      const double theta = (kPi / 2) * k / (grid - 1);
      const double eps = 0.5 * (1 - std::cos(theta));
      const double dist = 0.5 * (1 - std::sin(theta));
      // Allowed-region boundary for conjugate qubit observables: the merit
      // branch sqrt(2 eps) + nu >= 1/2 and the reversed branch
      // eps + sqrt(2 nu) >= 1/2; only the former applies to eta.
      const double merit = 0.5 - std::sqrt(2 * eps);
      const double reversed =
          eps <= 0.5 ? 0.5 * (0.5 - eps) * (0.5 - eps) : 0.0;
      const double bound_nu = std::max({merit, reversed, 0.0});
      const double bound_eta = std::max(merit, 0.0);
      t.rows.push_back({theta, eps, dist, bound_nu, bound_eta});
    }
  } else {
    t.columns = {"c", "measurement", "preparation"};
    for (int k = 0; k < grid; ++k) {
      const double exponent = -3.0 * (1.0 - static_cast<double>(k) /
                                                (grid - 1));
      const double c = std::pow(10.0, exponent);
      const GaussianParams p = make_gaussian_params(c / 2, 1.0);
      t.rows.push_back({c, gaussian_bound(p, GaussianBoundKind::Measurement),
                        gaussian_bound(p, GaussianBoundKind::Preparation)});
    }
  }
  return t;
}

std::vector<GalleryReport> standard_gallery() {
  std::vector<GalleryReport> reports;
  reports.push_back(entangled_advantage());
  reports.push_back(calibration_counterexample(2));
  reports.push_back(calibration_counterexample(4));
  for (const double theta : {0.0, kPi / 4, kPi / 3, kPi / 2}) {
    reports.push_back(wave_particle_duality(theta, 0.0));
  }
  return reports;
}

}  // namespace uncert
