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

#ifndef UNCERT_BOUNDS_HPP_
#define UNCERT_BOUNDS_HPP_

#include <map>
#include <string>
#include <utility>

#include "uncert/channels.hpp"
#include "uncert/measures.hpp"

namespace uncert {

// Position/momentum precision pair; c = 2 sigma_Q sigma_P is carried
// explicitly and checked for consistency on use.
struct GaussianParams {
  double sigma_Q = 0.0;
  double sigma_P = 0.0;
  double c = 0.0;
};

GaussianParams make_gaussian_params(double sigma_Q, double sigma_P);

// Every report states its inequality as lhs >= rhs, so that `satisfied`
// uniformly means "the inequality holds within slack -1e-6". Checks whose
// natural reading is an upper bound (corollary reports) are stored with the
// bounding expression as lhs; `components` carries each named ingredient.
struct BoundReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // lhs - rhs
  bool satisfied = false;
  std::map<std::string, double> components;
};

// Closed-form lower bound on measurement and preservation complementarity:
// 1 - (1/d) sum_x max_z |<phi_x|theta_z>|^2.
double overlap_bound(const Basis& x, const Basis& z);

enum class DemeritVariant { Uniform, RowP };

// Closed-form lower bound on the demerit complementarity. Uniform pits the
// flat distribution against every row of overlaps; RowP uses the overlap row
// of the best fixed z'.
double demerit_bound(const Basis& x, const Basis& z, DemeritVariant variant);

// sqrt(2 eps_X) + nu_Z >= c_M(X,Z) and eps_X + sqrt(2 nu_Z) >= c_M(Z,X).
// The complementarity values come from their defining programs; the
// closed-form lower bound is reported alongside in components.
std::pair<BoundReport, BoundReport> check_theorem1(const Device& e,
                                                   const Basis& x,
                                                   const Basis& z,
                                                   double tolerance = tol().sdp);

// sqrt(2 eps_X) + eta_Z >= c_P(X,Z) and sqrt(2 eps_X) + eta_hat_Z >=
// c_hat_P(X,Z).
std::pair<BoundReport, BoundReport> check_theorem2(const Device& e,
                                                   const Basis& x,
                                                   const Basis& z,
                                                   double tolerance = tol().sdp);

// Leakage bound: the Z-pinched complement of a channel that admits a good X
// measurement is nearly constant. lhs = sqrt(2 eps) + (d-1)/d - c_hat_P,
// rhs = Chebyshev radius of the complement outputs on Z-basis inputs.
BoundReport check_corollary1(const Device& n, const Basis& x, const Basis& z,
                             double tolerance = tol().sdp);

enum class GaussianBoundKind { Measurement, Preparation };

// Precision-limited position/momentum uncertainty bounds in terms of
// c = 2 sigma_Q sigma_P. The measurement bound is clamped to zero at c >= 1;
// the preparation bound is positive for every c.
double gaussian_bound(const GaussianParams& p, GaussianBoundKind kind);

// Width of the momentum test function maximizing the distinguishability
// lower bound; only defined for c < 1 (the closed form assumes a narrow
// input state, and is exact in that limit).
double optimal_sigma_f(const GaussianParams& p);

// Overlap of a width-sigma_f momentum test against a sigma_noise-limited
// measurement of a sigma_psi-wide state:
// sigma_f / sqrt(sigma_f^2 + sigma_noise^2 + sigma_psi^2).
double gaussian_overlap(double sigma_psi, double sigma_noise, double sigma_f);

}  // namespace uncert

#endif  // UNCERT_BOUNDS_HPP_
