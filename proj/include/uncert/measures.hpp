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

#ifndef UNCERT_MEASURES_HPP_
#define UNCERT_MEASURES_HPP_

#include <string>
#include <vector>

#include "uncert/channels.hpp"

namespace uncert {

// Operational distinguishability and error/disturbance measures, each cast
// as a semidefinite program over Choi blocks. Minimization forms give the
// reported value (a safe upper bound); the matching maximization form is
// solved as a certificate and the disagreement is folded into `gap`. The
// diamond distance reports the maximization value instead, checked against
// its dual.

struct MeasureResult {
  double value = 0.0;
  double gap = 0.0;
  // Largest interior-point iteration count among the solved forms.
  int iterations = 0;
  std::vector<Matrix> optimizer;
  std::string formulation;
};

struct Complementarity {
  MeasureResult c_m;      // measurement disturbance of the ideal X device
  MeasureResult c_p;      // preparation disturbance
  MeasureResult c_p_hat;  // preparation demerit
};

// delta(E1, E2) = half the completely bounded norm of the difference.
MeasureResult diamond_distance(const Device& e1, const Device& e2,
                               double tolerance = tol().sdp);

// Best distinguishability achievable without an entangled input: maximum
// over sign vectors of the operator norm of the signed POVM-difference sum.
// Both devices must be plain measurements with the same outcome count
// (at most 20; the sign patterns are enumerated).
double unentangled_distinguishability(const Device& m1, const Device& m2);

// Error of E as an X measurement: distance to the ideal X measurement after
// the best classical postprocessing of outcomes.
MeasureResult epsilon(const Device& e, const Basis& x,
                      double tolerance = tol().sdp);

// Measurement disturbance: distance from the ideal Z measurement of the
// corrected channel (best recovery from outcome and post-measurement state).
MeasureResult nu(const Device& e, const Basis& z,
                 double tolerance = tol().sdp);

// Preparation disturbance: how well Z-basis inputs survive E followed by
// the best recovery.
MeasureResult eta(const Device& e, const Basis& z,
                  double tolerance = tol().sdp);

// Preparation demerit: (d-1)/d minus the distance of P_Z followed by E from
// the nearest constant channel.
MeasureResult eta_hat(const Device& e, const Basis& z,
                      double tolerance = tol().sdp);

// Pinched-input variant of the demerit; equal to eta_hat, kept as an
// independent cross-check formulation.
MeasureResult eta_tilde(const Device& e, const Basis& z,
                        double tolerance = tol().sdp);

// Chebyshev radius in trace distance of the output family of a
// classical-input channel; optimizer holds the center state.
MeasureResult constant_radius(const Device& f, double tolerance = tol().sdp);

// The three complementarity constants of a basis pair, obtained by treating
// the ideal X instrument as the device under test.
Complementarity complementarity(const Basis& x, const Basis& z,
                                double tolerance = tol().sdp);

// Error in measuring X given only the output of channel N, minimized over
// all measurements on that output.
MeasureResult best_measurement_error(const Device& n, const Basis& x,
                                     double tolerance = tol().sdp);

}  // namespace uncert

#endif  // UNCERT_MEASURES_HPP_
