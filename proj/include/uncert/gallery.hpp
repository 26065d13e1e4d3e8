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

#ifndef UNCERT_GALLERY_HPP_
#define UNCERT_GALLERY_HPP_

#include <string>
#include <vector>

#include "uncert/measures.hpp"

namespace uncert {

// Worked examples with independently known values, run as self-checking
// reports. The gallery is the regression backbone: every report is expected
// to pass at its stated tolerance.

struct GalleryCheck {
  std::string name;
  double computed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  // How `expected` is obtained: "closed-form" or "enumeration".
  std::string source;
  // Two-sided by default; a floor check only requires
  // computed >= expected - tolerance.
  bool floor = false;
  bool pass = false;
};

struct GalleryReport {
  std::string name;
  std::vector<GalleryCheck> checks;
  bool pass = false;
};

// Two qutrit projective measurements whose distinguishability strictly
// improves with an entangled input: the unentangled optimum is sqrt(5)/3 by
// sign-pattern enumeration, while an explicit entangled witness certifies
// sqrt(3)/2.
GalleryReport entangled_advantage();

// Even-dimensional channel that transmits every conjugate-basis state almost
// perfectly under calibration testing, yet whose best operational
// measurement error stays above 1/8 and whose complement is far from
// constant. Shows that calibration cannot certify a small distinguishability.
// Throws std::invalid_argument unless d is even and >= 2. The two
// semidefinite checks are run only for d <= 4.
GalleryReport calibration_counterexample(int d);

// Two-path interferometer with a which-way detector: path distinguishability
// D = cos(theta), fringe visibility V = sin(theta), so V^2 + D^2 = 1, and
// the four operational measures of the apparatus reproduce (1-D)/2 and
// (1-V)/2. The phase phi enters only the visibility operator, whose norm it
// must not change; measures are evaluated at phi = 0.
GalleryReport wave_particle_duality(double theta, double phi);

enum class CurveKind {
  // (theta, epsilon, nu, bound_nu, bound_eta) for the conjugate-qubit
  // error/disturbance region and the two-outcome apparatus trajectory,
  // theta on a uniform grid over [0, pi/2].
  ErrorDisturbanceRegion,
  // (c, measurement, preparation) precision bounds, c on a logarithmic grid
  // from 1e-3 to 1.
  PrecisionBounds,
};

struct CurveTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// Plot data for the two bound figures. grid is the number of rows, >= 2;
// throws std::invalid_argument otherwise. Closed forms only, no solver.
CurveTable figure_data(CurveKind which, int grid);

// The reports run by the command-line gallery command.
std::vector<GalleryReport> standard_gallery();

}  // namespace uncert

#endif  // UNCERT_GALLERY_HPP_
