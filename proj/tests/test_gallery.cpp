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

#include <cmath>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "uncert/bounds.hpp"

namespace uncert {
namespace {

const double kPi = std::acos(-1.0);

double find_check(const GalleryReport& r, const std::string& name) {
  for (const GalleryCheck& c : r.checks) {
    if (c.name == name) return c.computed;
  }
  FAIL("missing check ", name);
  return 0.0;
}

TEST_CASE("entangled advantage report") {
  const GalleryReport r = entangled_advantage();
  CHECK(r.pass);
  const double separable = find_check(r, "unentangled value");
  const double witness = find_check(r, "entangled witness");
  const double entangled = find_check(r, "entangled value");
  CHECK(separable == doctest::Approx(std::sqrt(5.0) / 3).epsilon(1e-12));
  CHECK(witness == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-10));
  CHECK(entangled >= witness - 1e-7);
  CHECK(entangled > separable + 0.1);
}

TEST_CASE("calibration counterexample guessing probabilities") {
  const GalleryReport two = calibration_counterexample(2);
  CHECK(two.pass);
  CHECK(two.checks.size() == 4);
  CHECK(find_check(two, "guessing probability") ==
        doctest::Approx(0.5).epsilon(1e-9));

  const GalleryReport four = calibration_counterexample(4);
  CHECK(four.pass);
  CHECK(four.checks.size() == 4);
  const double closed = std::pow(2 + std::sqrt(2.0), 2.0) / 16;
  CHECK(find_check(four, "guessing probability") ==
        doctest::Approx(closed).epsilon(1e-9));
  CHECK(find_check(four, "guessing probability oracle") ==
        doctest::Approx(closed).epsilon(1e-12));
  CHECK(find_check(four, "best measurement error") >= 0.125 - 1e-6);
  CHECK(find_check(four, "complement radius") >= 0.5 - 1e-6);
}

TEST_CASE("calibration counterexample skips solver checks above dimension "
          "four") {
  const GalleryReport six = calibration_counterexample(6);
  CHECK(six.pass);
  CHECK(six.checks.size() == 2);
  const double closed = std::pow(4 + std::sqrt(2.0), 2.0) / 36;
  CHECK(find_check(six, "guessing probability") ==
        doctest::Approx(closed).epsilon(1e-9));
}

TEST_CASE("calibration counterexample rejects odd dimensions") {
  CHECK_THROWS_AS(calibration_counterexample(3), std::invalid_argument);
  CHECK_THROWS_AS(calibration_counterexample(0), std::invalid_argument);
  CHECK_THROWS_AS(calibration_counterexample(-2), std::invalid_argument);
}

TEST_CASE("duality report endpoints") {
  const GalleryReport ideal = wave_particle_duality(0.0, 0.0);
  CHECK(ideal.pass);
  CHECK(find_check(ideal, "path distinguishability") ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(find_check(ideal, "error")) <= 1e-7);
  CHECK(find_check(ideal, "measurement disturbance") ==
        doctest::Approx(0.5).epsilon(1e-6));

  const GalleryReport off = wave_particle_duality(kPi / 2, 0.0);
  CHECK(off.pass);
  CHECK(find_check(off, "fringe visibility") ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(find_check(off, "measurement disturbance")) <= 1e-7);
  CHECK(std::abs(find_check(off, "preservation disturbance")) <= 1e-7);
  CHECK(std::abs(find_check(off, "constant disturbance")) <= 1e-7);
}

TEST_CASE("duality visibility ignores the phase") {
  for (const double phi : {0.0, 0.3, 1.1}) {
    const GalleryReport r = wave_particle_duality(kPi / 3, phi);
    CHECK(r.pass);
    CHECK(find_check(r, "fringe visibility") ==
          doctest::Approx(std::sin(kPi / 3)).epsilon(1e-12));
    CHECK(find_check(r, "duality identity") ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("error disturbance curve endpoints and shape") {
  const CurveTable t = figure_data(CurveKind::ErrorDisturbanceRegion, 9);
  REQUIRE(t.rows.size() == 9);
  REQUIRE(t.columns.size() == 5);
  CHECK(t.rows.front()[0] == 0.0);
  CHECK(t.rows.front()[1] == 0.0);
  CHECK(t.rows.front()[2] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(t.rows.front()[3] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(t.rows.back()[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(t.rows.back()[2] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(t.rows.back()[3] == doctest::Approx(0.0).epsilon(1e-15));
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    CHECK(t.rows[i][1] >= t.rows[i - 1][1]);  // error grows with theta
    CHECK(t.rows[i][2] <= t.rows[i - 1][2]);  // disturbance shrinks
    CHECK(t.rows[i][3] >= t.rows[i][4]);      // nu region is the larger one
  }
  // The trajectory stays inside the allowed region.
  for (const auto& row : t.rows) {
    CHECK(row[2] >= row[3] - 1e-12);
  }
}

TEST_CASE("precision bound curve endpoints and shape") {
  const CurveTable t = figure_data(CurveKind::PrecisionBounds, 13);
  REQUIRE(t.rows.size() == 13);
  REQUIRE(t.columns.size() == 3);
  CHECK(t.rows.front()[0] == doctest::Approx(1e-3).epsilon(1e-12));
  CHECK(t.rows.back()[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(t.rows.back()[1] == 0.0);
  CHECK(t.rows.back()[2] > 0.0);
  const double c = t.rows.front()[0];
  const double c23 = std::cbrt(c * c);
  const double direct =
      (1 - c * c) / std::pow(1 + c23 + c23 * c23, 1.5);
  CHECK(t.rows.front()[1] == doctest::Approx(direct).epsilon(1e-12));
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    CHECK(t.rows[i][0] > t.rows[i - 1][0]);
    CHECK(t.rows[i][1] <= t.rows[i - 1][1]);
    CHECK(t.rows[i][2] <= t.rows[i - 1][2]);
  }
}

TEST_CASE("figure data validates the grid") {
  CHECK_THROWS_AS(figure_data(CurveKind::PrecisionBounds, 1),
                  std::invalid_argument);
  CHECK(figure_data(CurveKind::ErrorDisturbanceRegion, 2).rows.size() == 2);
}

TEST_CASE("standard gallery passes end to end") {
  const auto reports = standard_gallery();
  CHECK(reports.size() == 7);
  for (const GalleryReport& r : reports) {
    INFO("report ", r.name);
    CHECK(r.pass);
  }
}

}  // namespace
}  // namespace uncert
