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

#include "uncert/measures.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "uncert/channels.hpp"

using namespace uncert;
using namespace uncert_test;

namespace {

const double kPi = std::acos(-1.0);

// The pairing with the computational basis matters: element k of this basis
// is compared against |k> when forming difference operators.
Basis tilted_qutrit_basis() {
  Vector a(3), b(3), c(3);
  a << 2.0 / 3, 2.0 / 3, -1.0 / 3;
  b << -1.0 / 3, 2.0 / 3, 2.0 / 3;
  c << 2.0 / 3, -1.0 / 3, 2.0 / 3;
  return make_basis({a, b, c}, "tilted");
}

Device constant_channel(const Matrix& sigma) {
  const int d = static_cast<int>(sigma.rows());
  return make_choi(d, d, kron(sigma, Matrix::Identity(d, d)));
}

Device preparation_family(const std::vector<Matrix>& states) {
  Device f;
  f.in = {static_cast<int>(states.size()), 1};
  f.out = {1, static_cast<int>(states[0].rows())};
  f.blocks = states;
  validate_device(f);
  return f;
}

}  // namespace

TEST_CASE("diamond distance vanishes on identical devices") {
  const Device e = mz_apparatus(kPi / 5);
  const MeasureResult r = diamond_distance(e, e);
  CHECK(std::abs(r.value) <= 1e-7);
  CHECK(r.gap <= tol().gap_agreement);
  CHECK(r.formulation == "diamond");
}

TEST_CASE("diamond distance is symmetric and satisfies the triangle bound") {
  const Device a = random_instrument(2, 1, 101);
  const Device b = random_instrument(2, 1, 202);
  const Device c = random_instrument(2, 1, 303);
  const double ab = diamond_distance(a, b).value;
  const double ba = diamond_distance(b, a).value;
  const double ac = diamond_distance(a, c).value;
  const double cb = diamond_distance(c, b).value;
  CHECK(std::abs(ab - ba) <= 1e-6);
  CHECK(ab <= ac + cb + 1e-6);
}

TEST_CASE("diamond distance is monotone under composition") {
  const Device e1 = random_instrument(2, 1, 7);
  const Device e2 = random_instrument(2, 1, 8);
  const Device f = random_instrument(2, 1, 9);
  const double base = diamond_distance(e1, e2).value;
  CHECK(diamond_distance(compose(f, e1), compose(f, e2)).value <= base + 1e-6);
  CHECK(diamond_distance(compose(e1, f), compose(e2, f)).value <= base + 1e-6);
}

TEST_CASE("qubit conjugate measurements: solver agrees with grid search") {
  const ConjugateBases cb = conjugate_basis(2);
  std::vector<Matrix> povm_x, povm_z;
  for (int k = 0; k < 2; ++k) {
    povm_x.push_back(basis_projector(cb.phi, k));
    povm_z.push_back(basis_projector(cb.theta, k));
  }
  const Device mx = measurement_from_povm(povm_x);
  const Device mzd = measurement_from_povm(povm_z);
  const double sdp = diamond_distance(mx, mzd).value;
  const double grid = measurement_diamond_oracle(povm_x, povm_z);
  CHECK(std::abs(sdp - grid) <= 1e-3);
}

TEST_CASE("tilted qutrit pair: entangled inputs strictly help") {
  const Basis tilted = tilted_qutrit_basis();
  std::vector<Vector> comp;
  for (int k = 0; k < 3; ++k)
    comp.push_back(Vector::Unit(3, k));
  const Basis computational = make_basis(comp, "computational");
  const Device m1 = ideal_measurement(computational, false);
  const Device m2 = ideal_measurement(tilted, false);

  const double separable = unentangled_distinguishability(m1, m2);
  CHECK(separable == doctest::Approx(std::sqrt(5.0) / 3).epsilon(1e-9));

  const MeasureResult full = diamond_distance(m1, m2);
  CHECK(full.value >= std::sqrt(3.0) / 2 - 1e-7);
  CHECK(full.value > separable + 0.1);
  CHECK(full.gap <= tol().gap_agreement);
}

TEST_CASE("unentangled distinguishability edge cases") {
  const ConjugateBases cb = conjugate_basis(2);
  const Device mx = ideal_measurement(cb.phi, false);
  CHECK(unentangled_distinguishability(mx, mx) == doctest::Approx(0.0));
  const Device mz3 = ideal_measurement(conjugate_basis(3).theta, false);
  CHECK_THROWS_AS(unentangled_distinguishability(mx, mz3),
                  std::invalid_argument);
  const Device inst = mz_apparatus(0.3);
  CHECK_THROWS_AS(unentangled_distinguishability(inst, inst),
                  std::invalid_argument);
}

TEST_CASE("epsilon vanishes for the ideal target measurement") {
  const ConjugateBases cb2 = conjugate_basis(2);
  const MeasureResult r2 = epsilon(ideal_measurement(cb2.phi, true), cb2.phi);
  CHECK(std::abs(r2.value) <= 1e-7);
  // Complex projectors exercise the input-leg transpose convention.
  const ConjugateBases cb3 = conjugate_basis(3);
  const MeasureResult r3 = epsilon(ideal_measurement(cb3.phi, true), cb3.phi);
  CHECK(std::abs(r3.value) <= 1e-7);
  CHECK(r3.gap <= tol().gap_agreement);
}

TEST_CASE("interferometer error matches the closed form") {
  const ConjugateBases cb = conjugate_basis(2);
  for (const double theta : {0.0, kPi / 6, kPi / 4, kPi / 3, kPi / 2}) {
    const MeasureResult r = epsilon(mz_apparatus(theta), cb.phi);
    CHECK(r.value ==
          doctest::Approx(0.5 * (1 - std::cos(theta))).epsilon(1e-6));
    CHECK(r.gap <= tol().gap_agreement);
  }
}

TEST_CASE("fixed post-processing is never better than optimized") {
  const ConjugateBases cb = conjugate_basis(2);
  for (const std::uint64_t seed : {21u, 22u}) {
    const Device e = random_instrument(2, 2, seed);
    const double frozen =
        diamond_distance(ideal_measurement(cb.phi, false),
                         marginalize(e, WireKind::Quantum))
            .value;
    const double optimized = epsilon(e, cb.phi).value;
    CHECK(optimized <= frozen + 1e-6);
  }
}

TEST_CASE("nu vanishes when the device is the identity") {
  const ConjugateBases cb3 = conjugate_basis(3);
  // Fourier basis keeps every transpose honest: a misplaced conjugation
  // cannot reach zero here even though it would on a real basis.
  const MeasureResult channel = nu(identity_channel(3), cb3.phi);
  CHECK(std::abs(channel.value) <= 1e-7);
  const MeasureResult inst =
      nu(ideal_measurement(cb3.phi, true), cb3.phi);
  CHECK(std::abs(inst.value) <= 1e-7);
}

TEST_CASE("nu of the conjugate measurement is maximal") {
  const ConjugateBases cb = conjugate_basis(2);
  const Device qx = ideal_measurement(cb.phi, true);
  const MeasureResult r = nu(qx, cb.theta);
  CHECK(r.value == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(r.gap <= tol().gap_agreement);
}

TEST_CASE("interferometer disturbance matches the closed form") {
  const ConjugateBases cb = conjugate_basis(2);
  for (const double theta : {kPi / 6, kPi / 3}) {
    const double expected = 0.5 * (1 - std::sin(theta));
    const Device e = mz_apparatus(theta);
    CHECK(nu(e, cb.theta).value == doctest::Approx(expected).epsilon(1e-6));
    CHECK(eta(e, cb.theta).value == doctest::Approx(expected).epsilon(1e-6));
    CHECK(eta_hat(e, cb.theta).value ==
          doctest::Approx(expected).epsilon(1e-6));
  }
}

TEST_CASE("eta vanishes when the device is the identity") {
  const ConjugateBases cb3 = conjugate_basis(3);
  CHECK(std::abs(eta(identity_channel(3), cb3.phi).value) <= 1e-7);
  CHECK(std::abs(eta_hat(identity_channel(3), cb3.phi).value) <= 1e-7);
  CHECK(std::abs(eta_tilde(identity_channel(3), cb3.phi).value) <= 1e-7);
}

TEST_CASE("constant channels have maximal preservation demerit") {
  Rng rng(5);
  for (const int d : {2, 3}) {
    const Device e = constant_channel(random_density(d, rng));
    const Basis z = conjugate_basis(d).theta;
    const double expected = (d - 1.0) / d;
    CHECK(eta_hat(e, z).value == doctest::Approx(expected).epsilon(1e-6));
    CHECK(eta_tilde(e, z).value == doctest::Approx(expected).epsilon(1e-6));
  }
}

TEST_CASE("hat and tilde demerits agree") {
  const ConjugateBases cb = conjugate_basis(2);
  for (const Device& e :
       {mz_apparatus(kPi / 7), random_instrument(2, 2, 33)}) {
    const double hat = eta_hat(e, cb.theta).value;
    const double tilde = eta_tilde(e, cb.theta).value;
    CHECK(std::abs(hat - tilde) <= 1e-6);
  }
}

TEST_CASE("measure hierarchy and ranges on random instruments") {
  const ConjugateBases cb = conjugate_basis(2);
  for (const std::uint64_t seed : {11u, 12u}) {
    const Device e = random_instrument(2, 2, seed);
    const MeasureResult vnu = nu(e, cb.theta);
    const MeasureResult veta = eta(e, cb.theta);
    const MeasureResult vhat = eta_hat(e, cb.theta);
    for (const MeasureResult* r : {&vnu, &veta, &vhat}) {
      CHECK(r->value >= -1e-7);
      CHECK(r->value <= 1.0 + 1e-7);
      CHECK(r->gap <= tol().gap_agreement);
    }
    CHECK(vhat.value <= 0.5 + 1e-7);
  }
}

TEST_CASE("complementarity of identical and conjugate bases") {
  const ConjugateBases cb2 = conjugate_basis(2);
  const Complementarity same = complementarity(cb2.theta, cb2.theta);
  CHECK(std::abs(same.c_m.value) <= 1e-7);
  CHECK(std::abs(same.c_p.value) <= 1e-7);
  CHECK(std::abs(same.c_p_hat.value) <= 1e-7);

  for (const int d : {2, 3}) {
    const ConjugateBases cb = conjugate_basis(d);
    const Complementarity conj = complementarity(cb.phi, cb.theta);
    const double expected = (d - 1.0) / d;
    CHECK(conj.c_m.value == doctest::Approx(expected).epsilon(1e-6));
    CHECK(conj.c_p.value == doctest::Approx(expected).epsilon(1e-6));
    CHECK(conj.c_p_hat.value == doctest::Approx(expected).epsilon(1e-6));
  }
}

TEST_CASE("measurement complementarity equals the post-processed error") {
  const ConjugateBases cb = conjugate_basis(2);
  const Complementarity c = complementarity(cb.phi, cb.theta);
  const double eps =
      epsilon(ideal_measurement(cb.phi, true), cb.theta).value;
  CHECK(std::abs(c.c_m.value - eps) <= 1e-6);
}

TEST_CASE("constant radius of state families") {
  const ConjugateBases cb = conjugate_basis(2);
  const Matrix p0 = basis_projector(cb.theta, 0);
  const Matrix p1 = basis_projector(cb.theta, 1);

  CHECK(std::abs(constant_radius(preparation_family({p0, p0})).value) <= 1e-7);

  const MeasureResult pair = constant_radius(preparation_family({p0, p1}));
  CHECK(pair.value == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(std::abs(pair.value - qubit_radius_oracle({p0, p1})) <= 1e-3);

  // Symmetric trine in the Bloch equator.
  std::vector<Matrix> trine;
  for (int k = 0; k < 3; ++k) {
    const double a = 2 * kPi * k / 3;
    trine.push_back(0.5 * (Matrix::Identity(2, 2) +
                           std::cos(a) * pauli_x() + std::sin(a) * pauli_z()));
  }
  const MeasureResult tr = constant_radius(preparation_family(trine));
  CHECK(std::abs(tr.value - qubit_radius_oracle(trine)) <= 1e-3);
  CHECK(tr.value <= 0.5 + 1e-7);

  Rng rng(77);
  std::vector<Matrix> cloud;
  for (int k = 0; k < 4; ++k) cloud.push_back(random_density(2, rng));
  const MeasureResult rc = constant_radius(preparation_family(cloud));
  CHECK(std::abs(rc.value - qubit_radius_oracle(cloud)) <= 1e-3);
}

TEST_CASE("best measurement error through identity and constant channels") {
  for (const int d : {2, 3}) {
    const ConjugateBases cb = conjugate_basis(d);
    CHECK(std::abs(best_measurement_error(identity_channel(d), cb.phi).value) <=
          1e-7);
    Rng rng(13);
    const Device constant = constant_channel(random_density(d, rng));
    CHECK(best_measurement_error(constant, cb.phi).value ==
          doctest::Approx((d - 1.0) / d).epsilon(1e-6));
  }
}

TEST_CASE("best measurement error sits below the fixed-measurement error") {
  const ConjugateBases cb = conjugate_basis(2);
  const Device e = random_instrument(2, 1, 55);
  // Measuring the channel output in the target basis is one admissible
  // strategy, so the optimized value can only be smaller.
  std::vector<Matrix> povm;
  for (int k = 0; k < 2; ++k) povm.push_back(basis_projector(cb.phi, k));
  const Device fixed = compose(e, measurement_from_povm(povm));
  const double eps = epsilon(fixed, cb.phi).value;
  const double best = best_measurement_error(e, cb.phi).value;
  CHECK(best <= eps + 1e-6);
}

TEST_CASE("optimizers carry the certificate shapes") {
  const ConjugateBases cb = conjugate_basis(2);
  const Device e = mz_apparatus(kPi / 5);
  const MeasureResult re = epsilon(e, cb.phi);
  REQUIRE(re.optimizer.size() == 1);
  CHECK(re.optimizer[0].rows() == 2);
  CHECK(re.optimizer[0].cols() == 2);
  for (int y = 0; y < 2; ++y) {
    double col = 0;
    for (int i = 0; i < 2; ++i) col += re.optimizer[0](i, y).real();
    CHECK(col == doctest::Approx(1.0).epsilon(1e-6));
  }

  const MeasureResult rn = nu(e, cb.theta);
  REQUIRE(rn.optimizer.size() == 2);
  for (const Matrix& r : rn.optimizer) {
    CHECK(r.rows() == 4);
    CHECK(max_abs(partial_trace(r, {2, 2}, {1}) - Matrix::Identity(2, 2)) <=
          1e-6);
  }

  const MeasureResult rb =
      best_measurement_error(random_instrument(2, 1, 91), cb.phi);
  REQUIRE(rb.optimizer.size() == 2);
  Matrix closure = Matrix::Zero(2, 2);
  for (const Matrix& g : rb.optimizer) {
    CHECK(min_eig_hermitian(g) >= -1e-6);
    closure += g;
  }
  CHECK(max_abs(closure - Matrix::Identity(2, 2)) <= 1e-6);
}
