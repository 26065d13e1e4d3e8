#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "uncert/linalg.hpp"

using namespace uncert;
using namespace uncert_test;

// ----- kron --------------------------------------------------------------

TEST_CASE("kron identity and rank-1 placement") {
  const Matrix i2 = Matrix::Identity(2, 2);
  CHECK(frob_dist(kron(i2, i2), Matrix::Identity(4, 4)) == doctest::Approx(0.0));

  Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  Matrix expect = Matrix::Zero(4, 4);
  expect(1, 1) = 1.0;  // composite index 0*2+1
  CHECK(frob_dist(kron(p0, p1), expect) == doctest::Approx(0.0));
}

TEST_CASE("kron trace multiplicativity on random pairs") {
  Rng rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    const Matrix a = gaussian_matrix(2, 2, rng);
    const Matrix b = gaussian_matrix(2, 2, rng);
    const Complex lhs = kron(a, b).trace();
    const Complex rhs = a.trace() * b.trace();
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("kron index convention") {
  Rng rng(12);
  const Matrix a = gaussian_matrix(2, 3, rng);
  const Matrix b = gaussian_matrix(4, 2, rng);
  const Matrix k = kron(a, b);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j)
      for (int kk = 0; kk < 4; ++kk)
        for (int l = 0; l < 2; ++l)
          CHECK(std::abs(k(i * 4 + kk, j * 2 + l) - a(i, j) * b(kk, l)) < 1e-15);
}

// ----- partial trace ------------------------------------------------------

TEST_CASE("partial trace of I4 over the first factor") {
  const Matrix i4 = Matrix::Identity(4, 4);
  const Matrix got = partial_trace(i4, {2, 2}, {1});
  CHECK(frob_dist(got, 2.0 * Matrix::Identity(2, 2)) < 1e-14);
}

TEST_CASE("partial trace of the maximally entangled projector") {
  const Vector omega = identity_vec(2);
  const Matrix proj = omega * omega.adjoint();
  const Matrix keep_second = partial_trace(proj, {2, 2}, {1});
  CHECK(frob_dist(keep_second, Matrix::Identity(2, 2)) < 1e-14);
  const Matrix keep_first = partial_trace(proj, {2, 2}, {0});
  CHECK(frob_dist(keep_first, Matrix::Identity(2, 2)) < 1e-14);
}

TEST_CASE("partial trace preserves trace and positivity") {
  Rng rng(13);
  for (int rep = 0; rep < 10; ++rep) {
    const Matrix g = gaussian_matrix(4, 4, rng);
    const Matrix psd = g * g.adjoint();
    const Matrix out = partial_trace(psd, {2, 2}, {0});
    CHECK(std::abs(out.trace() - psd.trace()) < 1e-12 * std::abs(psd.trace()));
    CHECK(min_eig_hermitian(out) > -1e-12);
  }
}

TEST_CASE("partial trace over middle factor of three") {
  Rng rng(14);
  const Matrix a = random_hermitian(2, rng);
  const Matrix b = random_hermitian(3, rng);
  const Matrix c = random_hermitian(2, rng);
  const Matrix full = kron(kron(a, b), c);
  const Matrix got = partial_trace(full, {2, 3, 2}, {0, 2});
  CHECK(frob_dist(got, b.trace() * kron(a, c)) < 1e-12);
}

TEST_CASE("partial trace rejects bad dims") {
  CHECK_THROWS_AS(partial_trace(Matrix::Identity(4, 4), {2, 3}, {0}),
                  std::invalid_argument);
}

// ----- partial transpose --------------------------------------------------

TEST_CASE("partial transpose basics") {
  Rng rng(15);
  const Matrix m = gaussian_matrix(4, 4, rng);

  // Single factor: ordinary transpose.
  CHECK(frob_dist(partial_transpose(m, {4}, {0}), m.transpose()) == doctest::Approx(0.0));

  // Involution.
  const Matrix twice = partial_transpose(partial_transpose(m, {2, 2}, {1}), {2, 2}, {1});
  CHECK(frob_dist(twice, m) < 1e-14);

  // Factorized case.
  const Matrix a = gaussian_matrix(2, 2, rng);
  const Matrix b = gaussian_matrix(2, 2, rng);
  CHECK(frob_dist(partial_transpose(kron(a, b), {2, 2}, {1}),
                  kron(a, b.transpose())) < 1e-14);
}

TEST_CASE("partial transpose of the maximally entangled projector") {
  const Vector omega = identity_vec(2);
  const Matrix proj = omega * omega.adjoint();
  const Matrix pt = partial_transpose(proj, {2, 2}, {1});
  const EigResult e = hermitian_eig(pt);
  CHECK(e.values(0) == doctest::Approx(-1.0).epsilon(1e-12));
  for (int k = 1; k < 4; ++k)
    CHECK(e.values(k) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("partial transpose preserves Hermiticity and full-transpose spectrum") {
  Rng rng(16);
  const Matrix h = random_hermitian(4, rng);
  const Matrix pt = partial_transpose(h, {2, 2}, {0});
  CHECK(is_hermitian(pt, 1e-14));
  const Matrix ft = partial_transpose(h, {2, 2}, {0, 1});
  const EigResult e0 = hermitian_eig(h);
  const EigResult e1 = hermitian_eig(ft);
  CHECK((e0.values - e1.values).cwiseAbs().maxCoeff() < 1e-10);
}

// ----- hermitian_eig --------------------------------------------------------

TEST_CASE("eig of diagonal and sigma_x") {
  Matrix d(2, 2);
  d << 1, 0, 0, 2;
  const EigResult ed = hermitian_eig(d);
  CHECK(ed.values(0) == doctest::Approx(1.0));
  CHECK(ed.values(1) == doctest::Approx(2.0));
  CHECK(frob_dist(ed.vectors, Matrix::Identity(2, 2)) < 1e-14);

  const EigResult ex = hermitian_eig(pauli_x());
  CHECK(ex.values(0) == doctest::Approx(-1.0));
  CHECK(ex.values(1) == doctest::Approx(1.0));
}

TEST_CASE("eig reconstruction on a random Hermitian 6x6") {
  Rng rng(17);
  const Matrix h = random_hermitian(6, rng);
  const EigResult e = hermitian_eig(h);
  const Matrix rec =
      e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
  CHECK(schatten_norm(rec - h, Schatten::Operator) < 1e-10);
}

TEST_CASE("eig bounds over 100 random matrices up to dim 16") {
  Rng rng(18);
  for (int rep = 0; rep < 100; ++rep) {
    const int d = 1 + static_cast<int>(rng.uniform() * 16.0);
    const Matrix h = random_hermitian(d, rng);
    const EigResult e = hermitian_eig(h);
    for (int k = 0; k + 1 < d; ++k) CHECK(e.values(k) <= e.values(k + 1));
    CHECK(max_abs(e.vectors.adjoint() * e.vectors - Matrix::Identity(d, d)) <= 1e-12);
    const Matrix rec =
        e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
    CHECK(schatten_norm(rec - h, Schatten::Operator) <= 1e-10);
  }
}

TEST_CASE("eig rejects non-Hermitian input") {
  Matrix m(2, 2);
  m << 0, 1, 0, 0;
  CHECK_THROWS_AS(hermitian_eig(m), std::invalid_argument);
}

// ----- schatten norms -------------------------------------------------------

TEST_CASE("schatten norms of simple operators") {
  const Matrix i3 = Matrix::Identity(3, 3);
  CHECK(schatten_norm(i3, Schatten::Trace) == doctest::Approx(3.0));
  CHECK(schatten_norm(i3, Schatten::Operator) == doctest::Approx(1.0));
  CHECK(schatten_norm(pauli_z(), Schatten::Trace) == doctest::Approx(2.0));
}

TEST_CASE("trace norm dominates operator norm, ties on rank 1") {
  Rng rng(19);
  const Matrix g = gaussian_matrix(4, 4, rng);
  CHECK(schatten_norm(g, Schatten::Trace) >=
        schatten_norm(g, Schatten::Operator) - 1e-12);
  const Matrix u = gaussian_matrix(4, 1, rng);
  const Matrix v = gaussian_matrix(4, 1, rng);
  // Singular values come from the Gram spectrum, so zero singulars carry
  // sqrt(machine-eps)-sized noise; compare at that scale.
  const Matrix rank1 = u * v.adjoint();
  CHECK(schatten_norm(rank1, Schatten::Trace) ==
        doctest::Approx(schatten_norm(rank1, Schatten::Operator)).epsilon(1e-7));
}

// Three-outcome projector-difference family: the two bases below differ by a
// rotation with overlap 2/3 per letter, and the signed sums peak at one flip.
TEST_CASE("sign-pattern sweep over projector differences") {
  std::vector<Vector> b(3), th(3);
  for (int k = 0; k < 3; ++k) b[k] = Vector::Zero(3);
  b[0](0) = 1.0;
  b[1](1) = 1.0;
  b[2](2) = 1.0;
  th[0] = Vector::Zero(3);
  th[0] << 2.0 / 3, 2.0 / 3, -1.0 / 3;
  th[1] = Vector::Zero(3);
  th[1] << -1.0 / 3, 2.0 / 3, 2.0 / 3;
  th[2] = Vector::Zero(3);
  th[2] << 2.0 / 3, -1.0 / 3, 2.0 / 3;

  std::vector<Matrix> t(3);
  for (int k = 0; k < 3; ++k)
    t[k] = b[k] * b[k].adjoint() - th[k] * th[k].adjoint();

  double best = 0.0;
  for (int bits = 0; bits < 8; ++bits) {
    Matrix sum = Matrix::Zero(3, 3);
    for (int k = 0; k < 3; ++k)
      sum += ((bits >> k) & 1 ? -1.0 : 1.0) * t[k];
    best = std::max(best, schatten_norm(sum, Schatten::Operator));
  }
  // Largest signed sum is twice a single difference; the half below is the
  // bias a single input state can expose.
  CHECK(0.5 * best == doctest::Approx(std::sqrt(5.0) / 3.0).epsilon(1e-12));
}

// ----- random utilities -----------------------------------------------------

TEST_CASE("haar isometry is an isometry and deterministic") {
  Rng rng_a(42), rng_b(42);
  const Matrix v1 = haar_isometry(6, 2, rng_a);
  const Matrix v2 = haar_isometry(6, 2, rng_b);
  CHECK(max_abs(v1 - v2) == 0.0);
  CHECK(max_abs(v1.adjoint() * v1 - Matrix::Identity(2, 2)) < 1e-12);

  Rng rng_c(7);
  const Matrix u = haar_unitary(4, rng_c);
  CHECK(max_abs(u.adjoint() * u - Matrix::Identity(4, 4)) < 1e-12);
  CHECK(max_abs(u * u.adjoint() - Matrix::Identity(4, 4)) < 1e-12);
}

TEST_CASE("box-muller stream has sane moments") {
  Rng rng(123);
  double sum = 0.0, sum2 = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    sum += x;
    sum2 += x * x;
  }
  CHECK(std::abs(sum / n) < 0.03);
  CHECK(std::abs(sum2 / n - 1.0) < 0.05);
}

TEST_CASE("psd sqrt and pinv sqrt") {
  Rng rng(20);
  const Matrix g = gaussian_matrix(4, 4, rng);
  const Matrix psd = g * g.adjoint();
  const Matrix r = psd_sqrt(psd);
  CHECK(frob_dist(r * r, psd) < 1e-9);
  const Matrix w = psd_pinv_sqrt(psd);
  CHECK(frob_dist(w * psd * w, Matrix::Identity(4, 4)) < 1e-8);

  // Rank-deficient case: pinv sqrt annihilates the kernel.
  const Matrix u = gaussian_matrix(4, 2, rng);
  const Matrix lowrank = u * u.adjoint();
  const Matrix wl = psd_pinv_sqrt(lowrank);
  const Matrix proj = wl * lowrank * wl;  // projector onto the range
  CHECK(frob_dist(proj * proj, proj) < 1e-8);
  CHECK(std::abs(proj.trace().real() - 2.0) < 1e-8);
}
