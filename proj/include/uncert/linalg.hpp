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

#ifndef UNCERT_LINALG_HPP_
#define UNCERT_LINALG_HPP_

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace uncert {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Central numeric tolerances. Every module reads its thresholds from here so
// that test expectations and library behavior cannot drift apart.
struct Tolerances {
  double hermiticity = 1e-12;        // entrywise |M - M^dag| for flagged instances
  double hermiticity_input = 1e-10;  // acceptance threshold for eig input
  double psd = 1e-10;                // allowed negative-eigenvalue drift
  double normalization = 1e-10;      // trace preservation / unit trace
  double gram = 1e-12;               // basis orthonormality
  double jacobi_offdiag = 1e-14;     // eigensolver sweep convergence
  double eig_reconstruction = 1e-10;
  double eig_orthonormality = 1e-12;
  double choi_clip = 1e-10;          // clipping band for Kraus extraction
  double isometry = 1e-10;           // V^dag V = I residual
  double sdp = 1e-8;                 // default interior-point tolerance
  double gap_agreement = 1e-6;       // min-form vs max-form agreement
  double measure_range = 1e-7;       // slack on [0,1] range checks
  double decompose_residual = 1e-8;  // joint-measurement recomposition
  double io = 1e-8;                  // document-load invariant checks
};

const Tolerances& tol();

struct EigResult {
  RealVector values;  // ascending
  Matrix vectors;     // columns, orthonormal
};

// Kronecker product, row-major index convention:
// (a (x) b)[(i*rb + k), (j*cb + l)] = a(i,j) * b(k,l).
Matrix kron(const Matrix& a, const Matrix& b);

// Trace out every factor not listed in `keep` (indices into `dims`, ascending
// order of the kept factors is preserved). dims lists factor dimensions in
// row-major composite order; their product must equal the matrix dimension.
Matrix partial_trace(const Matrix& m, const std::vector<int>& dims,
                     const std::vector<int>& keep);

// Transpose the factors listed in `which`, leave the rest untouched.
Matrix partial_transpose(const Matrix& m, const std::vector<int>& dims,
                         const std::vector<int>& which);

// Cyclic Jacobi for Hermitian matrices: deterministic row-major sweep order,
// convergence when the off-diagonal Frobenius mass falls below
// tol().jacobi_offdiag (relative to the matrix scale). Eigenvalues ascending.
// Throws std::invalid_argument if m is not Hermitian within
// tol().hermiticity_input.
EigResult hermitian_eig(const Matrix& m);

enum class Schatten { Trace, Operator };

// Sum (trace norm) or maximum (operator norm) of the singular values.
double schatten_norm(const Matrix& m, Schatten kind);

// Small helpers used throughout.
bool is_hermitian(const Matrix& m, double tolerance);
Complex trace_product(const Matrix& a, const Matrix& b);  // Tr[a b]
double min_eig_hermitian(const Matrix& m);
Matrix psd_sqrt(const Matrix& m);
// Pseudo-inverse square root: eigenvalues below rank_tol * lambda_max are
// treated as exact zeros.
Matrix psd_pinv_sqrt(const Matrix& m, double rank_tol = 1e-10);

// |Omega> = sum_k |k>|k> as a d^2 vector (vectorized identity, unnormalized).
Vector identity_vec(int d);

// Deterministic random source: mt19937_64 plus a hand-rolled Box-Muller so
// streams are reproducible independent of the standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform();  // [0, 1)
  double normal();   // standard normal
  Complex complex_normal();

 private:
  std::mt19937_64 gen_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

Matrix gaussian_matrix(int rows, int cols, Rng& rng);
// QR-orthonormalized Gaussian matrix with the R-diagonal phase fix; Haar
// distributed, deterministic in the stream state. rows >= cols.
Matrix haar_isometry(int rows, int cols, Rng& rng);
Matrix haar_unitary(int d, Rng& rng);

}  // namespace uncert

#endif  // UNCERT_LINALG_HPP_
