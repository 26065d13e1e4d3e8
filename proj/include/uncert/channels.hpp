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

#ifndef UNCERT_CHANNELS_HPP_
#define UNCERT_CHANNELS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "uncert/linalg.hpp"

namespace uncert {

struct Basis {
  int dim = 0;
  std::vector<Vector> vectors;
  std::string label;
};

// Validates orthonormality (Gram = I to tol().gram) and moves the vectors in.
Basis make_basis(std::vector<Vector> vectors, std::string label);
Matrix basis_projector(const Basis& b, int k);

// A wire carries a classical letter and a quantum factor; either may be
// trivial (letters = 1 resp. dim = 1).
struct Wire {
  int letters = 1;
  int dim = 1;
};

// Choi-operator representation of a device with classical/quantum input and
// output wires. blocks[y * in.letters + z] lives on Bq (x) Aq (output factor
// first) and is the (y,z) classical diagonal of the full Choi operator;
// classical wires carry no coherences. The transpose convention on the input
// leg is fixed to the computational basis project-wide.
//
// The familiar special cases:
//   quantum -> quantum channel: in = {1,dA}, out = {1,dB}, one block.
//   instrument:                 out = {nY,dB}, blocks C_y.
//   measurement:                out = {nX,1}, blocks are transposed POVM
//                               elements.
//   preparation:                in = {nZ,1}, block z is the prepared state.
struct Device {
  Wire in, out;
  std::vector<Matrix> blocks;

  int block_dim() const { return out.dim * in.dim; }
  const Matrix& block(int y, int z) const { return blocks[y * in.letters + z]; }
  Matrix& block(int y, int z) { return blocks[y * in.letters + z]; }
};

// Spec-level aliases; both are Devices with the shapes noted above.
using ChoiOperator = Device;
using Instrument = Device;

// Invariant check: every block PSD down to -tol().psd, and for each input
// letter the output-summed partial trace over Bq equals I_{Aq} to
// tol().normalization. Throws std::invalid_argument on violation.
void validate_device(const Device& e);

Device make_choi(int dim_in, int dim_out, Matrix m);
Device make_instrument(int dim_in, int dim_out, std::vector<Matrix> blocks);
// Measurement device from POVM elements (stores their transposes as blocks).
Device measurement_from_povm(const std::vector<Matrix>& povm);
Device identity_channel(int d);

struct ConjugateBases {
  Basis theta;  // computational ("Z")
  Basis phi;    // Fourier conjugate ("X"), phi_x = d^{-1/2} sum_z w^{xz} theta_z
};
ConjugateBases conjugate_basis(int d);

Device ideal_measurement(const Basis& b, bool as_instrument);
Device ideal_preparation(const Basis& b);
Device pinching(const Basis& b);

// Schroedinger composition, first then second; classical wires are matched
// letter by letter.
Device compose(const Device& first, const Device& second);

enum class WireKind { Quantum, Classical };
// Discard one output wire: classical drop sums blocks, quantum drop partial
// traces them.
Device marginalize(const Device& e, WireKind drop);

// Schroedinger action on input letter `z` and state rho: one (subnormalized)
// output block per output letter.
std::vector<Matrix> apply_schrodinger(const Device& e, int z, const Matrix& rho);

struct Isometry {
  Matrix matrix;  // (dim_out * dim_env) x dim_in, factors ordered (out, env)
  int dim_out = 0;
  int dim_env = 0;
};

struct StinespringResult {
  Isometry isometry;
  Device complement;  // channel into the environment
};

// Canonical dilation from the Choi eigendecomposition (descending eigenvalue
// order; |eigenvalue| <= tol().choi_clip treated as zero, more negative is an
// error). Quantum -> quantum devices only.
StinespringResult stinespring(const Device& e);

// Channel A -> OUT of the isometry v : A -> OUT (x) ENV (env traced out).
Device channel_from_isometry(const Matrix& v, int d_out, int d_env);

// Two-outcome qubit apparatus interpolating between an ideal conjugate-basis
// measurement (theta = 0) and no measurement at all (theta = pi/2).
Device mz_apparatus(double theta);

struct JointDecomposition {
  Device apparatus;                 // instrument over X with quantum output
  std::vector<Device> conditional;  // per x, a measurement over Z
};

// Split a joint (X x Z)-outcome measurement (outcome index x * n_z + z) into
// an X apparatus followed by measurements conditioned on x. Recomposition is
// checked against tol().decompose_residual and reported in the error if it
// fails.
JointDecomposition decompose_joint(const Device& e, int n_x, int n_z);

Device random_instrument(int d, int n_outcomes, std::uint64_t seed);

}  // namespace uncert

#endif  // UNCERT_CHANNELS_HPP_
