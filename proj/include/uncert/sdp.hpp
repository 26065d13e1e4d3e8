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

#ifndef UNCERT_SDP_HPP_
#define UNCERT_SDP_HPP_

#include <vector>

#include "uncert/linalg.hpp"

namespace uncert {

// Dense standard-form conic solver over a product of PSD and nonnegative
// orthant blocks:
//
//   minimize    sum_b <C_b, X_b>
//   subject to  sum_b <A_{i,b}, X_b> = b_i     (i = 1..m)
//               X_b in cone(b)
//
// with the dual  maximize b^T y  s.t.  C_b - sum_i y_i A_{i,b} in cone(b)*.

enum class BlockKind { Psd, Orthant };
enum class SdpStatus { Optimal, MaxIter, Infeasible };

struct SdpBlock {
  BlockKind kind;
  int size;
};

// One equality row. coeff[b] is the coefficient for block b: an n x n
// symmetric matrix for PSD blocks, an n x 1 column for orthant blocks. An
// empty (0 x 0) entry means the row does not touch that block.
struct LinearRow {
  std::vector<RealMatrix> coeff;
  double rhs = 0.0;
};

struct SdpProblem {
  std::vector<SdpBlock> blocks;
  std::vector<RealMatrix> objective;  // per block; empty means zero
  std::vector<LinearRow> equalities;
};

struct SdpSolution {
  double primal_value = 0.0;
  double dual_value = 0.0;
  double gap = 0.0;  // |primal - dual|
  SdpStatus status = SdpStatus::MaxIter;
  std::vector<RealMatrix> primal_blocks;
  RealVector dual_multipliers;
  int iterations = 0;
};

// [[Re, -Im], [Im, Re]] block matrix of a Hermitian input; PSD iff the input
// is, with every eigenvalue doubled in multiplicity. Traces double, so
// objective functionals built from this carry a compensating 1/2.
RealMatrix embed_hermitian(const Matrix& h);

// Primal-dual path following (HKM direction, Mehrotra predictor-corrector,
// fraction-to-boundary 0.98, identity start scaled by 1 + max |rhs|). Stops
// when the relative gap and both residuals fall below `tolerance`, after 200
// iterations (status MaxIter), or when the iterates diverge (Infeasible).
// Deterministic: no randomized pivoting, fixed initialization.
SdpSolution solve(const SdpProblem& p, double tolerance = tol().sdp);

}  // namespace uncert

#endif  // UNCERT_SDP_HPP_
