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

#ifndef UNCERT_PROGRAM_HPP_
#define UNCERT_PROGRAM_HPP_

#include <functional>
#include <vector>

#include "uncert/sdp.hpp"

namespace uncert {

// Modeling layer over the real solver: complex Hermitian PSD variables and
// nonnegative scalar vectors, with Hermitian-matrix-valued affine
// expressions. Each Hermitian variable is carried as its doubled real
// embedding; solving the embedded problem without extra structure
// constraints is exact because the feasible set and objective are invariant
// under the embedding's symplectic conjugation, so an optimal embedded point
// averages to an embedded-Hermitian one with the same value.

struct CxVar {
  int block = -1;  // position in the underlying problem
  int slot = -1;   // position within its kind in the solution
  BlockKind kind = BlockKind::Psd;
  int dim = 0;  // complex dimension (Psd) or vector length (Orthant)
};

class CxExpr {
 public:
  // Maps must be real-linear on Hermitian matrices and Hermitian-valued;
  // violations are detected when the expression is turned into rows.
  using PsdMap = std::function<Matrix(const Matrix&)>;
  using VecMap = std::function<Matrix(const RealVector&)>;

  explicit CxExpr(int dim);
  int dim() const { return dim_; }
  CxExpr& add_constant(const Matrix& m);
  CxExpr& add_term(const CxVar& v, PsdMap map);
  // Distinct name: Eigen's real-to-complex conversion would otherwise make
  // every lambda viable for both signatures.
  CxExpr& add_vec_term(const CxVar& v, VecMap map);

 private:
  friend class CxProgram;
  struct PsdTerm {
    CxVar var;
    PsdMap map;
  };
  struct VecTerm {
    CxVar var;
    VecMap map;
  };
  int dim_;
  Matrix constant_;
  std::vector<PsdTerm> psd_terms_;
  std::vector<VecTerm> vec_terms_;
};

struct CxSolution {
  double value = 0.0;       // objective at the primal iterate, offset included
  double dual_value = 0.0;  // matching bound from the solver's dual
  double gap = 0.0;
  SdpStatus status = SdpStatus::MaxIter;
  int iterations = 0;
  std::vector<Matrix> hermitian;   // by CxVar::slot
  std::vector<RealVector> scalars;  // by CxVar::slot
};

class CxProgram {
 public:
  CxVar add_hermitian(int dim);
  CxVar add_scalars(int n);

  // expr == rhs, entrywise as Hermitian matrices.
  void require_eq(const CxExpr& expr, const Matrix& rhs);
  // expr >= 0 in the PSD order (internally expr == slack, slack >= 0).
  void require_psd(const CxExpr& expr);

  // The objective is a 1x1 expression; exactly one of these must be called.
  void minimize(const CxExpr& scalar);
  void maximize(const CxExpr& scalar);

  CxSolution solve(double tolerance = tol().sdp) const;

 private:
  SdpProblem problem_;
  std::vector<CxVar> vars_;
  CxExpr objective_{1};
  bool maximize_ = false;
  bool has_objective_ = false;
};

}  // namespace uncert

#endif  // UNCERT_PROGRAM_HPP_
