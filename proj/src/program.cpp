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

#include "uncert/program.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace uncert {

namespace {

constexpr double kImageHermTol = 1e-9;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Orthonormal basis of d x d Hermitian matrices: the d diagonal units, then
// for each i<j the symmetric and antisymmetric pair.
struct BasisElem {
  int i, j;
  enum { kDiag, kSym, kAnti } type;
};

std::vector<BasisElem> hermitian_basis(int d) {
  std::vector<BasisElem> out;
  out.reserve(static_cast<size_t>(d) * d);
  for (int i = 0; i < d; ++i) out.push_back({i, i, BasisElem::kDiag});
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      out.push_back({i, j, BasisElem::kSym});
      out.push_back({i, j, BasisElem::kAnti});
    }
  return out;
}

double basis_dot(const BasisElem& b, const Matrix& m) {
  switch (b.type) {
    case BasisElem::kDiag:
      return m(b.i, b.i).real();
    case BasisElem::kSym:
      return 2.0 * kInvSqrt2 * m(b.i, b.j).real();
    default:
      return 2.0 * kInvSqrt2 * m(b.i, b.j).imag();
  }
}

void basis_add(Matrix& acc, const BasisElem& b, double c) {
  switch (b.type) {
    case BasisElem::kDiag:
      acc(b.i, b.i) += c;
      return;
    case BasisElem::kSym:
      acc(b.i, b.j) += c * kInvSqrt2;
      acc(b.j, b.i) += c * kInvSqrt2;
      return;
    default:
      acc(b.i, b.j) += Complex(0.0, c * kInvSqrt2);
      acc(b.j, b.i) -= Complex(0.0, c * kInvSqrt2);
      return;
  }
}

Matrix basis_matrix(const BasisElem& b, int d) {
  Matrix m = Matrix::Zero(d, d);
  basis_add(m, b, 1.0);
  return m;
}

void check_image(const Matrix& img, int d) {
  if (img.rows() != d || img.cols() != d)
    throw std::logic_error("expression term returned the wrong shape");
  const double scale = std::max(1.0, img.cwiseAbs().maxCoeff());
  if ((img - img.adjoint()).cwiseAbs().maxCoeff() > kImageHermTol * scale)
    throw std::logic_error("expression term does not preserve Hermiticity");
}

}  // namespace

CxExpr::CxExpr(int dim) : dim_(dim), constant_(Matrix::Zero(dim, dim)) {
  if (dim < 1) throw std::invalid_argument("expression dimension must be >= 1");
}

CxExpr& CxExpr::add_constant(const Matrix& m) {
  if (m.rows() != dim_ || m.cols() != dim_)
    throw std::invalid_argument("constant shape mismatch");
  constant_ += m;
  return *this;
}

CxExpr& CxExpr::add_term(const CxVar& v, PsdMap map) {
  if (v.kind != BlockKind::Psd)
    throw std::invalid_argument("matrix map attached to a scalar variable");
  psd_terms_.push_back({v, std::move(map)});
  return *this;
}

CxExpr& CxExpr::add_vec_term(const CxVar& v, VecMap map) {
  if (v.kind != BlockKind::Orthant)
    throw std::invalid_argument("vector map attached to a matrix variable");
  vec_terms_.push_back({v, std::move(map)});
  return *this;
}

CxVar CxProgram::add_hermitian(int dim) {
  if (dim < 1) throw std::invalid_argument("variable dimension must be >= 1");
  int slot = 0;
  for (const auto& v : vars_)
    if (v.kind == BlockKind::Psd) ++slot;
  const CxVar v{static_cast<int>(problem_.blocks.size()), slot, BlockKind::Psd,
                dim};
  problem_.blocks.push_back({BlockKind::Psd, 2 * dim});
  vars_.push_back(v);
  return v;
}

CxVar CxProgram::add_scalars(int n) {
  if (n < 1) throw std::invalid_argument("variable length must be >= 1");
  int slot = 0;
  for (const auto& v : vars_)
    if (v.kind == BlockKind::Orthant) ++slot;
  const CxVar v{static_cast<int>(problem_.blocks.size()), slot,
                BlockKind::Orthant, n};
  problem_.blocks.push_back({BlockKind::Orthant, n});
  vars_.push_back(v);
  return v;
}

void CxProgram::require_eq(const CxExpr& expr, const Matrix& rhs) {
  const int d = expr.dim();
  if (rhs.rows() != d || rhs.cols() != d)
    throw std::invalid_argument("equality rhs shape mismatch");
  check_image(rhs, d);
  check_image(expr.constant_, d);
  const std::vector<BasisElem> rows_basis = hermitian_basis(d);
  const int n_rows = static_cast<int>(rows_basis.size());

  std::vector<LinearRow> rows(n_rows);
  const Matrix target = rhs - expr.constant_;
  for (int p = 0; p < n_rows; ++p) {
    rows[p].coeff.assign(problem_.blocks.size(), RealMatrix());
    rows[p].rhs = basis_dot(rows_basis[p], target);
  }

  for (const auto& term : expr.psd_terms_) {
    const int n = term.var.dim;
    const std::vector<BasisElem> var_basis = hermitian_basis(n);
    // One complex accumulator per row; images evaluated once per basis
    // element of the variable space.
    std::vector<Matrix> functionals(n_rows, Matrix::Zero(n, n));
    for (const auto& q : var_basis) {
      const Matrix img = term.map(basis_matrix(q, n));
      check_image(img, d);
      for (int p = 0; p < n_rows; ++p) {
        const double c = basis_dot(rows_basis[p], img);
        if (c != 0.0) basis_add(functionals[p], q, c);
      }
    }
    for (int p = 0; p < n_rows; ++p) {
      if (functionals[p].cwiseAbs().maxCoeff() == 0.0) continue;
      // Tr[Em(F) Em(X)] = 2 Tr[F X], hence the half.
      RealMatrix& slot = rows[p].coeff[term.var.block];
      if (slot.size() == 0)
        slot = 0.5 * embed_hermitian(functionals[p]);
      else
        slot += 0.5 * embed_hermitian(functionals[p]);
    }
  }

  for (const auto& term : expr.vec_terms_) {
    const int n = term.var.dim;
    for (int j = 0; j < n; ++j) {
      const Matrix img = term.map(RealVector::Unit(n, j));
      check_image(img, d);
      for (int p = 0; p < n_rows; ++p) {
        const double c = basis_dot(rows_basis[p], img);
        if (c == 0.0) continue;
        RealMatrix& slot = rows[p].coeff[term.var.block];
        if (slot.size() == 0) slot = RealMatrix::Zero(n, 1);
        slot(j, 0) += c;
      }
    }
  }

  for (auto& row : rows) {
    bool touched = false;
    for (const auto& c : row.coeff)
      if (c.size() != 0) touched = true;
    if (!touched) {
      if (std::abs(row.rhs) > 1e-12)
        throw std::logic_error("constant equality row is infeasible");
      continue;
    }
    problem_.equalities.push_back(std::move(row));
  }
}

void CxProgram::require_psd(const CxExpr& expr) {
  const CxVar slack = add_hermitian(expr.dim());
  CxExpr shifted = expr;
  shifted.add_term(slack, [](const Matrix& s) { return Matrix(-s); });
  require_eq(shifted, Matrix::Zero(expr.dim(), expr.dim()));
}

void CxProgram::minimize(const CxExpr& scalar) {
  if (scalar.dim() != 1)
    throw std::invalid_argument("objective must be a 1x1 expression");
  objective_ = scalar;
  maximize_ = false;
  has_objective_ = true;
}

void CxProgram::maximize(const CxExpr& scalar) {
  minimize(scalar);
  maximize_ = true;
}

CxSolution CxProgram::solve(double tolerance) const {
  if (!has_objective_) throw std::logic_error("no objective set");
  SdpProblem p = problem_;
  for (auto& row : p.equalities) row.coeff.resize(p.blocks.size());

  const double sign = maximize_ ? -1.0 : 1.0;
  p.objective.assign(p.blocks.size(), RealMatrix());
  for (const auto& term : objective_.psd_terms_) {
    const int n = term.var.dim;
    Matrix functional = Matrix::Zero(n, n);
    for (const auto& q : hermitian_basis(n)) {
      const Matrix img = term.map(basis_matrix(q, n));
      check_image(img, 1);
      basis_add(functional, q, img(0, 0).real());
    }
    RealMatrix& slot = p.objective[term.var.block];
    if (slot.size() == 0)
      slot = sign * 0.5 * embed_hermitian(functional);
    else
      slot += sign * 0.5 * embed_hermitian(functional);
  }
  for (const auto& term : objective_.vec_terms_) {
    const int n = term.var.dim;
    RealMatrix& slot = p.objective[term.var.block];
    if (slot.size() == 0) slot = RealMatrix::Zero(n, 1);
    for (int j = 0; j < n; ++j) {
      const Matrix img = term.map(RealVector::Unit(n, j));
      check_image(img, 1);
      slot(j, 0) += sign * img(0, 0).real();
    }
  }
  const double offset = objective_.constant_(0, 0).real();

  const SdpSolution s = uncert::solve(p, tolerance);
  CxSolution out;
  out.status = s.status;
  out.iterations = s.iterations;
  out.gap = s.gap;
  out.value = offset + sign * s.primal_value;
  out.dual_value = offset + sign * s.dual_value;
  for (const auto& v : vars_) {
    if (v.kind == BlockKind::Psd) {
      const RealMatrix& xb = s.primal_blocks[v.block];
      const int n = v.dim;
      Matrix h(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          h(i, j) = Complex(0.5 * (xb(i, j) + xb(n + i, n + j)),
                            0.5 * (xb(j, n + i) - xb(i, n + j)));
      out.hermitian.push_back(std::move(h));
    } else {
      out.scalars.push_back(s.primal_blocks[v.block].col(0));
    }
  }
  return out;
}

}  // namespace uncert
