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

#include "uncert/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <Eigen/Cholesky>

namespace uncert {

RealMatrix embed_hermitian(const Matrix& h) {
  if (!is_hermitian(h, tol().hermiticity_input))
    throw std::invalid_argument("embed_hermitian: matrix is not Hermitian");
  const Eigen::Index n = h.rows();
  RealMatrix out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = h.real();
  out.bottomRightCorner(n, n) = h.real();
  out.topRightCorner(n, n) = -h.imag();
  out.bottomLeftCorner(n, n) = h.imag();
  return 0.5 * (out + out.transpose());  // kill Hermiticity roundoff
}

namespace {

constexpr int kMaxIterations = 200;
constexpr double kStepFraction = 0.98;

using Blocks = std::vector<RealMatrix>;

// Tr[A B] for general square A, B of equal size.
double inner_tr(const RealMatrix& a, const RealMatrix& b) {
  return (a.transpose().cwiseProduct(b)).sum();
}

// <A, V> where A is a row coefficient and V a cone element (orthant blocks
// are column vectors).
double pair_row(BlockKind kind, const RealMatrix& a, const RealMatrix& v) {
  if (kind == BlockKind::Orthant) return a.col(0).dot(v.col(0));
  return inner_tr(a, v);
}

// <X, S> for two same-shape cone elements.
double cone_inner(BlockKind kind, const RealMatrix& a, const RealMatrix& b) {
  if (kind == BlockKind::Orthant) return a.col(0).dot(b.col(0));
  return inner_tr(a, b);
}

struct Validated {
  int m = 0;
  int total_dim = 0;
  double b_inf = 0.0;
  double c_norm = 0.0;
};

Validated validate(const SdpProblem& p) {
  Validated v;
  const int nb = static_cast<int>(p.blocks.size());
  if (nb == 0) throw std::invalid_argument("sdp: no blocks");
  if (p.objective.size() != p.blocks.size())
    throw std::invalid_argument("sdp: objective/block count mismatch");
  for (int b = 0; b < nb; ++b) {
    const auto& blk = p.blocks[b];
    if (blk.size <= 0) throw std::invalid_argument("sdp: nonpositive block size");
    v.total_dim += blk.size;
    const auto check_shape = [&](const RealMatrix& m, const char* what) {
      if (m.size() == 0) return;
      if (blk.kind == BlockKind::Psd) {
        if (m.rows() != blk.size || m.cols() != blk.size)
          throw std::invalid_argument(std::string("sdp: bad psd shape in ") + what);
        if ((m - m.transpose()).cwiseAbs().maxCoeff() >
            1e-9 * std::max(1.0, m.cwiseAbs().maxCoeff()))
          throw std::invalid_argument(std::string("sdp: asymmetric psd coeff in ") +
                                      what);
      } else {
        if (m.rows() != blk.size || m.cols() != 1)
          throw std::invalid_argument(std::string("sdp: bad orthant shape in ") +
                                      what);
      }
    };
    check_shape(p.objective[b], "objective");
    double cn = p.objective[b].size() ? p.objective[b].norm() : 0.0;
    v.c_norm += cn * cn;
    for (const auto& row : p.equalities) {
      if (row.coeff.size() != p.blocks.size())
        throw std::invalid_argument("sdp: row/block count mismatch");
      check_shape(row.coeff[b], "equality");
    }
  }
  v.c_norm = std::sqrt(v.c_norm);
  v.m = static_cast<int>(p.equalities.size());
  for (const auto& row : p.equalities)
    v.b_inf = std::max(v.b_inf, std::abs(row.rhs));
  return v;
}

double min_eig_symmetric(const RealMatrix& s) {
  const Matrix h = 0.5 * (s + s.transpose()).cast<Complex>();
  return min_eig_hermitian(h);
}

// Largest alpha in [0, 1] with V + alpha*dV staying in the cone, scaled by
// the boundary fraction.
double step_length(const SdpProblem& p, const Blocks& v, const Blocks& dv) {
  double lambda_min = 0.0;  // most negative generalized eigenvalue
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    if (p.blocks[b].kind == BlockKind::Orthant) {
      for (int k = 0; k < p.blocks[b].size; ++k)
        lambda_min = std::min(lambda_min, dv[b](k, 0) / v[b](k, 0));
    } else {
      RealMatrix chol_in = v[b];
      Eigen::LLT<RealMatrix> llt(chol_in);
      if (llt.info() != Eigen::Success) {
        chol_in += 1e-14 * std::max(1.0, v[b].trace()) *
                   RealMatrix::Identity(v[b].rows(), v[b].cols());
        llt.compute(chol_in);
        if (llt.info() != Eigen::Success) return 0.0;
      }
      const RealMatrix t = llt.matrixL().solve(dv[b]);
      const RealMatrix w = llt.matrixL().solve(t.transpose());
      lambda_min = std::min(lambda_min, min_eig_symmetric(w));
    }
  }
  if (lambda_min >= -1e-14) return 1.0;
  return std::min(1.0, -kStepFraction / lambda_min);
}

}  // namespace

SdpSolution solve(const SdpProblem& p, double tolerance) {
  const Validated dims = validate(p);
  const int nb = static_cast<int>(p.blocks.size());
  const int m = dims.m;

  const auto blk_identity = [&](int b) -> RealMatrix {
    const int n = p.blocks[b].size;
    return p.blocks[b].kind == BlockKind::Psd
               ? RealMatrix(RealMatrix::Identity(n, n))
               : RealMatrix(RealMatrix::Ones(n, 1));
  };

  const double tau = 1.0 + dims.b_inf;
  Blocks x(nb), s(nb);
  for (int b = 0; b < nb; ++b) {
    x[b] = tau * blk_identity(b);
    s[b] = tau * blk_identity(b);
  }
  RealVector y = RealVector::Zero(m);
  RealVector rhs_b(m);
  for (int i = 0; i < m; ++i) rhs_b(i) = p.equalities[i].rhs;

  // Rows touching each block, so the Schur assembly can skip zero blocks.
  std::vector<std::vector<int>> rows_of_block(nb);
  for (int i = 0; i < m; ++i)
    for (int b = 0; b < nb; ++b)
      if (p.equalities[i].coeff[b].size() != 0) rows_of_block[b].push_back(i);

  const auto objective_of = [&](const Blocks& v) {
    double acc = 0.0;
    for (int b = 0; b < nb; ++b)
      if (p.objective[b].size()) acc += pair_row(p.blocks[b].kind, p.objective[b], v[b]);
    return acc;
  };
  const auto apply_rows = [&](const Blocks& v) {
    // A(v); v may hold asymmetric products, the pairing is always Tr[A_i v].
    RealVector out(m);
    for (int i = 0; i < m; ++i) {
      double acc = 0.0;
      for (int b = 0; b < nb; ++b) {
        const RealMatrix& a = p.equalities[i].coeff[b];
        if (!a.size()) continue;
        if (p.blocks[b].kind == BlockKind::Orthant)
          acc += a.col(0).dot(v[b].col(0));
        else
          acc += inner_tr(a, v[b]);
      }
      out(i) = acc;
    }
    return out;
  };
  const auto adjoint_rows = [&](const RealVector& w) {
    Blocks out(nb);
    for (int b = 0; b < nb; ++b) {
      out[b] = RealMatrix::Zero(x[b].rows(), x[b].cols());
      for (int i : rows_of_block[b]) out[b] += w(i) * p.equalities[i].coeff[b];
    }
    return out;
  };

  SdpSolution sol;
  const double mu0 = dims.total_dim ? tau * tau : 1.0;
  int iter = 0;

  for (iter = 0; iter < kMaxIterations; ++iter) {
    const double pobj = objective_of(x);
    const double dobj = rhs_b.dot(y);
    const RealVector r_p = rhs_b - apply_rows(x);
    Blocks r_d(nb);
    double dual_res = 0.0;
    {
      const Blocks aty = adjoint_rows(y);
      for (int b = 0; b < nb; ++b) {
        r_d[b] = (p.objective[b].size()
                      ? RealMatrix(p.objective[b] - s[b] - aty[b])
                      : RealMatrix(-s[b] - aty[b]));
        dual_res += r_d[b].squaredNorm();
      }
      dual_res = std::sqrt(dual_res);
    }
    double mu = 0.0;
    for (int b = 0; b < nb; ++b) mu += cone_inner(p.blocks[b].kind, x[b], s[b]);
    mu /= std::max(1, dims.total_dim);

    const double relgap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj));
    const double prires = r_p.size() ? r_p.cwiseAbs().maxCoeff() / (1.0 + dims.b_inf) : 0.0;
    const double duares = dual_res / (1.0 + dims.c_norm);
    if (relgap <= tolerance && prires <= tolerance && duares <= tolerance) {
      sol.status = SdpStatus::Optimal;
      break;
    }
    double x_scale = 0.0;
    for (int b = 0; b < nb; ++b) x_scale = std::max(x_scale, x[b].cwiseAbs().maxCoeff());
    if (mu > 1e10 * mu0 || x_scale > 1e12 * tau ||
        (m && y.cwiseAbs().maxCoeff() > 1e12 * tau)) {
      sol.status = SdpStatus::Infeasible;
      break;
    }

    // Factor every dual block and build the Schur complement
    // M_ij = sum_b Tr[A_i X A_j S^{-1}].
    Blocks s_inv(nb);
    for (int b = 0; b < nb; ++b) {
      if (p.blocks[b].kind == BlockKind::Orthant) {
        s_inv[b] = s[b].cwiseInverse();
      } else {
        RealMatrix sb = s[b];
        Eigen::LLT<RealMatrix> llt(sb);
        for (double ridge = 1e-14 * std::max(1.0, sb.trace());
             llt.info() != Eigen::Success; ridge *= 100.0) {
          if (ridge > 1.0) throw std::runtime_error("sdp: dual block lost definiteness");
          sb += ridge * RealMatrix::Identity(sb.rows(), sb.cols());
          llt.compute(sb);
        }
        s_inv[b] = llt.solve(RealMatrix::Identity(sb.rows(), sb.cols()));
      }
    }

    RealMatrix schur = RealMatrix::Zero(m, m);
    for (int b = 0; b < nb; ++b) {
      const auto& rows = rows_of_block[b];
      if (rows.empty()) continue;
      if (p.blocks[b].kind == BlockKind::Orthant) {
        for (size_t ia = 0; ia < rows.size(); ++ia) {
          const int i = rows[ia];
          const RealVector w = p.equalities[i].coeff[b].col(0).cwiseProduct(
              x[b].col(0).cwiseProduct(s_inv[b].col(0)));
          for (size_t ja = ia; ja < rows.size(); ++ja) {
            const int j = rows[ja];
            const double val = p.equalities[j].coeff[b].col(0).dot(w);
            schur(i, j) += val;
            if (j != i) schur(j, i) += val;
          }
        }
      } else {
        for (size_t ia = 0; ia < rows.size(); ++ia) {
          const int i = rows[ia];
          const RealMatrix w = x[b] * p.equalities[i].coeff[b] * s_inv[b];
          for (size_t ja = ia; ja < rows.size(); ++ja) {
            const int j = rows[ja];
            const double val = inner_tr(p.equalities[j].coeff[b], w);
            schur(i, j) += val;
            if (j != i) schur(j, i) += val;
          }
        }
      }
    }

    Eigen::LLT<RealMatrix> schur_llt(schur);
    if (schur_llt.info() != Eigen::Success) {
      const double base = std::max(1.0, schur.diagonal().cwiseAbs().maxCoeff());
      for (double ridge = 1e-13 * base; schur_llt.info() != Eigen::Success;
           ridge *= 100.0) {
        if (ridge > 1e-1 * base)
          throw std::runtime_error("sdp: Schur complement not factorizable");
        schur_llt.compute(schur + ridge * RealMatrix::Identity(m, m));
      }
    }

    const auto solve_direction = [&](const Blocks& r_c, RealVector& dy, Blocks& dx,
                                     Blocks& ds) {
      Blocks g(nb);
      for (int b = 0; b < nb; ++b) {
        if (p.blocks[b].kind == BlockKind::Orthant)
          g[b] = (r_c[b].col(0) - x[b].col(0).cwiseProduct(r_d[b].col(0)))
                     .cwiseProduct(s_inv[b].col(0))
                     .eval();
        else
          g[b] = (r_c[b] - x[b] * r_d[b]) * s_inv[b];
      }
      RealVector rhs = r_p - apply_rows(g);
      dy = m ? RealVector(schur_llt.solve(rhs)) : RealVector();
      const Blocks aty = adjoint_rows(dy);
      dx.resize(nb);
      ds.resize(nb);
      for (int b = 0; b < nb; ++b) {
        ds[b] = r_d[b] - aty[b];
        if (p.blocks[b].kind == BlockKind::Orthant) {
          dx[b] = (r_c[b].col(0) - x[b].col(0).cwiseProduct(ds[b].col(0)))
                      .cwiseProduct(s_inv[b].col(0))
                      .eval();
        } else {
          RealMatrix d = (r_c[b] - x[b] * ds[b]) * s_inv[b];
          dx[b] = 0.5 * (d + d.transpose());
        }
      }
    };

    // Predictor.
    Blocks r_c(nb);
    for (int b = 0; b < nb; ++b)
      r_c[b] = (p.blocks[b].kind == BlockKind::Orthant)
                   ? RealMatrix(-x[b].col(0).cwiseProduct(s[b].col(0)))
                   : RealMatrix(-x[b] * s[b]);
    RealVector dy_aff;
    Blocks dx_aff, ds_aff;
    solve_direction(r_c, dy_aff, dx_aff, ds_aff);
    const double ap_aff = step_length(p, x, dx_aff);
    const double ad_aff = step_length(p, s, ds_aff);
    double mu_aff = 0.0;
    for (int b = 0; b < nb; ++b)
      mu_aff += cone_inner(p.blocks[b].kind, x[b] + ap_aff * dx_aff[b],
                           s[b] + ad_aff * ds_aff[b]);
    mu_aff /= std::max(1, dims.total_dim);
    const double ratio = mu > 0.0 ? mu_aff / mu : 0.0;
    const double sigma = std::clamp(ratio * ratio * ratio, 1e-8, 1.0);

    // Corrector.
    for (int b = 0; b < nb; ++b) {
      if (p.blocks[b].kind == BlockKind::Orthant)
        r_c[b] = (sigma * mu * RealVector::Ones(p.blocks[b].size) -
                  x[b].col(0).cwiseProduct(s[b].col(0)) -
                  dx_aff[b].col(0).cwiseProduct(ds_aff[b].col(0)))
                     .eval();
      else
        r_c[b] = sigma * mu * RealMatrix::Identity(p.blocks[b].size, p.blocks[b].size) -
                 x[b] * s[b] - dx_aff[b] * ds_aff[b];
    }
    RealVector dy;
    Blocks dx, ds;
    solve_direction(r_c, dy, dx, ds);
    const double ap = step_length(p, x, dx);
    const double ad = step_length(p, s, ds);
    if (ap < 1e-10 && ad < 1e-10) break;  // stalled; report MaxIter

    for (int b = 0; b < nb; ++b) {
      x[b] += ap * dx[b];
      s[b] += ad * ds[b];
      if (p.blocks[b].kind == BlockKind::Psd) {
        x[b] = 0.5 * (x[b] + x[b].transpose()).eval();
        s[b] = 0.5 * (s[b] + s[b].transpose()).eval();
      }
    }
    if (m) y += ad * dy;
  }

  sol.primal_value = objective_of(x);
  sol.dual_value = rhs_b.dot(y);
  sol.gap = std::abs(sol.primal_value - sol.dual_value);
  sol.primal_blocks = x;
  sol.dual_multipliers = y;
  sol.iterations = iter;

  if (sol.status == SdpStatus::Optimal) {
    // Certificate check, independent of the iteration bookkeeping: the primal
    // blocks must be (numerically) in the cone, the multipliers dual feasible,
    // and the equalities satisfied.
    const Blocks aty = adjoint_rows(y);
    double dual_viol = 0.0, cone_viol = 0.0;
    for (int b = 0; b < nb; ++b) {
      const RealMatrix slack = p.objective[b].size()
                                   ? RealMatrix(p.objective[b] - aty[b])
                                   : RealMatrix(-aty[b]);
      if (p.blocks[b].kind == BlockKind::Orthant) {
        dual_viol = std::max(dual_viol, -slack.col(0).minCoeff());
        cone_viol = std::max(cone_viol, -x[b].col(0).minCoeff());
      } else {
        dual_viol = std::max(dual_viol, -min_eig_symmetric(slack));
        cone_viol = std::max(cone_viol, -min_eig_symmetric(x[b]));
      }
    }
    const RealVector r_p = rhs_b - apply_rows(x);
    const double pri_res = r_p.size() ? r_p.cwiseAbs().maxCoeff() : 0.0;
    const double scale = 1.0 + std::max(dims.b_inf, dims.c_norm);
    if (dual_viol > 1e-8 * scale || cone_viol > 1e-9 ||
        pri_res > 10.0 * tolerance * (1.0 + dims.b_inf))
      sol.status = SdpStatus::MaxIter;
  }
  return sol;
}

}  // namespace uncert
