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
#include <sstream>
#include <stdexcept>
#include <utility>

#include "uncert/program.hpp"

namespace uncert {

namespace {

Matrix scalar1(double v) { return Matrix::Constant(1, 1, Complex(v, 0.0)); }

// A stalled solve whose duality gap still beats the cross-form agreement
// tolerance is usable; its precision is carried in MeasureResult::gap.
void ensure_optimal(const CxSolution& s, const std::string& what) {
  if (s.status == SdpStatus::Optimal) return;
  if (s.status == SdpStatus::MaxIter && s.gap <= tol().gap_agreement) return;
  std::ostringstream msg;
  msg << what << ": solver stopped without optimality certificate ("
      << (s.status == SdpStatus::MaxIter ? "iteration limit" : "infeasible")
      << ", gap " << s.gap << ")";
  throw std::runtime_error(msg.str());
}

void check_range(double v, const std::string& what, double hi = 1.0) {
  if (v < -tol().measure_range || v > hi + tol().measure_range) {
    std::ostringstream msg;
    msg << what << ": value " << v << " outside [0, " << hi << "]";
    throw std::runtime_error(msg.str());
  }
}

// Objective helper: <fixed, X> as a 1x1 expression term.
CxExpr::PsdMap pairing(const Matrix& fixed) {
  return [fixed](const Matrix& m) {
    return Matrix(trace_product(fixed, m) * Matrix::Identity(1, 1));
  };
}

CxExpr::PsdMap trace_term(double sign) {
  return [sign](const Matrix& m) {
    return Matrix(sign * m.trace() * Matrix::Identity(1, 1));
  };
}

CxExpr::VecMap unit_entry(int index, double sign) {
  return [index, sign](const RealVector& v) {
    return Matrix(sign * v(index) * Matrix::Identity(1, 1));
  };
}

}  // namespace

MeasureResult diamond_distance(const Device& e1, const Device& e2,
                               double tolerance) {
  if (e1.in.letters != e2.in.letters || e1.in.dim != e2.in.dim ||
      e1.out.letters != e2.out.letters || e1.out.dim != e2.out.dim)
    throw std::invalid_argument("diamond_distance: device shapes differ");
  const int n_in = e1.in.letters, n_out = e1.out.letters;
  const int aq = e1.in.dim, bq = e1.out.dim, bd = bq * aq;
  std::vector<Matrix> delta(e1.blocks.size());
  for (size_t i = 0; i < delta.size(); ++i)
    delta[i] = e1.blocks[i] - e2.blocks[i];

  // Upper form: smallest lambda with T_yz >= Delta_yz blockwise and
  // lambda 1 >= sum_y Tr_B T_yz for every input letter.
  CxProgram upper;
  std::vector<CxVar> t(delta.size());
  for (auto& v : t) v = upper.add_hermitian(bd);
  const CxVar lam = upper.add_scalars(1);
  for (int y = 0; y < n_out; ++y)
    for (int z = 0; z < n_in; ++z) {
      CxExpr gap(bd);
      gap.add_term(t[y * n_in + z], [](const Matrix& m) { return m; });
      gap.add_constant(-delta[y * n_in + z]);
      upper.require_psd(gap);
    }
  for (int z = 0; z < n_in; ++z) {
    CxExpr cap(aq);
    cap.add_vec_term(lam, [aq](const RealVector& v) {
      return Matrix(v(0) * Matrix::Identity(aq, aq));
    });
    for (int y = 0; y < n_out; ++y)
      cap.add_term(t[y * n_in + z], [bq, aq](const Matrix& m) {
        return Matrix(-partial_trace(m, {bq, aq}, {1}));
      });
    upper.require_psd(cap);
  }
  CxExpr upper_obj(1);
  upper_obj.add_vec_term(lam, unit_entry(0, 1.0));
  upper.minimize(upper_obj);
  const CxSolution su = upper.solve(tolerance);
  ensure_optimal(su, "diamond_distance[upper]");

  // Certificate form: best discrimination strategy K under a shared input.
  CxProgram lower;
  std::vector<CxVar> k(delta.size());
  for (auto& v : k) v = lower.add_hermitian(bd);
  std::vector<CxVar> rho(n_in);
  for (auto& v : rho) v = lower.add_hermitian(aq);
  const CxVar slack = lower.add_scalars(1);
  for (int y = 0; y < n_out; ++y)
    for (int z = 0; z < n_in; ++z) {
      CxExpr room(bd);
      room.add_term(rho[z], [bq](const Matrix& m) {
        return Matrix(kron(Matrix::Identity(bq, bq), m));
      });
      room.add_term(k[y * n_in + z], [](const Matrix& m) { return Matrix(-m); });
      lower.require_psd(room);
    }
  CxExpr mass(1);
  for (int z = 0; z < n_in; ++z) mass.add_term(rho[z], trace_term(1.0));
  mass.add_vec_term(slack, unit_entry(0, 1.0));
  lower.require_eq(mass, scalar1(1.0));
  CxExpr lower_obj(1);
  for (size_t i = 0; i < delta.size(); ++i)
    lower_obj.add_term(k[i], pairing(delta[i]));
  lower.maximize(lower_obj);
  const CxSolution sl = lower.solve(tolerance);
  ensure_optimal(sl, "diamond_distance[certificate]");

  MeasureResult out;
  out.value = sl.value;
  out.gap = std::max({std::abs(su.value - sl.value), su.gap, sl.gap});
  out.iterations = std::max(su.iterations, sl.iterations);
  for (size_t i = 0; i < delta.size(); ++i)
    out.optimizer.push_back(sl.hermitian[i]);
  out.formulation = "diamond";
  check_range(out.value, "diamond_distance");
  return out;
}

double unentangled_distinguishability(const Device& m1, const Device& m2) {
  if (m1.out.dim != 1 || m2.out.dim != 1 || m1.in.letters != 1 ||
      m2.in.letters != 1)
    throw std::invalid_argument(
        "unentangled_distinguishability: expected plain measurements");
  if (m1.out.letters != m2.out.letters || m1.in.dim != m2.in.dim)
    throw std::invalid_argument(
        "unentangled_distinguishability: outcome counts or dimensions differ");
  const int n = m1.out.letters;
  if (n > 20)
    throw std::invalid_argument(
        "unentangled_distinguishability: more than 20 outcomes");
  std::vector<Matrix> diff(n);
  Matrix current = Matrix::Zero(m1.in.dim, m1.in.dim);
  for (int i = 0; i < n; ++i) {
    diff[i] = m1.block(i, 0) - m2.block(i, 0);
    current += diff[i];
  }
  // Gray-code walk: one sign flip per step.
  std::vector<double> sign(n, 1.0);
  double best = schatten_norm(current, Schatten::Operator);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    int flip = 0;
    while (!((step >> flip) & 1)) ++flip;
    current -= 2.0 * sign[flip] * diff[flip];
    sign[flip] = -sign[flip];
    best = std::max(best, schatten_norm(current, Schatten::Operator));
  }
  return 0.5 * best;
}

MeasureResult epsilon(const Device& e, const Basis& x, double tolerance) {
  const int d = x.dim;
  if (e.in.letters != 1 || e.in.dim != d)
    throw std::invalid_argument("epsilon: device input does not match basis");
  const int n_y = e.out.letters, n_x = d;
  std::vector<Matrix> marg(n_y);
  for (int y = 0; y < n_y; ++y)
    marg[y] = partial_trace(e.block(y, 0), {e.out.dim, d}, {1});
  std::vector<Matrix> q(n_x);
  for (int i = 0; i < n_x; ++i) q[i] = basis_projector(x, i).transpose();

  CxProgram upper;
  std::vector<CxVar> t(n_x);
  for (auto& v : t) v = upper.add_hermitian(d);
  const CxVar r = upper.add_scalars(n_x * n_y);
  const CxVar lam = upper.add_scalars(1);
  for (int i = 0; i < n_x; ++i) {
    CxExpr c(d);
    c.add_term(t[i], [](const Matrix& m) { return m; });
    c.add_vec_term(r, [i, n_y, d, &marg](const RealVector& v) {
      Matrix acc = Matrix::Zero(d, d);
      for (int y = 0; y < n_y; ++y) acc += v(i * n_y + y) * marg[y];
      return acc;
    });
    c.add_constant(-q[i]);
    upper.require_psd(c);
  }
  {
    CxExpr cap(d);
    cap.add_vec_term(lam, [d](const RealVector& v) {
      return Matrix(v(0) * Matrix::Identity(d, d));
    });
    for (int i = 0; i < n_x; ++i)
      cap.add_term(t[i], [](const Matrix& m) { return Matrix(-m); });
    upper.require_psd(cap);
  }
  for (int y = 0; y < n_y; ++y) {
    CxExpr column(1);
    column.add_vec_term(r, [y, n_x, n_y](const RealVector& v) {
      double acc = 0.0;
      for (int i = 0; i < n_x; ++i) acc += v(i * n_y + y);
      return Matrix(acc * Matrix::Identity(1, 1));
    });
    upper.require_eq(column, scalar1(1.0));
  }
  CxExpr upper_obj(1);
  upper_obj.add_vec_term(lam, unit_entry(0, 1.0));
  upper.minimize(upper_obj);
  const CxSolution su = upper.solve(tolerance);
  ensure_optimal(su, "epsilon[upper]");

  CxProgram cert;
  std::vector<CxVar> k(n_x);
  for (auto& v : k) v = cert.add_hermitian(d);
  const CxVar rho = cert.add_hermitian(d);
  const CxVar big_l = cert.add_scalars(n_y);
  const CxVar s_tr = cert.add_scalars(1);
  const CxVar s_xy = cert.add_scalars(n_x * n_y);
  for (int i = 0; i < n_x; ++i) {
    CxExpr room(d);
    room.add_term(rho, [](const Matrix& m) { return m; });
    room.add_term(k[i], [](const Matrix& m) { return Matrix(-m); });
    cert.require_psd(room);
  }
  {
    CxExpr mass(1);
    mass.add_term(rho, trace_term(1.0));
    mass.add_vec_term(s_tr, unit_entry(0, 1.0));
    cert.require_eq(mass, scalar1(1.0));
  }
  for (int i = 0; i < n_x; ++i)
    for (int y = 0; y < n_y; ++y) {
      CxExpr line(1);
      line.add_term(k[i], pairing(marg[y]));
      line.add_vec_term(s_xy, unit_entry(i * n_y + y, 1.0));
      line.add_vec_term(big_l, unit_entry(y, -1.0));
      cert.require_eq(line, scalar1(0.0));
    }
  CxExpr cert_obj(1);
  for (int i = 0; i < n_x; ++i) cert_obj.add_term(k[i], pairing(q[i]));
  for (int y = 0; y < n_y; ++y)
    cert_obj.add_vec_term(big_l, unit_entry(y, -1.0));
  cert.maximize(cert_obj);
  const CxSolution sc = cert.solve(tolerance);
  ensure_optimal(sc, "epsilon[certificate]");

  MeasureResult out;
  out.value = su.value;
  out.gap = std::max({std::abs(su.value - sc.value), su.gap, sc.gap});
  out.iterations = std::max(su.iterations, sc.iterations);
  Matrix post(n_x, n_y);
  for (int i = 0; i < n_x; ++i)
    for (int y = 0; y < n_y; ++y)
      post(i, y) = su.scalars[0](i * n_y + y);
  out.optimizer.push_back(post);
  out.formulation = "epsilon";
  check_range(out.value, "epsilon");
  return out;
}

MeasureResult nu(const Device& e, const Basis& z, double tolerance) {
  const int d = z.dim;
  if (e.in.letters != 1 || e.in.dim != d)
    throw std::invalid_argument("nu: device input does not match basis");
  const int n_y = e.out.letters, bq = e.out.dim;
  std::vector<Matrix> proj(d), q(d);
  for (int i = 0; i < d; ++i) {
    proj[i] = basis_projector(z, i);
    q[i] = proj[i].transpose();
  }
  std::vector<Matrix> flipped(n_y);
  for (int y = 0; y < n_y; ++y)
    flipped[y] = partial_transpose(e.block(y, 0), {bq, d}, {0});
  const Matrix ib = Matrix::Identity(bq, bq);
  const Matrix id = Matrix::Identity(d, d);

  // Choi block of "measure with E, recover with R, measure Z" for input
  // letter i; the inner projector enters untransposed because the recovery
  // Choi is contracted through its own transpose convention.
  const auto corrected = [&](int i, int y, const Matrix& r_y) {
    const Matrix reduced =
        partial_trace(kron(proj[i], ib) * r_y, {d, bq}, {1});
    return partial_trace(kron(reduced, id) * flipped[y], {bq, d}, {1});
  };

  CxProgram upper;
  std::vector<CxVar> t(d);
  for (auto& v : t) v = upper.add_hermitian(d);
  std::vector<CxVar> rec(n_y);
  for (auto& v : rec) v = upper.add_hermitian(d * bq);
  const CxVar lam = upper.add_scalars(1);
  for (int i = 0; i < d; ++i) {
    CxExpr c(d);
    c.add_term(t[i], [](const Matrix& m) { return m; });
    for (int y = 0; y < n_y; ++y)
      c.add_term(rec[y], [&corrected, i, y](const Matrix& m) {
        return corrected(i, y, m);
      });
    c.add_constant(-q[i]);
    upper.require_psd(c);
  }
  {
    CxExpr cap(d);
    cap.add_vec_term(lam, [d](const RealVector& v) {
      return Matrix(v(0) * Matrix::Identity(d, d));
    });
    for (int i = 0; i < d; ++i)
      cap.add_term(t[i], [](const Matrix& m) { return Matrix(-m); });
    upper.require_psd(cap);
  }
  for (int y = 0; y < n_y; ++y) {
    CxExpr tp(bq);
    tp.add_term(rec[y], [d, bq](const Matrix& m) {
      return partial_trace(m, {d, bq}, {1});
    });
    upper.require_eq(tp, ib);
  }
  CxExpr upper_obj(1);
  upper_obj.add_vec_term(lam, unit_entry(0, 1.0));
  upper.minimize(upper_obj);
  const CxSolution su = upper.solve(tolerance);
  ensure_optimal(su, "nu[upper]");

  CxProgram cert;
  std::vector<CxVar> k(d);
  for (auto& v : k) v = cert.add_hermitian(d);
  const CxVar rho = cert.add_hermitian(d);
  std::vector<CxVar> big_l(n_y);
  for (auto& v : big_l) v = cert.add_hermitian(bq);
  const CxVar s_tr = cert.add_scalars(1);
  for (int i = 0; i < d; ++i) {
    CxExpr room(d);
    room.add_term(rho, [](const Matrix& m) { return m; });
    room.add_term(k[i], [](const Matrix& m) { return Matrix(-m); });
    cert.require_psd(room);
  }
  {
    CxExpr mass(1);
    mass.add_term(rho, trace_term(1.0));
    mass.add_vec_term(s_tr, unit_entry(0, 1.0));
    cert.require_eq(mass, scalar1(1.0));
  }
  // Per (y, i): L_y >= Tr_A[E_y (1 x K_i)]; the full operator constraint
  // block-diagonalizes over the conjugated basis projectors.
  for (int y = 0; y < n_y; ++y)
    for (int i = 0; i < d; ++i) {
      CxExpr line(bq);
      line.add_term(big_l[y], [](const Matrix& m) { return m; });
      line.add_term(k[i], [&e, y, bq, d, &ib](const Matrix& m) {
        return Matrix(
            -partial_trace(e.block(y, 0) * kron(ib, m), {bq, d}, {0}));
      });
      cert.require_psd(line);
    }
  CxExpr cert_obj(1);
  for (int i = 0; i < d; ++i) cert_obj.add_term(k[i], pairing(q[i]));
  for (int y = 0; y < n_y; ++y) cert_obj.add_term(big_l[y], trace_term(-1.0));
  cert.maximize(cert_obj);
  const CxSolution sc = cert.solve(tolerance);
  ensure_optimal(sc, "nu[certificate]");

  MeasureResult out;
  out.value = su.value;
  out.gap = std::max({std::abs(su.value - sc.value), su.gap, sc.gap});
  out.iterations = std::max(su.iterations, sc.iterations);
  for (int y = 0; y < n_y; ++y) out.optimizer.push_back(su.hermitian[d + y]);
  out.formulation = "nu";
  check_range(out.value, "nu");
  return out;
}

MeasureResult eta(const Device& e, const Basis& z, double tolerance) {
  const int d = z.dim;
  if (e.in.letters != 1 || e.in.dim != d)
    throw std::invalid_argument("eta: device input does not match basis");
  const int n_y = e.out.letters, bq = e.out.dim;
  const Matrix ib = Matrix::Identity(bq, bq);
  const Matrix id = Matrix::Identity(d, d);
  std::vector<Matrix> proj(d);
  for (int i = 0; i < d; ++i) proj[i] = basis_projector(z, i);
  // Post-measurement states of the Z-basis inputs.
  std::vector<std::vector<Matrix>> xi(n_y, std::vector<Matrix>(d));
  for (int y = 0; y < n_y; ++y)
    for (int i = 0; i < d; ++i)
      xi[y][i] = partial_trace(
          e.block(y, 0) * kron(ib, proj[i].transpose()), {bq, d}, {0});

  CxProgram upper;
  std::vector<CxVar> t(d);
  for (auto& v : t) v = upper.add_hermitian(d);
  std::vector<CxVar> rec(n_y);
  for (auto& v : rec) v = upper.add_hermitian(d * bq);
  const CxVar lam = upper.add_scalars(1);
  const CxVar pad = upper.add_scalars(d);
  for (int i = 0; i < d; ++i) {
    CxExpr c(d);
    c.add_term(t[i], [](const Matrix& m) { return m; });
    for (int y = 0; y < n_y; ++y)
      c.add_term(rec[y], [&xi, i, y, d, bq](const Matrix& m) {
        return partial_trace(m * kron(Matrix::Identity(d, d),
                                      Matrix(xi[y][i].transpose())),
                             {d, bq}, {0});
      });
    c.add_constant(-proj[i]);
    upper.require_psd(c);
  }
  for (int i = 0; i < d; ++i) {
    CxExpr line(1);
    line.add_term(t[i], trace_term(1.0));
    line.add_vec_term(pad, unit_entry(i, 1.0));
    line.add_vec_term(lam, unit_entry(0, -1.0));
    upper.require_eq(line, scalar1(0.0));
  }
  for (int y = 0; y < n_y; ++y) {
    CxExpr tp(bq);
    tp.add_term(rec[y], [d, bq](const Matrix& m) {
      return partial_trace(m, {d, bq}, {1});
    });
    upper.require_eq(tp, ib);
  }
  CxExpr upper_obj(1);
  upper_obj.add_vec_term(lam, unit_entry(0, 1.0));
  upper.minimize(upper_obj);
  const CxSolution su = upper.solve(tolerance);
  ensure_optimal(su, "eta[upper]");

  CxProgram cert;
  std::vector<CxVar> k(d);
  for (auto& v : k) v = cert.add_hermitian(d);
  const CxVar r = cert.add_scalars(d);
  std::vector<CxVar> big_l(n_y);
  for (auto& v : big_l) v = cert.add_hermitian(bq);
  const CxVar s_tr = cert.add_scalars(1);
  for (int i = 0; i < d; ++i) {
    CxExpr room(d);
    room.add_vec_term(r, [i, d](const RealVector& v) {
      return Matrix(v(i) * Matrix::Identity(d, d));
    });
    room.add_term(k[i], [](const Matrix& m) { return Matrix(-m); });
    cert.require_psd(room);
  }
  {
    CxExpr mass(1);
    mass.add_vec_term(r, [d](const RealVector& v) {
      return Matrix(v.head(d).sum() * Matrix::Identity(1, 1));
    });
    mass.add_vec_term(s_tr, unit_entry(0, 1.0));
    cert.require_eq(mass, scalar1(1.0));
  }
  for (int y = 0; y < n_y; ++y) {
    CxExpr block(d * bq);
    block.add_term(big_l[y], [id](const Matrix& m) {
      return Matrix(kron(id, m));
    });
    for (int i = 0; i < d; ++i)
      block.add_term(k[i], [&xi, y, i](const Matrix& m) {
        return Matrix(-kron(m, Matrix(xi[y][i].transpose())));
      });
    cert.require_psd(block);
  }
  CxExpr cert_obj(1);
  for (int i = 0; i < d; ++i) cert_obj.add_term(k[i], pairing(proj[i]));
  for (int y = 0; y < n_y; ++y) cert_obj.add_term(big_l[y], trace_term(-1.0));
  cert.maximize(cert_obj);
  const CxSolution sc = cert.solve(tolerance);
  ensure_optimal(sc, "eta[certificate]");

  MeasureResult out;
  out.value = su.value;
  out.gap = std::max({std::abs(su.value - sc.value), su.gap, sc.gap});
  out.iterations = std::max(su.iterations, sc.iterations);
  for (int y = 0; y < n_y; ++y) out.optimizer.push_back(su.hermitian[d + y]);
  out.formulation = "eta";
  check_range(out.value, "eta");
  return out;
}

namespace {

// Shared by eta_hat and eta_tilde: (d-1)/d minus the best constant-channel
// approximation, in two input conventions.
MeasureResult demerit_from_constant_gap(double best, double gap,
                                        int iterations, int d,
                                        std::vector<Matrix> optimizer,
                                        std::string formulation) {
  MeasureResult out;
  out.value = (d - 1.0) / d - best;
  out.gap = gap;
  out.iterations = iterations;
  out.optimizer = std::move(optimizer);
  out.formulation = std::move(formulation);
  check_range(out.value, out.formulation);
  return out;
}

}  // namespace

MeasureResult eta_hat(const Device& e, const Basis& z, double tolerance) {
  const int d = z.dim;
  if (e.in.letters != 1 || e.in.dim != d)
    throw std::invalid_argument("eta_hat: device input does not match basis");
  const int n_y = e.out.letters, bq = e.out.dim;
  const Matrix ib = Matrix::Identity(bq, bq);
  std::vector<std::vector<Matrix>> xi(n_y, std::vector<Matrix>(d));
  for (int y = 0; y < n_y; ++y)
    for (int i = 0; i < d; ++i)
      xi[y][i] = partial_trace(
          e.block(y, 0) * kron(ib, basis_projector(z, i).transpose()),
          {bq, d}, {0});

  CxProgram upper;
  std::vector<CxVar> t(static_cast<size_t>(n_y) * d);
  for (auto& v : t) v = upper.add_hermitian(bq);
  std::vector<CxVar> sigma(n_y);
  for (auto& v : sigma) v = upper.add_hermitian(bq);
  const CxVar lam = upper.add_scalars(1);
  const CxVar pad = upper.add_scalars(d);
  for (int y = 0; y < n_y; ++y)
    for (int i = 0; i < d; ++i) {
      CxExpr c(bq);
      c.add_term(t[y * d + i], [](const Matrix& m) { return m; });
      c.add_term(sigma[y], [](const Matrix& m) { return m; });
      c.add_constant(-xi[y][i]);
      upper.require_psd(c);
    }
  for (int i = 0; i < d; ++i) {
    CxExpr line(1);
    for (int y = 0; y < n_y; ++y) line.add_term(t[y * d + i], trace_term(1.0));
    line.add_vec_term(pad, unit_entry(i, 1.0));
    line.add_vec_term(lam, unit_entry(0, -1.0));
    upper.require_eq(line, scalar1(0.0));
  }
  {
    CxExpr mass(1);
    for (int y = 0; y < n_y; ++y) mass.add_term(sigma[y], trace_term(1.0));
    upper.require_eq(mass, scalar1(1.0));
  }
  CxExpr upper_obj(1);
  upper_obj.add_vec_term(lam, unit_entry(0, 1.0));
  upper.minimize(upper_obj);
  const CxSolution su = upper.solve(tolerance);
  ensure_optimal(su, "eta_hat[upper]");

  CxProgram cert;
  std::vector<CxVar> k(static_cast<size_t>(n_y) * d);
  for (auto& v : k) v = cert.add_hermitian(bq);
  const CxVar r = cert.add_scalars(d);
  const CxVar mu = cert.add_scalars(1);
  const CxVar s_tr = cert.add_scalars(1);
  for (int y = 0; y < n_y; ++y)
    for (int i = 0; i < d; ++i) {
      CxExpr room(bq);
      room.add_vec_term(r, [i, bq](const RealVector& v) {
        return Matrix(v(i) * Matrix::Identity(bq, bq));
      });
      room.add_term(k[y * d + i], [](const Matrix& m) { return Matrix(-m); });
      cert.require_psd(room);
    }
  {
    CxExpr mass(1);
    mass.add_vec_term(r, [d](const RealVector& v) {
      return Matrix(v.head(d).sum() * Matrix::Identity(1, 1));
    });
    mass.add_vec_term(s_tr, unit_entry(0, 1.0));
    cert.require_eq(mass, scalar1(1.0));
  }
  for (int y = 0; y < n_y; ++y) {
    CxExpr cap(bq);
    cap.add_vec_term(mu, [bq](const RealVector& v) {
      return Matrix(v(0) * Matrix::Identity(bq, bq));
    });
    for (int i = 0; i < d; ++i)
      cap.add_term(k[y * d + i], [](const Matrix& m) { return Matrix(-m); });
    cert.require_psd(cap);
  }
  CxExpr cert_obj(1);
  for (int y = 0; y < n_y; ++y)
    for (int i = 0; i < d; ++i)
      cert_obj.add_term(k[y * d + i], pairing(xi[y][i]));
  cert_obj.add_vec_term(mu, unit_entry(0, -1.0));
  cert.maximize(cert_obj);
  const CxSolution sc = cert.solve(tolerance);
  ensure_optimal(sc, "eta_hat[certificate]");

  std::vector<Matrix> opt;
  for (int y = 0; y < n_y; ++y) opt.push_back(su.hermitian[n_y * d + y]);
  return demerit_from_constant_gap(
      su.value, std::max({std::abs(su.value - sc.value), su.gap, sc.gap}),
      std::max(su.iterations, sc.iterations), d, std::move(opt), "eta-hat");
}

MeasureResult eta_tilde(const Device& e, const Basis& z, double tolerance) {
  const int d = z.dim;
  if (e.in.letters != 1 || e.in.dim != d)
    throw std::invalid_argument("eta_tilde: device input does not match basis");
  const Device pinched = compose(pinching(z), e);
  const int n_y = pinched.out.letters, bq = pinched.out.dim;
  const int bd = bq * d;

  CxProgram prog;
  std::vector<CxVar> t(n_y);
  for (auto& v : t) v = prog.add_hermitian(bd);
  std::vector<CxVar> sigma(n_y);
  for (auto& v : sigma) v = prog.add_hermitian(bq);
  const CxVar lam = prog.add_scalars(1);
  const Matrix id = Matrix::Identity(d, d);
  for (int y = 0; y < n_y; ++y) {
    CxExpr c(bd);
    c.add_term(t[y], [](const Matrix& m) { return m; });
    c.add_term(sigma[y], [id](const Matrix& m) {
      return Matrix(kron(m, id));
    });
    c.add_constant(-pinched.block(y, 0));
    prog.require_psd(c);
  }
  {
    CxExpr cap(d);
    cap.add_vec_term(lam, [d](const RealVector& v) {
      return Matrix(v(0) * Matrix::Identity(d, d));
    });
    for (int y = 0; y < n_y; ++y)
      cap.add_term(t[y], [bq, d](const Matrix& m) {
        return Matrix(-partial_trace(m, {bq, d}, {1}));
      });
    prog.require_psd(cap);
  }
  {
    CxExpr mass(1);
    for (int y = 0; y < n_y; ++y) mass.add_term(sigma[y], trace_term(1.0));
    prog.require_eq(mass, scalar1(1.0));
  }
  CxExpr obj(1);
  obj.add_vec_term(lam, unit_entry(0, 1.0));
  prog.minimize(obj);
  const CxSolution s = prog.solve(tolerance);
  ensure_optimal(s, "eta_tilde");

  std::vector<Matrix> opt;
  for (int y = 0; y < n_y; ++y) opt.push_back(s.hermitian[n_y + y]);
  return demerit_from_constant_gap(s.value, s.gap, s.iterations, d,
                                   std::move(opt), "eta-tilde");
}

MeasureResult constant_radius(const Device& f, double tolerance) {
  if (f.in.dim != 1 || f.out.letters != 1)
    throw std::invalid_argument(
        "constant_radius: expected a classical-input channel");
  const int n = f.in.letters, m = f.out.dim;

  CxProgram prog;
  std::vector<CxVar> excess(n);
  for (auto& v : excess) v = prog.add_hermitian(m);
  const CxVar sigma = prog.add_hermitian(m);
  const CxVar radius = prog.add_scalars(1);
  const CxVar pad = prog.add_scalars(n);
  for (int i = 0; i < n; ++i) {
    CxExpr c(m);
    c.add_term(excess[i], [](const Matrix& mm) { return mm; });
    c.add_term(sigma, [](const Matrix& mm) { return Matrix(-mm); });
    c.add_constant(f.block(0, i));
    prog.require_psd(c);
    CxExpr line(1);
    line.add_term(excess[i], trace_term(1.0));
    line.add_vec_term(pad, unit_entry(i, 1.0));
    line.add_vec_term(radius, unit_entry(0, -1.0));
    prog.require_eq(line, scalar1(0.0));
  }
  {
    CxExpr mass(1);
    mass.add_term(sigma, trace_term(1.0));
    prog.require_eq(mass, scalar1(1.0));
  }
  CxExpr obj(1);
  obj.add_vec_term(radius, unit_entry(0, 1.0));
  prog.minimize(obj);
  const CxSolution s = prog.solve(tolerance);
  ensure_optimal(s, "constant_radius");

  MeasureResult out;
  out.value = s.value;
  out.gap = s.gap;
  out.iterations = s.iterations;
  out.optimizer.push_back(s.hermitian[n]);
  out.formulation = "constant-radius";
  check_range(out.value, "constant_radius");
  return out;
}

Complementarity complementarity(const Basis& x, const Basis& z,
                                double tolerance) {
  if (x.dim != z.dim)
    throw std::invalid_argument("complementarity: basis dimensions differ");
  const Device qx = ideal_measurement(x, true);
  Complementarity out;
  out.c_m = nu(qx, z, tolerance);
  out.c_p = eta(qx, z, tolerance);
  out.c_p_hat = eta_hat(qx, z, tolerance);
  return out;
}

MeasureResult best_measurement_error(const Device& n, const Basis& x,
                                     double tolerance) {
  const int d = x.dim;
  if (n.in.letters != 1 || n.out.letters != 1 || n.in.dim != d)
    throw std::invalid_argument(
        "best_measurement_error: expected a channel matching the basis");
  const int bp = n.out.dim;
  const Matrix choi_flipped = partial_transpose(n.blocks[0], {bp, d}, {0});
  const Matrix ia = Matrix::Identity(d, d);
  std::vector<Matrix> q(d);
  for (int i = 0; i < d; ++i) q[i] = basis_projector(x, i).transpose();

  CxProgram prog;
  std::vector<CxVar> t(d);
  for (auto& v : t) v = prog.add_hermitian(d);
  std::vector<CxVar> povm(d);
  for (auto& v : povm) v = prog.add_hermitian(bp);
  const CxVar lam = prog.add_scalars(1);
  for (int i = 0; i < d; ++i) {
    CxExpr c(d);
    c.add_term(t[i], [](const Matrix& m) { return m; });
    c.add_term(povm[i], [&choi_flipped, bp, d, &ia](const Matrix& m) {
      return partial_trace(kron(Matrix(m.transpose()), ia) * choi_flipped,
                           {bp, d}, {1});
    });
    c.add_constant(-q[i]);
    prog.require_psd(c);
  }
  {
    CxExpr cap(d);
    cap.add_vec_term(lam, [d](const RealVector& v) {
      return Matrix(v(0) * Matrix::Identity(d, d));
    });
    for (int i = 0; i < d; ++i)
      cap.add_term(t[i], [](const Matrix& m) { return Matrix(-m); });
    prog.require_psd(cap);
  }
  {
    CxExpr closure(bp);
    for (int i = 0; i < d; ++i)
      closure.add_term(povm[i], [](const Matrix& m) { return m; });
    prog.require_eq(closure, Matrix::Identity(bp, bp));
  }
  CxExpr obj(1);
  obj.add_vec_term(lam, unit_entry(0, 1.0));
  prog.minimize(obj);
  const CxSolution s = prog.solve(tolerance);
  ensure_optimal(s, "best_measurement_error");

  MeasureResult out;
  out.value = s.value;
  out.gap = s.gap;
  out.iterations = s.iterations;
  for (int i = 0; i < d; ++i) out.optimizer.push_back(s.hermitian[d + i]);
  out.formulation = "best-measurement-error";
  check_range(out.value, "best_measurement_error");
  return out;
}

}  // namespace uncert
