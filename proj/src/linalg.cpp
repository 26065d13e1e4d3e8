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

#include "uncert/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace uncert {

namespace {

constexpr double kPi = 3.14159265358979323846;

int checked_total_dim(const Matrix& m, const std::vector<int>& dims) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix not square");
  long long total = 1;
  for (int d : dims) {
    if (d <= 0) throw std::invalid_argument("factor dimension must be positive");
    total *= d;
  }
  if (total != m.rows())
    throw std::invalid_argument("factor dimensions do not match matrix size");
  return static_cast<int>(total);
}

// Row-major strides: composite = sum_f idx[f] * stride[f].
std::vector<int> strides_of(const std::vector<int>& dims) {
  std::vector<int> s(dims.size(), 1);
  for (int f = static_cast<int>(dims.size()) - 2; f >= 0; --f)
    s[f] = s[f + 1] * dims[f + 1];
  return s;
}

}  // namespace

const Tolerances& tol() {
  static const Tolerances t;
  return t;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const Eigen::Index ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  Matrix out(ra * rb, ca * cb);
  for (Eigen::Index i = 0; i < ra; ++i)
    for (Eigen::Index j = 0; j < ca; ++j)
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
  return out;
}

Matrix partial_trace(const Matrix& m, const std::vector<int>& dims,
                     const std::vector<int>& keep) {
  checked_total_dim(m, dims);
  const int nf = static_cast<int>(dims.size());
  std::vector<bool> kept(nf, false);
  for (int k : keep) {
    if (k < 0 || k >= nf) throw std::invalid_argument("keep index out of range");
    if (kept[k]) throw std::invalid_argument("duplicate keep index");
    kept[k] = true;
  }
  std::vector<int> kf, tf;  // kept / traced factor indices, ascending
  for (int f = 0; f < nf; ++f) (kept[f] ? kf : tf).push_back(f);

  const std::vector<int> st = strides_of(dims);
  int dk = 1, dt = 1;
  for (int f : kf) dk *= dims[f];
  for (int f : tf) dt *= dims[f];

  // offset within the full composite index for each kept / traced sub-index
  std::vector<int> kofs(dk, 0), tofs(dt, 0);
  {
    for (int x = 0; x < dk; ++x) {
      int r = x, o = 0;
      for (int p = static_cast<int>(kf.size()) - 1; p >= 0; --p) {
        o += (r % dims[kf[p]]) * st[kf[p]];
        r /= dims[kf[p]];
      }
      kofs[x] = o;
    }
    for (int x = 0; x < dt; ++x) {
      int r = x, o = 0;
      for (int p = static_cast<int>(tf.size()) - 1; p >= 0; --p) {
        o += (r % dims[tf[p]]) * st[tf[p]];
        r /= dims[tf[p]];
      }
      tofs[x] = o;
    }
  }

  Matrix out = Matrix::Zero(dk, dk);
  for (int i = 0; i < dk; ++i)
    for (int j = 0; j < dk; ++j) {
      Complex acc = 0.0;
      for (int t = 0; t < dt; ++t) acc += m(kofs[i] + tofs[t], kofs[j] + tofs[t]);
      out(i, j) = acc;
    }
  return out;
}

Matrix partial_transpose(const Matrix& m, const std::vector<int>& dims,
                         const std::vector<int>& which) {
  const int total = checked_total_dim(m, dims);
  const int nf = static_cast<int>(dims.size());
  std::vector<bool> flip(nf, false);
  for (int w : which) {
    if (w < 0 || w >= nf) throw std::invalid_argument("transpose index out of range");
    flip[w] = true;
  }
  const std::vector<int> st = strides_of(dims);

  auto split = [&](int idx, std::vector<int>& parts) {
    for (int f = 0; f < nf; ++f) {
      parts[f] = idx / st[f];
      idx %= st[f];
    }
  };

  Matrix out(total, total);
  std::vector<int> ri(nf), ci(nf);
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j) {
      split(i, ri);
      split(j, ci);
      for (int f = 0; f < nf; ++f)
        if (flip[f]) std::swap(ri[f], ci[f]);
      int ip = 0, jp = 0;
      for (int f = 0; f < nf; ++f) {
        ip += ri[f] * st[f];
        jp += ci[f] * st[f];
      }
      out(ip, jp) = m(i, j);
    }
  return out;
}

bool is_hermitian(const Matrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

EigResult hermitian_eig(const Matrix& m) {
  if (!is_hermitian(m, tol().hermiticity_input))
    throw std::invalid_argument("hermitian_eig: matrix is not Hermitian");
  const int n = static_cast<int>(m.rows());
  Matrix h = 0.5 * (m + m.adjoint());
  Matrix v = Matrix::Identity(n, n);

  const double scale = std::max(1.0, h.norm());
  const double threshold = tol().jacobi_offdiag * scale;
  const int max_sweeps = 64;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off2 = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off2 += 2.0 * std::norm(h(p, q));
    if (std::sqrt(off2) < threshold) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex hpq = h(p, q);
        const double a = std::abs(hpq);
        if (a < 1e-300) continue;
        const Complex phase = hpq / a;
        const double app = h(p, p).real();
        const double aqq = h(q, q).real();
        // Zeroing condition for this rotation convention is
        // t^2 - 2 theta t - 1 = 0; the stable root has the opposite sign.
        const double theta = (aqq - app) / (2.0 * a);
        const double t =
            (theta >= 0.0 ? -1.0 : 1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;

        // Columns of the plane rotation J: J(p,p)=c, J(q,p)=s*conj(phase),
        // J(p,q)=-s*phase, J(q,q)=c; update h <- J^dag h J, v <- v J.
        const Vector colp = h.col(p), colq = h.col(q);
        h.col(p) = c * colp + (s * std::conj(phase)) * colq;
        h.col(q) = (-s * phase) * colp + c * colq;
        const Eigen::RowVectorXcd rowp = h.row(p), rowq = h.row(q);
        h.row(p) = c * rowp + (s * phase) * rowq;
        h.row(q) = (-s * std::conj(phase)) * rowp + c * rowq;
        h(p, q) = 0.0;
        h(q, p) = 0.0;

        const Vector vp = v.col(p), vq = v.col(q);
        v.col(p) = c * vp + (s * std::conj(phase)) * vq;
        v.col(q) = (-s * phase) * vp + c * vq;
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return h(i, i).real() < h(j, j).real();
  });
  EigResult out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (int k = 0; k < n; ++k) {
    out.values(k) = h(order[k], order[k]).real();
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

double schatten_norm(const Matrix& m, Schatten kind) {
  // Singular values via the Hermitian spectrum of m^dag m.
  const Matrix gram = m.adjoint() * m;
  const EigResult e = hermitian_eig(gram);
  double sum = 0.0, top = 0.0;
  for (int k = 0; k < e.values.size(); ++k) {
    const double s = std::sqrt(std::max(0.0, e.values(k)));
    sum += s;
    top = std::max(top, s);
  }
  return kind == Schatten::Trace ? sum : top;
}

Complex trace_product(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.cols() || a.cols() != b.rows())
    throw std::invalid_argument("trace_product: incompatible shapes");
  return (a.transpose().cwiseProduct(b)).sum();
}

double min_eig_hermitian(const Matrix& m) {
  return hermitian_eig(m).values(0);
}

Matrix psd_sqrt(const Matrix& m) {
  const EigResult e = hermitian_eig(m);
  const int n = static_cast<int>(m.rows());
  Matrix out = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const double lam = std::max(0.0, e.values(k));
    out += std::sqrt(lam) * (e.vectors.col(k) * e.vectors.col(k).adjoint());
  }
  return out;
}

Matrix psd_pinv_sqrt(const Matrix& m, double rank_tol) {
  const EigResult e = hermitian_eig(m);
  const int n = static_cast<int>(m.rows());
  const double lam_max = e.values.size() ? e.values(e.values.size() - 1) : 0.0;
  const double cut = rank_tol * std::max(lam_max, 0.0);
  Matrix out = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const double lam = e.values(k);
    if (lam > cut && lam > 0.0)
      out += (1.0 / std::sqrt(lam)) * (e.vectors.col(k) * e.vectors.col(k).adjoint());
  }
  return out;
}

Vector identity_vec(int d) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(d) * d);
  for (int k = 0; k < d; ++k) v(static_cast<Eigen::Index>(k) * d + k) = 1.0;
  return v;
}

double Rng::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  cached_ = r * std::sin(2.0 * kPi * u2);
  has_cached_ = true;
  return r * std::cos(2.0 * kPi * u2);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) / std::sqrt(2.0);
}

Matrix gaussian_matrix(int rows, int cols, Rng& rng) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.complex_normal();
  return m;
}

Matrix haar_isometry(int rows, int cols, Rng& rng) {
  if (rows < cols) throw std::invalid_argument("haar_isometry: rows < cols");
  const Matrix g = gaussian_matrix(rows, cols, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(rows, cols);
  const Matrix r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  for (int j = 0; j < cols; ++j) {
    const Complex rjj = r(j, j);
    const double a = std::abs(rjj);
    q.col(j) *= (a > 0.0 ? rjj / a : Complex(1.0));
  }
  return q;
}

Matrix haar_unitary(int d, Rng& rng) { return haar_isometry(d, d, rng); }

}  // namespace uncert
