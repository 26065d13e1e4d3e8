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

#include "uncert/channels.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace uncert {

namespace {

constexpr double kPi = 3.14159265358979323846;

Matrix vec_outer(const Matrix& k) {
  // vec(K) over composite row-major index (b, a), then the rank-1 Choi brick.
  const Eigen::Index rows = k.rows(), cols = k.cols();
  Vector v(rows * cols);
  for (Eigen::Index b = 0; b < rows; ++b)
    for (Eigen::Index a = 0; a < cols; ++a) v(b * cols + a) = k(b, a);
  return v * v.adjoint();
}

}  // namespace

Basis make_basis(std::vector<Vector> vectors, std::string label) {
  if (vectors.empty()) throw std::invalid_argument("basis: no vectors");
  const int d = static_cast<int>(vectors.size());
  for (const auto& v : vectors)
    if (v.size() != d) throw std::invalid_argument("basis: vector/dim mismatch");
  Matrix gram(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) gram(i, j) = vectors[i].dot(vectors[j]);
  if ((gram - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > tol().gram)
    throw std::invalid_argument("basis: not orthonormal");
  Basis b;
  b.dim = d;
  b.vectors = std::move(vectors);
  b.label = std::move(label);
  return b;
}

Matrix basis_projector(const Basis& b, int k) {
  return b.vectors.at(k) * b.vectors.at(k).adjoint();
}

void validate_device(const Device& e) {
  const int nb = e.out.letters * e.in.letters;
  if (static_cast<int>(e.blocks.size()) != nb)
    throw std::invalid_argument("device: block count mismatch");
  const int bd = e.block_dim();
  for (const auto& m : e.blocks) {
    if (m.rows() != bd || m.cols() != bd)
      throw std::invalid_argument("device: block shape mismatch");
    if (!is_hermitian(m, tol().hermiticity_input))
      throw std::invalid_argument("device: block not Hermitian");
    if (min_eig_hermitian(m) < -tol().psd)
      throw std::invalid_argument("device: block not PSD");
  }
  for (int z = 0; z < e.in.letters; ++z) {
    Matrix acc = Matrix::Zero(e.in.dim, e.in.dim);
    for (int y = 0; y < e.out.letters; ++y)
      acc += partial_trace(e.block(y, z), {e.out.dim, e.in.dim}, {1});
    if ((acc - Matrix::Identity(e.in.dim, e.in.dim)).cwiseAbs().maxCoeff() >
        tol().normalization)
      throw std::invalid_argument("device: not trace preserving");
  }
}

Device make_choi(int dim_in, int dim_out, Matrix m) {
  Device e;
  e.in = {1, dim_in};
  e.out = {1, dim_out};
  e.blocks.push_back(std::move(m));
  validate_device(e);
  return e;
}

Device make_instrument(int dim_in, int dim_out, std::vector<Matrix> blocks) {
  Device e;
  e.in = {1, dim_in};
  e.out = {static_cast<int>(blocks.size()), dim_out};
  e.blocks = std::move(blocks);
  validate_device(e);
  return e;
}

Device measurement_from_povm(const std::vector<Matrix>& povm) {
  if (povm.empty()) throw std::invalid_argument("povm: empty");
  const int d = static_cast<int>(povm[0].rows());
  Device e;
  e.in = {1, d};
  e.out = {static_cast<int>(povm.size()), 1};
  for (const auto& m : povm) e.blocks.push_back(m.transpose());
  validate_device(e);
  return e;
}

Device identity_channel(int d) {
  const Vector omega = identity_vec(d);
  return make_choi(d, d, omega * omega.adjoint());
}

ConjugateBases conjugate_basis(int d) {
  if (d < 2) throw std::invalid_argument("conjugate_basis: need d >= 2");
  ConjugateBases out;
  std::vector<Vector> theta(d), phi(d);
  for (int z = 0; z < d; ++z) {
    theta[z] = Vector::Zero(d);
    theta[z](z) = 1.0;
  }
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int x = 0; x < d; ++x) {
    phi[x] = Vector::Zero(d);
    for (int z = 0; z < d; ++z) {
      const double arg = 2.0 * kPi * x * z / d;
      phi[x](z) = norm * Complex(std::cos(arg), std::sin(arg));
    }
  }
  out.theta = make_basis(std::move(theta), "Z");
  out.phi = make_basis(std::move(phi), "X");
  return out;
}

Device ideal_measurement(const Basis& b, bool as_instrument) {
  Device e;
  e.in = {1, b.dim};
  e.out = {b.dim, as_instrument ? b.dim : 1};
  for (int x = 0; x < b.dim; ++x) {
    const Matrix proj = basis_projector(b, x);
    e.blocks.push_back(as_instrument ? kron(proj, proj.transpose())
                                     : proj.transpose());
  }
  validate_device(e);
  return e;
}

Device ideal_preparation(const Basis& b) {
  Device e;
  e.in = {b.dim, 1};
  e.out = {1, b.dim};
  for (int z = 0; z < b.dim; ++z) e.blocks.push_back(basis_projector(b, z));
  validate_device(e);
  return e;
}

Device pinching(const Basis& b) {
  Matrix c = Matrix::Zero(b.dim * b.dim, b.dim * b.dim);
  for (int z = 0; z < b.dim; ++z) {
    const Matrix proj = basis_projector(b, z);
    c += kron(proj, proj.transpose());
  }
  return make_choi(b.dim, b.dim, c);
}

Device compose(const Device& first, const Device& second) {
  if (first.out.dim != second.in.dim)
    throw std::invalid_argument("compose: inner dimensions do not match");
  const bool broadcast = second.in.letters == 1;
  if (!broadcast && second.in.letters != first.out.letters)
    throw std::invalid_argument("compose: inner alphabets do not match");
  Device r;
  r.in = first.in;
  // The first device's classical record is kept: letters pair up as
  // (first outer, second inner).
  r.out = {first.out.letters * second.out.letters, second.out.dim};
  const int c = second.out.dim, m = first.out.dim, a = first.in.dim;
  const Matrix ic = Matrix::Identity(c, c);
  const Matrix ia = Matrix::Identity(a, a);
  r.blocks.assign(static_cast<size_t>(r.out.letters) * r.in.letters,
                  Matrix::Zero(c * a, c * a));
  for (int y = 0; y < first.out.letters; ++y)
    for (int w = 0; w < second.out.letters; ++w)
      for (int z = 0; z < first.in.letters; ++z) {
        const Matrix lifted_g = kron(second.block(w, broadcast ? 0 : y), ia);
        const Matrix lifted_f =
            kron(ic, partial_transpose(first.block(y, z), {m, a}, {0}));
        r.block(y * second.out.letters + w, z) =
            partial_trace(lifted_g * lifted_f, {c, m, a}, {0, 2});
      }
  return r;
}

Device marginalize(const Device& e, WireKind drop) {
  Device r;
  r.in = e.in;
  if (drop == WireKind::Classical) {
    r.out = {1, e.out.dim};
    for (int z = 0; z < e.in.letters; ++z) {
      Matrix acc = Matrix::Zero(e.block_dim(), e.block_dim());
      for (int y = 0; y < e.out.letters; ++y) acc += e.block(y, z);
      r.blocks.push_back(acc);
    }
  } else {
    r.out = {e.out.letters, 1};
    for (int y = 0; y < e.out.letters; ++y)
      for (int z = 0; z < e.in.letters; ++z)
        r.blocks.push_back(
            partial_trace(e.block(y, z), {e.out.dim, e.in.dim}, {1}));
  }
  return r;
}

std::vector<Matrix> apply_schrodinger(const Device& e, int z, const Matrix& rho) {
  if (rho.rows() != e.in.dim || rho.cols() != e.in.dim)
    throw std::invalid_argument("apply: state dimension mismatch");
  const Matrix lift = kron(Matrix::Identity(e.out.dim, e.out.dim), rho.transpose());
  std::vector<Matrix> out;
  out.reserve(e.out.letters);
  for (int y = 0; y < e.out.letters; ++y)
    out.push_back(partial_trace(e.block(y, z) * lift, {e.out.dim, e.in.dim}, {0}));
  return out;
}

StinespringResult stinespring(const Device& e) {
  if (e.in.letters != 1 || e.out.letters != 1)
    throw std::invalid_argument("stinespring: quantum->quantum devices only");
  const int da = e.in.dim, db = e.out.dim;
  const EigResult eig = hermitian_eig(e.blocks[0]);
  std::vector<std::pair<double, int>> kept;  // descending eigenvalue order
  for (int k = eig.values.size() - 1; k >= 0; --k) {
    const double lam = eig.values(k);
    if (lam < -tol().choi_clip) {
      std::ostringstream msg;
      msg << "stinespring: Choi eigenvalue " << lam << " below -" << tol().choi_clip;
      throw std::invalid_argument(msg.str());
    }
    if (lam > tol().choi_clip) kept.push_back({lam, k});
  }
  const int ne = static_cast<int>(kept.size());
  Matrix v = Matrix::Zero(static_cast<Eigen::Index>(db) * ne, da);
  for (int idx = 0; idx < ne; ++idx) {
    const double w = std::sqrt(kept[idx].first);
    const auto& col = eig.vectors.col(kept[idx].second);
    for (int b = 0; b < db; ++b)
      for (int a = 0; a < da; ++a)
        v(static_cast<Eigen::Index>(b) * ne + idx, a) += w * col(b * da + a);
  }
  StinespringResult out;
  out.isometry = {v, db, ne};
  if ((v.adjoint() * v - Matrix::Identity(da, da)).cwiseAbs().maxCoeff() >
      tol().isometry)
    throw std::invalid_argument("stinespring: dilation is not an isometry");

  // Complement: keep the environment, trace out B.
  Matrix comp = Matrix::Zero(static_cast<Eigen::Index>(ne) * da, ne * da);
  for (int b = 0; b < db; ++b) {
    Matrix l(ne, da);
    for (int k = 0; k < ne; ++k)
      for (int a = 0; a < da; ++a) l(k, a) = v(static_cast<Eigen::Index>(b) * ne + k, a);
    comp += vec_outer(l);
  }
  out.complement = make_choi(da, ne, comp);
  return out;
}

Device channel_from_isometry(const Matrix& v, int d_out, int d_env) {
  const int da = static_cast<int>(v.cols());
  if (v.rows() != static_cast<Eigen::Index>(d_out) * d_env)
    throw std::invalid_argument("channel_from_isometry: shape mismatch");
  if ((v.adjoint() * v - Matrix::Identity(da, da)).cwiseAbs().maxCoeff() >
      tol().isometry)
    throw std::invalid_argument("channel_from_isometry: not an isometry");
  Matrix c = Matrix::Zero(static_cast<Eigen::Index>(d_out) * da, d_out * da);
  for (int env = 0; env < d_env; ++env) {
    Matrix k(d_out, da);
    for (int b = 0; b < d_out; ++b)
      for (int a = 0; a < da; ++a)
        k(b, a) = v(static_cast<Eigen::Index>(b) * d_env + env, a);
    c += vec_outer(k);
  }
  return make_choi(da, d_out, c);
}

Device mz_apparatus(double theta) {
  if (theta < -1e-12 || theta > kPi / 2 + 1e-12)
    throw std::invalid_argument("mz_apparatus: theta outside [0, pi/2]");
  const ConjugateBases cb = conjugate_basis(2);
  const Vector phi0 = cb.phi.vectors[0], phi1 = cb.phi.vectors[1];
  Vector psi = std::cos(theta / 2) * kron(Matrix(phi0), Matrix(phi0)).col(0) +
               std::sin(theta / 2) * kron(Matrix(phi1), Matrix(phi1)).col(0);
  Matrix sz(2, 2);
  sz << 1, 0, 0, -1;
  const Matrix zz = kron(sz, sz);
  const Matrix b0 = psi * psi.adjoint();
  Device e;
  e.in = {1, 2};
  e.out = {2, 2};
  e.blocks = {b0, zz * b0 * zz};
  validate_device(e);
  return e;
}

JointDecomposition decompose_joint(const Device& e, int n_x, int n_z) {
  if (e.out.dim != 1 || e.in.letters != 1)
    throw std::invalid_argument("decompose_joint: expected a plain measurement");
  if (e.out.letters != n_x * n_z)
    throw std::invalid_argument("decompose_joint: outcome count is not n_x * n_z");
  const int d = e.in.dim;
  const Matrix id = Matrix::Identity(d, d);

  std::vector<std::vector<Matrix>> povm(n_x, std::vector<Matrix>(n_z));
  for (int x = 0; x < n_x; ++x)
    for (int z = 0; z < n_z; ++z)
      povm[x][z] = e.block(x * n_z + z, 0).transpose();

  JointDecomposition out;
  std::vector<Matrix> apparatus_blocks;
  double residual = 0.0;
  for (int x = 0; x < n_x; ++x) {
    Matrix marg = Matrix::Zero(d, d);
    for (int z = 0; z < n_z; ++z) marg += povm[x][z];
    const Matrix root = psd_sqrt(marg);
    const Matrix pinv_root = psd_pinv_sqrt(marg);

    // x-block of the joint dilation, rows stacked over z.
    Matrix vx = Matrix::Zero(static_cast<Eigen::Index>(n_z) * d, d);
    for (int z = 0; z < n_z; ++z)
      vx.block(static_cast<Eigen::Index>(z) * d, 0, d, d) = psd_sqrt(povm[x][z]);
    // Connecting partial isometry: the polar factor of vx, since
    // vx^dag vx = marg exactly.
    const Matrix ux = vx * pinv_root;

    std::vector<Matrix> cond(n_z);
    Matrix defect = id - ux.adjoint() * ux;
    for (int z = 0; z < n_z; ++z) {
      const Matrix wz = ux.block(static_cast<Eigen::Index>(z) * d, 0, d, d);
      cond[z] = wz.adjoint() * wz;
      if (z == 0) cond[z] += defect;
      cond[z] = 0.5 * (cond[z] + cond[z].adjoint()).eval();
    }
    out.conditional.push_back(measurement_from_povm(cond));
    apparatus_blocks.push_back(vec_outer(root));

    for (int z = 0; z < n_z; ++z) {
      const Matrix recomposed = root * cond[z] * root;
      residual += 0.5 * schatten_norm(recomposed - povm[x][z], Schatten::Operator);
    }
  }
  if (residual > tol().decompose_residual) {
    std::ostringstream msg;
    msg << "decompose_joint: recomposition residual " << residual
        << " exceeds " << tol().decompose_residual
        << " (rank-deficient marginal beyond tolerance)";
    throw std::runtime_error(msg.str());
  }
  out.apparatus = make_instrument(d, d, std::move(apparatus_blocks));
  return out;
}

Device random_instrument(int d, int n_outcomes, std::uint64_t seed) {
  if (d < 1 || n_outcomes < 1)
    throw std::invalid_argument("random_instrument: need d, n >= 1");
  Rng rng(seed);
  const Matrix v = haar_isometry(static_cast<int>(d) * d * n_outcomes, d, rng);
  std::vector<Matrix> blocks(n_outcomes,
                             Matrix::Zero(static_cast<Eigen::Index>(d) * d, d * d));
  for (int y = 0; y < n_outcomes; ++y) {
    for (int env = 0; env < d; ++env) {
      Matrix k(d, d);
      for (int b = 0; b < d; ++b)
        for (int a = 0; a < d; ++a)
          k(b, a) = v((static_cast<Eigen::Index>(b) * d + env) * n_outcomes + y, a);
      blocks[y] += vec_outer(k);
    }
  }
  return make_instrument(d, d, std::move(blocks));
}

}  // namespace uncert
