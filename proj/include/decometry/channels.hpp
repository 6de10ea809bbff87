// Copyright 2026 The Decometry Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <utility>
#include <variant>
#include <vector>

#include "decometry/state.hpp"

namespace decometry {

inline constexpr double kBranchProbTol = 1e-14;

namespace detail {

// Full dephaser in the computational basis: keeps the diagonal only.
inline Matrix dephase_diagonal(const Matrix& m) {
  return m.diagonal().asDiagonal();
}

// Dephaser in the basis {U|i>}: U Delta(U^dag m U) U^dag.
inline Matrix dephase_raw(const Matrix& m, const Matrix& u) {
  return u * dephase_diagonal(u.adjoint() * m * u) * u.adjoint();
}

}  // namespace detail

/// Delta_U(rho): removes all off-diagonal elements in the basis {U|i>}.
inline DensityMatrix dephase(const DensityMatrix& rho, const Matrix& u) {
  if (u.rows() != rho.dim() || u.cols() != rho.dim())
    throw std::invalid_argument("dephase: basis dimension mismatch");
  if (!is_unitary(u))
    throw std::invalid_argument("dephase: basis is not unitary");
  return DensityMatrix(detail::hermitize(detail::dephase_raw(rho.matrix(), u)));
}

/// Dephasing channel Phi^{p,U}(rho) = (1-p) rho + p Delta_U(rho).
class DephasingChannel {
 public:
  DephasingChannel(double p, Matrix basis) : p_(p), basis_(std::move(basis)) {
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument("DephasingChannel: p must lie in [0,1]");
    if (basis_.rows() != basis_.cols() || !is_unitary(basis_))
      throw std::invalid_argument("DephasingChannel: basis is not unitary");
  }

  static DephasingChannel computational(double p, int dim) {
    return DephasingChannel(p, Matrix::Identity(dim, dim));
  }

  double p() const { return p_; }
  const Matrix& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.rows()); }

 private:
  double p_;
  Matrix basis_;
};

inline DensityMatrix apply_dephasing(const DensityMatrix& rho,
                                     const DephasingChannel& ch) {
  if (ch.dim() != rho.dim())
    throw std::invalid_argument("apply_dephasing: dimension mismatch");
  const Matrix out = (1.0 - ch.p()) * rho.matrix() +
                     ch.p() * detail::dephase_raw(rho.matrix(), ch.basis());
  return DensityMatrix(detail::hermitize(out));
}

/// General channel in Kraus form, E(rho) = sum_k K_k rho K_k^dag.
/// Construction checks shape consistency only, so deliberately malformed
/// fixtures can be built and fed to is_cptp; every generator in this library
/// produces trace-preserving channels, and operations with a TP precondition
/// check it themselves.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<Matrix> kraus) : kraus_(std::move(kraus)) {
    if (kraus_.empty())
      throw std::invalid_argument("KrausChannel: empty Kraus list");
    dim_out_ = static_cast<int>(kraus_.front().rows());
    dim_in_ = static_cast<int>(kraus_.front().cols());
    for (const Matrix& k : kraus_) {
      if (k.rows() != dim_out_ || k.cols() != dim_in_)
        throw std::invalid_argument("KrausChannel: inconsistent Kraus shapes");
    }
  }

  static KrausChannel identity(int dim) {
    return KrausChannel({Matrix::Identity(dim, dim)});
  }

  static KrausChannel unitary(const Matrix& u) {
    if (!is_unitary(u))
      throw std::invalid_argument("KrausChannel::unitary: not unitary");
    return KrausChannel({u});
  }

  /// Phase flip (1 - p/2) rho + (p/2) sz rho sz; equals Phi^p on a qubit.
  static KrausChannel phase_flip(double p) {
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument("phase_flip: p must lie in [0,1]");
    Matrix sz = Matrix::Zero(2, 2);
    sz(0, 0) = 1.0;
    sz(1, 1) = -1.0;
    std::vector<Matrix> ops;
    ops.push_back(std::sqrt(1.0 - 0.5 * p) * Matrix::Identity(2, 2));
    ops.push_back(std::sqrt(0.5 * p) * sz);
    return KrausChannel(std::move(ops));
  }

  const std::vector<Matrix>& kraus() const { return kraus_; }
  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }

  bool is_trace_preserving(double tol = kUnitaryTol) const {
    Matrix sum = Matrix::Zero(dim_in_, dim_in_);
    for (const Matrix& k : kraus_) sum += k.adjoint() * k;
    return (sum - Matrix::Identity(dim_in_, dim_in_)).norm() <= tol;
  }

  Matrix apply_raw(const Matrix& m) const {
    Matrix out = Matrix::Zero(dim_out_, dim_out_);
    for (const Matrix& k : kraus_) out += k * m * k.adjoint();
    return out;
  }

 private:
  std::vector<Matrix> kraus_;
  int dim_in_ = 0;
  int dim_out_ = 0;
};

inline DensityMatrix apply_kraus(const DensityMatrix& rho,
                                 const KrausChannel& ch) {
  if (ch.dim_in() != rho.dim())
    throw std::invalid_argument("apply_kraus: dimension mismatch");
  return DensityMatrix(detail::hermitize(ch.apply_raw(rho.matrix())));
}

/// Extends the channel by the identity on the untouched side.
inline BipartiteState apply_local(const BipartiteState& rho,
                                  const KrausChannel& ch, Subsystem side) {
  const int da = rho.dim_a();
  const int db = rho.dim_b();
  const int local = (side == Subsystem::A) ? da : db;
  if (ch.dim_in() != local || ch.dim_out() != local)
    throw std::invalid_argument("apply_local: channel dimension mismatch");
  Matrix out = Matrix::Zero(rho.dim(), rho.dim());
  for (const Matrix& k : ch.kraus()) {
    const Matrix kk = (side == Subsystem::A)
                          ? Matrix(Eigen::kroneckerProduct(
                                k, Matrix::Identity(db, db)))
                          : Matrix(Eigen::kroneckerProduct(
                                Matrix::Identity(da, da), k));
    out += kk * rho.matrix() * kk.adjoint();
  }
  return BipartiteState(DensityMatrix(detail::hermitize(out)), da, db);
}

/// One branch of a selective measurement: outcome probability and the
/// normalized post-measurement state.
struct EnsembleBranch {
  double prob;
  DensityMatrix state;
};

/// Selective application: p_k = Tr(K_k rho K_k^dag), sigma_k normalized.
/// Branches below kBranchProbTol are dropped.
inline std::vector<EnsembleBranch> measure_ensemble(const DensityMatrix& rho,
                                                    const KrausChannel& ch) {
  if (ch.dim_in() != rho.dim())
    throw std::invalid_argument("measure_ensemble: dimension mismatch");
  if (!ch.is_trace_preserving())
    throw std::invalid_argument("measure_ensemble: channel not trace preserving");
  std::vector<EnsembleBranch> out;
  for (const Matrix& k : ch.kraus()) {
    Matrix m = k * rho.matrix() * k.adjoint();
    const double p = m.trace().real();
    if (p <= kBranchProbTol) continue;
    out.push_back({p, DensityMatrix(detail::hermitize(m) / p)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Strictly incoherent operations: K_k = sum_i c_{k,i} |f_k(i)><i| with each
// f_k a permutation. Column normalization sum_k |c_{k,i}|^2 = 1 is exactly
// trace preservation.
// ---------------------------------------------------------------------------

struct SIOSpec {
  std::vector<std::vector<int>> perms;  // perms[k][i] = f_k(i)
  Matrix coeffs;                        // coeffs(k, i) = c_{k,i}

  int num_kraus() const { return static_cast<int>(perms.size()); }
  int dim() const { return static_cast<int>(coeffs.cols()); }

  void validate() const {
    const int nk = num_kraus();
    const int d = dim();
    if (nk < 1 || coeffs.rows() != nk)
      throw std::invalid_argument("SIOSpec: shape mismatch");
    for (const auto& f : perms) {
      if (static_cast<int>(f.size()) != d)
        throw std::invalid_argument("SIOSpec: permutation size mismatch");
      std::vector<int> sorted = f;
      std::sort(sorted.begin(), sorted.end());
      for (int i = 0; i < d; ++i)
        if (sorted[i] != i)
          throw std::invalid_argument("SIOSpec: f_k is not a permutation");
    }
    for (int i = 0; i < d; ++i) {
      if (std::abs(coeffs.col(i).squaredNorm() - 1.0) > kUnitaryTol)
        throw std::invalid_argument("SIOSpec: column not normalized");
    }
  }
};

inline KrausChannel sio_to_kraus(const SIOSpec& s) {
  s.validate();
  const int d = s.dim();
  std::vector<Matrix> ops;
  ops.reserve(s.perms.size());
  for (int k = 0; k < s.num_kraus(); ++k) {
    Matrix op = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) op(s.perms[k][i], i) = s.coeffs(k, i);
    ops.push_back(std::move(op));
  }
  return KrausChannel(std::move(ops));
}

namespace detail {

inline std::vector<int> random_permutation(int d, Rng& rng) {
  std::vector<int> p(d);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Haar vector on the complex (n-1)-sphere.
inline Vector random_sphere(int n, Rng& rng) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = gaussian_complex(rng);
  return v / v.norm();
}

}  // namespace detail

/// Random SIO: permutations sampled uniformly, each coefficient column a
/// Haar vector on the num_kraus-sphere.
inline SIOSpec random_sio(int d, int num_kraus, Rng& rng) {
  if (d < 1 || d > kMaxDim || num_kraus < 1)
    throw std::invalid_argument("random_sio: bad arguments");
  SIOSpec s;
  s.coeffs.resize(num_kraus, d);
  for (int k = 0; k < num_kraus; ++k)
    s.perms.push_back(detail::random_permutation(d, rng));
  for (int i = 0; i < d; ++i) s.coeffs.col(i) = detail::random_sphere(num_kraus, rng);
  return s;
}

inline SIOSpec random_sio(int d, int num_kraus, std::uint64_t seed) {
  Rng rng(seed);
  return random_sio(d, num_kraus, rng);
}

/// Bipartite SIO with Kraus operators K_k = sum_ij c_{k,ij}
/// |a_k(i), b_{k,i}(j)><ij|: a_k permutes A labels and b_{k,i} permutes B
/// labels conditioned on i. Every channel of this family commutes with
/// Delta_A (x) I, hence with Phi^p_A for every p.
inline KrausChannel random_commuting_bipartite_sio(int da, int db,
                                                   int num_kraus, Rng& rng) {
  if (da < 1 || db < 1 || num_kraus < 1)
    throw std::invalid_argument("random_commuting_bipartite_sio: bad arguments");
  if (da * db > kMaxDim)
    throw std::invalid_argument(
        "random_commuting_bipartite_sio: dimension overflow");
  const int d = da * db;
  std::vector<std::vector<int>> maps;  // maps[k][ij] = product label
  for (int k = 0; k < num_kraus; ++k) {
    const std::vector<int> a = detail::random_permutation(da, rng);
    std::vector<int> f(d);
    for (int i = 0; i < da; ++i) {
      const std::vector<int> b = detail::random_permutation(db, rng);
      for (int j = 0; j < db; ++j) f[i * db + j] = a[i] * db + b[j];
    }
    maps.push_back(std::move(f));
  }
  Matrix coeffs(num_kraus, d);
  for (int col = 0; col < d; ++col)
    coeffs.col(col) = detail::random_sphere(num_kraus, rng);
  std::vector<Matrix> ops;
  for (int k = 0; k < num_kraus; ++k) {
    Matrix op = Matrix::Zero(d, d);
    for (int col = 0; col < d; ++col) op(maps[k][col], col) = coeffs(k, col);
    ops.push_back(std::move(op));
  }
  return KrausChannel(std::move(ops));
}

inline KrausChannel random_commuting_bipartite_sio(int da, int db,
                                                   int num_kraus,
                                                   std::uint64_t seed) {
  Rng rng(seed);
  return random_commuting_bipartite_sio(da, db, num_kraus, rng);
}

/// Random CPTP channel with num_kraus Kraus operators: Ginibre blocks G_k
/// whitened by (sum_k G_k^dag G_k)^{-1/2} so that trace preservation is
/// exact.
inline KrausChannel random_channel(int d, int num_kraus, Rng& rng) {
  if (d < 1 || d > kMaxDim || num_kraus < 1)
    throw std::invalid_argument("random_channel: bad arguments");
  std::vector<Matrix> blocks;
  Matrix sum = Matrix::Zero(d, d);
  for (int k = 0; k < num_kraus; ++k) {
    blocks.push_back(detail::ginibre(d, d, rng));
    sum += blocks.back().adjoint() * blocks.back();
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(detail::hermitize(sum));
  RealVector inv_roots(d);
  for (int i = 0; i < d; ++i)
    inv_roots(i) = 1.0 / std::sqrt(es.eigenvalues()(i));
  const Matrix whitener = es.eigenvectors() * inv_roots.asDiagonal() *
                          es.eigenvectors().adjoint();
  for (Matrix& b : blocks) b = b * whitener;
  return KrausChannel(std::move(blocks));
}

inline KrausChannel random_channel(int d, int num_kraus, std::uint64_t seed) {
  Rng rng(seed);
  return random_channel(d, num_kraus, rng);
}

/// CNOT on A (x) B with A the control, |i,j> -> |i, j xor i>; the canonical
/// coherence-to-discord converter.
inline KrausChannel cnot_channel() {
  Matrix u = Matrix::Zero(4, 4);
  u(0, 0) = 1.0;
  u(1, 1) = 1.0;
  u(3, 2) = 1.0;
  u(2, 3) = 1.0;
  return KrausChannel::unitary(u);
}

// ---------------------------------------------------------------------------
// Extendible commutativity-preserving operations: semiclassical channels
// (POVM statistics written into a fixed output basis) or isotropic channels
// t U rho U^dag + (1-t) I/d with t in [0,1].
// ---------------------------------------------------------------------------

struct SemiclassicalSpec {
  std::vector<Matrix> povm;  // PSD effects summing to the identity
  Matrix out_basis;          // columns are the output basis

  void validate() const {
    if (povm.empty()) throw std::invalid_argument("Semiclassical: empty POVM");
    const int d = static_cast<int>(povm.front().rows());
    Matrix sum = Matrix::Zero(d, d);
    for (const Matrix& m : povm) {
      if (m.rows() != d || m.cols() != d || !detail::is_hermitian(m, 1e-10))
        throw std::invalid_argument("Semiclassical: effect not Hermitian");
      if (detail::min_eigenvalue(m) < -kPsdTol)
        throw std::invalid_argument("Semiclassical: effect not PSD");
      sum += m;
    }
    if ((sum - Matrix::Identity(d, d)).norm() > kUnitaryTol)
      throw std::invalid_argument("Semiclassical: POVM does not sum to I");
    if (static_cast<int>(povm.size()) > static_cast<int>(out_basis.cols()) ||
        out_basis.rows() != d || !is_unitary(out_basis))
      throw std::invalid_argument("Semiclassical: bad output basis");
  }
};

struct IsotropicSpec {
  double t = 1.0;
  Matrix unitary;

  void validate() const {
    if (!(t >= 0.0 && t <= 1.0))
      throw std::invalid_argument("Isotropic: t must lie in [0,1]");
    if (!is_unitary(unitary))
      throw std::invalid_argument("Isotropic: U is not unitary");
  }
};

using EcpoSpec = std::variant<SemiclassicalSpec, IsotropicSpec>;

inline KrausChannel ecpo_to_channel(const EcpoSpec& e, int d) {
  if (std::holds_alternative<SemiclassicalSpec>(e)) {
    const auto& s = std::get<SemiclassicalSpec>(e);
    s.validate();
    if (static_cast<int>(s.povm.front().rows()) != d)
      throw std::invalid_argument("ecpo_to_channel: dimension mismatch");
    // E(rho) = sum_i Tr(M_i rho) |b_i><b_i| via Kraus |b_i><v_im| with
    // M_i = sum_m |v_im><v_im|.
    std::vector<Matrix> ops;
    for (std::size_t i = 0; i < s.povm.size(); ++i) {
      const SpectralDecomposition sd =
          detail::spectral_decomposition_raw(s.povm[i]);
      const Vector b = s.out_basis.col(static_cast<int>(i));
      for (int m = 0; m < d; ++m) {
        if (sd.eigenvalues(m) <= kBranchProbTol) continue;
        const Vector v = std::sqrt(sd.eigenvalues(m)) * sd.eigenvectors.col(m);
        ops.push_back(b * v.adjoint());
      }
    }
    return KrausChannel(std::move(ops));
  }
  const auto& iso = std::get<IsotropicSpec>(e);
  iso.validate();
  if (iso.unitary.rows() != d)
    throw std::invalid_argument("ecpo_to_channel: dimension mismatch");
  // t U rho U^dag + (1-t) Tr(rho) I/d; the white-noise part uses the
  // Kraus set {|j><k| / sqrt(d)}.
  std::vector<Matrix> ops;
  if (iso.t > 0.0) ops.push_back(std::sqrt(iso.t) * iso.unitary);
  if (iso.t < 1.0) {
    const double w = std::sqrt((1.0 - iso.t) / d);
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Matrix op = Matrix::Zero(d, d);
        op(j, k) = w;
        ops.push_back(std::move(op));
      }
  }
  return KrausChannel(std::move(ops));
}

/// Full dephasing written as a semiclassical ECPO (projective POVM onto the
/// computational basis, same output basis).
inline EcpoSpec semiclassical_dephasing(int d) {
  SemiclassicalSpec s;
  s.out_basis = Matrix::Identity(d, d);
  for (int i = 0; i < d; ++i) {
    Matrix m = Matrix::Zero(d, d);
    m(i, i) = 1.0;
    s.povm.push_back(std::move(m));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Choi representation and CPTP checks.
// ---------------------------------------------------------------------------

/// Choi matrix sum_jk E(|j><k|) (x) |j><k| (output factor first).
inline Matrix choi_matrix(const KrausChannel& ch) {
  const int din = ch.dim_in();
  const int dout = ch.dim_out();
  Matrix choi = Matrix::Zero(dout * din, dout * din);
  for (int j = 0; j < din; ++j)
    for (int k = 0; k < din; ++k) {
      Matrix ejk = Matrix::Zero(din, din);
      ejk(j, k) = 1.0;
      choi += Eigen::kroneckerProduct(Matrix(ch.apply_raw(ejk)), ejk);
    }
  return choi;
}

/// Choi matrix of an arbitrary linear map given by its action on matrix
/// units; lets non-Kraus maps (possibly not CP) be tested.
inline Matrix choi_from_action(int d,
                               const std::function<Matrix(const Matrix&)>& f) {
  Matrix choi = Matrix::Zero(d * d, d * d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      Matrix ejk = Matrix::Zero(d, d);
      ejk(j, k) = 1.0;
      choi += Eigen::kroneckerProduct(Matrix(f(ejk)), ejk);
    }
  return choi;
}

namespace detail {

// CP: Choi PSD. TP: Tr_out(Choi) = I on the input factor.
inline bool is_cptp_choi(const Matrix& choi, int dout, int din) {
  if (min_eigenvalue(choi) < -kPsdTol) return false;
  const Matrix tr_out = partial_trace_raw(choi, dout, din, Subsystem::B);
  return (tr_out - Matrix::Identity(din, din)).norm() <= kUnitaryTol;
}

}  // namespace detail

inline bool is_cptp(const KrausChannel& ch) {
  if (!ch.is_trace_preserving()) return false;
  return detail::min_eigenvalue(choi_matrix(ch)) >= -kPsdTol;
}

inline bool is_cptp_action(int d,
                           const std::function<Matrix(const Matrix&)>& f) {
  return detail::is_cptp_choi(choi_from_action(d, f), d, d);
}

}  // namespace decometry
