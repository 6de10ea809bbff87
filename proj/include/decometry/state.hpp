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

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

namespace decometry {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Rng = std::mt19937_64;

// Validation tolerances shared across the library.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr int kMaxDim = 64;

namespace detail {

inline Matrix hermitize(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

inline bool is_hermitian(const Matrix& m, double tol = kHermitianTol) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

inline double min_eigenvalue(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(hermitian),
                                           Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

// splitmix64 step, used to derive independent per-index substream seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline Complex gaussian_complex(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

inline Matrix ginibre(int rows, int cols, Rng& rng) {
  Matrix g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = gaussian_complex(rng);
  return g;
}

}  // namespace detail

inline bool is_unitary(const Matrix& u, double tol = kUnitaryTol) {
  if (u.rows() != u.cols()) return false;
  const Matrix d = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
  return d.norm() <= tol;
}

/// A d x d complex Hermitian, positive-semidefinite, unit-trace state.
/// The constructor validates all three invariants and throws
/// std::invalid_argument on violation; instances are immutable values.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() < 1)
      throw std::invalid_argument("DensityMatrix: matrix must be square");
    if (mat_.rows() > kMaxDim)
      throw std::invalid_argument("DensityMatrix: dimension exceeds " +
                                  std::to_string(kMaxDim));
    if (!detail::is_hermitian(mat_))
      throw std::invalid_argument("DensityMatrix: not Hermitian");
    if (std::abs(mat_.trace().real() - 1.0) > kTraceTol ||
        std::abs(mat_.trace().imag()) > kTraceTol)
      throw std::invalid_argument("DensityMatrix: trace is not 1");
    if (detail::min_eigenvalue(mat_) < -kPsdTol)
      throw std::invalid_argument("DensityMatrix: not positive semidefinite");
  }

  /// Projector onto the given ket; the ket is normalized first.
  static DensityMatrix pure(const Vector& psi) {
    const double n = psi.norm();
    if (n <= 0.0)
      throw std::invalid_argument("DensityMatrix::pure: zero vector");
    const Vector v = psi / n;
    return DensityMatrix(v * v.adjoint());
  }

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Matrix& matrix() const { return mat_; }

 private:
  Matrix mat_;
};

/// Eigenvalues (descending, clamped to >= 0 when within kPsdTol of zero)
/// and matching orthonormal eigenvectors stored as columns.
struct SpectralDecomposition {
  RealVector eigenvalues;
  Matrix eigenvectors;

  Matrix reconstruct() const {
    return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.adjoint();
  }
};

namespace detail {

inline SpectralDecomposition spectral_decomposition_raw(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(m));
  if (es.info() != Eigen::Success)
    throw std::runtime_error("spectral_decomposition: eigensolver failed");
  const int d = static_cast<int>(m.rows());
  SpectralDecomposition out;
  out.eigenvalues.resize(d);
  out.eigenvectors.resize(d, d);
  // Eigen returns ascending order; flip to descending.
  for (int i = 0; i < d; ++i) {
    double lambda = es.eigenvalues()(d - 1 - i);
    if (lambda < 0.0 && lambda >= -kPsdTol) lambda = 0.0;
    out.eigenvalues(i) = lambda;
    out.eigenvectors.col(i) = es.eigenvectors().col(d - 1 - i);
  }
  return out;
}

}  // namespace detail

inline SpectralDecomposition spectral_decomposition(const DensityMatrix& rho) {
  return detail::spectral_decomposition_raw(rho.matrix());
}

namespace detail {

// Principal square root of a PSD matrix; eigenvalues within kPsdTol of
// zero are clamped before the square root.
inline Matrix psd_sqrt(const Matrix& m) {
  SpectralDecomposition sd = spectral_decomposition_raw(m);
  RealVector roots(sd.eigenvalues.size());
  for (int i = 0; i < roots.size(); ++i)
    roots(i) = std::sqrt(std::max(0.0, sd.eigenvalues(i)));
  return sd.eigenvectors * roots.asDiagonal() * sd.eigenvectors.adjoint();
}

// Root fidelity on raw Hermitian PSD matrices.
inline double fidelity_raw(const Matrix& rho, const Matrix& sigma) {
  const Matrix sq = psd_sqrt(rho);
  SpectralDecomposition sd = spectral_decomposition_raw(sq * sigma * sq);
  double f = 0.0;
  for (int i = 0; i < sd.eigenvalues.size(); ++i)
    f += std::sqrt(std::max(0.0, sd.eigenvalues(i)));
  return f;
}

}  // namespace detail

/// Root fidelity Tr sqrt(sqrt(rho) sigma sqrt(rho)) in [0, 1].
inline double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim())
    throw std::invalid_argument("fidelity: dimension mismatch");
  return std::min(1.0, detail::fidelity_raw(rho.matrix(), sigma.matrix()));
}

/// Bloch representation of a qubit, rho = (I + x sx + y sy + z sz) / 2.
struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm2() const { return x * x + y * y + z * z; }
};

inline BlochVector bloch_from_qubit(const DensityMatrix& rho) {
  if (rho.dim() != 2)
    throw std::invalid_argument("bloch_from_qubit: expected a qubit");
  const Matrix& m = rho.matrix();
  BlochVector v;
  v.x = 2.0 * m(0, 1).real();
  v.y = -2.0 * m(0, 1).imag();
  v.z = (m(0, 0) - m(1, 1)).real();
  return v;
}

inline DensityMatrix qubit_from_bloch(const BlochVector& v) {
  if (v.norm2() > 1.0 + 1e-12)
    throw std::invalid_argument("qubit_from_bloch: Bloch vector outside ball");
  Matrix m(2, 2);
  m(0, 0) = 0.5 * (1.0 + v.z);
  m(1, 1) = 0.5 * (1.0 - v.z);
  m(0, 1) = Complex(0.5 * v.x, -0.5 * v.y);
  m(1, 0) = std::conj(m(0, 1));
  return DensityMatrix(m);
}

enum class Subsystem { A, B };

/// State on A (x) B with A-major index convention: |i>_A |j>_B sits at
/// row/column i * dim_b + j.
class BipartiteState {
 public:
  BipartiteState(DensityMatrix state, int dim_a, int dim_b)
      : state_(std::move(state)), dim_a_(dim_a), dim_b_(dim_b) {
    if (dim_a < 1 || dim_b < 1 || dim_a * dim_b != state_.dim())
      throw std::invalid_argument(
          "BipartiteState: dims do not factor the state dimension");
  }

  const DensityMatrix& state() const { return state_; }
  const Matrix& matrix() const { return state_.matrix(); }
  int dim() const { return state_.dim(); }
  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }

 private:
  DensityMatrix state_;
  int dim_a_;
  int dim_b_;
};

inline BipartiteState tensor(const DensityMatrix& rho_a,
                             const DensityMatrix& rho_b) {
  Matrix m = Eigen::kroneckerProduct(rho_a.matrix(), rho_b.matrix());
  return BipartiteState(DensityMatrix(std::move(m)), rho_a.dim(), rho_b.dim());
}

namespace detail {

inline Matrix partial_trace_raw(const Matrix& m, int da, int db,
                                Subsystem keep) {
  if (keep == Subsystem::A) {
    Matrix out = Matrix::Zero(da, da);
    for (int i = 0; i < da; ++i)
      for (int k = 0; k < da; ++k)
        for (int j = 0; j < db; ++j) out(i, k) += m(i * db + j, k * db + j);
    return out;
  }
  Matrix out = Matrix::Zero(db, db);
  for (int j = 0; j < db; ++j)
    for (int l = 0; l < db; ++l)
      for (int i = 0; i < da; ++i) out(j, l) += m(i * db + j, i * db + l);
  return out;
}

}  // namespace detail

inline DensityMatrix partial_trace(const BipartiteState& rho, Subsystem keep) {
  Matrix out = detail::partial_trace_raw(rho.matrix(), rho.dim_a(),
                                         rho.dim_b(), keep);
  return DensityMatrix(detail::hermitize(out));
}

/// |psi> = sum_i e^{i theta_i} / sqrt(d) |i>. Empty phases mean all zero.
inline DensityMatrix maximally_coherent(int d,
                                        const std::vector<double>& phases = {}) {
  if (d < 1 || d > kMaxDim)
    throw std::invalid_argument("maximally_coherent: bad dimension");
  if (!phases.empty() && static_cast<int>(phases.size()) != d)
    throw std::invalid_argument("maximally_coherent: phases size != d");
  Vector psi(d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) {
    const double th = phases.empty() ? 0.0 : phases[i];
    psi(i) = std::polar(amp, th);
  }
  return DensityMatrix::pure(psi);
}

/// |psi_max> = sum_i |i>_A |i>_B / sqrt(d); both marginals are I/d.
inline BipartiteState maximally_entangled(int d) {
  if (d < 1 || d * d > kMaxDim)
    throw std::invalid_argument("maximally_entangled: bad dimension");
  Vector psi = Vector::Zero(d * d);
  for (int i = 0; i < d; ++i) psi(i * d + i) = 1.0;
  return BipartiteState(DensityMatrix::pure(psi), d, d);
}

/// Classical-quantum state sum_i p_i |psi_i><psi_i| (x) rho_{B|i}, with the
/// |psi_i> given by the columns of basis_a. Zero-discord fixture.
inline BipartiteState cq_state(const std::vector<double>& probs,
                               const Matrix& basis_a,
                               const std::vector<DensityMatrix>& conditionals) {
  const int da = static_cast<int>(probs.size());
  if (da < 1 || basis_a.rows() != da || basis_a.cols() != da)
    throw std::invalid_argument("cq_state: basis size mismatch");
  if (!is_unitary(basis_a))
    throw std::invalid_argument("cq_state: basis_a is not unitary");
  if (static_cast<int>(conditionals.size()) != da)
    throw std::invalid_argument("cq_state: need one conditional per prob");
  double sum = 0.0;
  for (double p : probs) {
    if (p < 0.0) throw std::invalid_argument("cq_state: negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("cq_state: probabilities must sum to 1");
  const int db = conditionals.front().dim();
  Matrix out = Matrix::Zero(da * db, da * db);
  for (int i = 0; i < da; ++i) {
    if (conditionals[i].dim() != db)
      throw std::invalid_argument("cq_state: conditional dims differ");
    const Vector psi = basis_a.col(i);
    out += probs[i] * Eigen::kroneckerProduct(Matrix(psi * psi.adjoint()),
                                              conditionals[i].matrix());
  }
  return BipartiteState(DensityMatrix(detail::hermitize(out) / sum), da, db);
}

// ---------------------------------------------------------------------------
// Seeded random ensembles. Each function builds its own engine from the seed,
// so a repeated call with the same arguments is bitwise identical.
// ---------------------------------------------------------------------------

inline Matrix random_unitary(int d, Rng& rng) {
  if (d < 1 || d > kMaxDim)
    throw std::invalid_argument("random_unitary: bad dimension");
  const Matrix g = detail::ginibre(d, d, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity of QR so the distribution is Haar.
  for (int i = 0; i < d; ++i) {
    const Complex rii = r(i, i);
    const double a = std::abs(rii);
    q.col(i) *= (a > 0.0) ? rii / a : Complex(1.0, 0.0);
  }
  return q;
}

inline Matrix random_unitary(int d, std::uint64_t seed) {
  Rng rng(seed);
  return random_unitary(d, rng);
}

inline DensityMatrix random_pure(int d, Rng& rng) {
  if (d < 1 || d > kMaxDim)
    throw std::invalid_argument("random_pure: bad dimension");
  Vector psi(d);
  for (int i = 0; i < d; ++i) psi(i) = detail::gaussian_complex(rng);
  return DensityMatrix::pure(psi);
}

inline DensityMatrix random_pure(int d, std::uint64_t seed) {
  Rng rng(seed);
  return random_pure(d, rng);
}

/// Wishart construction G G^dag / Tr(G G^dag) with G a d x rank Ginibre
/// matrix; the result has rank min(d, rank) almost surely.
inline DensityMatrix random_density(int d, int rank, Rng& rng) {
  if (d < 1 || d > kMaxDim)
    throw std::invalid_argument("random_density: bad dimension");
  if (rank < 1 || rank > d)
    throw std::invalid_argument("random_density: rank out of range");
  const Matrix g = detail::ginibre(d, rank, rng);
  Matrix m = g * g.adjoint();
  m = detail::hermitize(m) / m.trace().real();
  return DensityMatrix(std::move(m));
}

inline DensityMatrix random_density(int d, int rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(d, rank, rng);
}

}  // namespace decometry
