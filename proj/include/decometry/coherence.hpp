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

#include <limits>
#include <map>
#include <string>

#include "decometry/channels.hpp"
#include "decometry/state.hpp"

namespace decometry {

inline constexpr double kRankTol = 1e-10;

inline double infinity() { return std::numeric_limits<double>::infinity(); }

/// Extended-real measure value. A finite value comes with the number of
/// (i,j) pairs excluded by the rank cutoff; +infinity signals a genuine
/// divergence (an excluded pair with a nonzero numerator, the rank-change
/// situation that makes estimator variance collapse).
struct MeasureResult {
  double value = 0.0;
  int dropped_terms = 0;
  std::map<std::string, double> diagnostics;

  bool divergent() const { return std::isinf(value); }
};

namespace detail {

// QFI of the affine family sigma_p = (1-p) rho + p dephased, evaluated at p.
// This is the spectral sum 2 sum_ij |<psi_i| (dephased - rho) |psi_j>|^2 /
// (lambda_i + lambda_j) over pairs with lambda_i + lambda_j > rank_tol,
// where {lambda_i, psi_i} diagonalize sigma_p. Divergence is reported when
// an excluded pair carries a numerator above rank_tol.
inline MeasureResult qfi_affine_family(const Matrix& rho,
                                       const Matrix& dephased, double p,
                                       double rank_tol = kRankTol) {
  const Matrix sigma_p = (1.0 - p) * rho + p * dephased;
  const SpectralDecomposition sd = spectral_decomposition_raw(sigma_p);
  const int d = static_cast<int>(rho.rows());
  // Derivative of the family, constant in p, rotated into the eigenbasis.
  const Matrix deriv =
      sd.eigenvectors.adjoint() * (dephased - rho) * sd.eigenvectors;

  MeasureResult out;
  double sum = 0.0;
  int dropped = 0;
  bool divergent = false;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const double denom = sd.eigenvalues(i) + sd.eigenvalues(j);
      const double num = std::norm(deriv(i, j));
      if (denom > rank_tol) {
        sum += 2.0 * num / denom;
      } else {
        ++dropped;
        if (num > rank_tol) divergent = true;
      }
    }
  }
  out.value = divergent ? infinity() : sum;
  out.dropped_terms = dropped;
  out.diagnostics["min_eigenvalue"] = sd.eigenvalues.minCoeff();
  return out;
}

}  // namespace detail

/// C_p(rho) with respect to the basis of ch: the QFI of the dephasing family
/// Phi^{p,U}(rho) at strength p = ch.p(). A general basis U is handled by
/// conjugation, Phi^{p,U}(rho) = U Phi^p(U^dag rho U) U^dag, so the value
/// equals qfi_dephasing(U^dag rho U, Phi^{p,I}).
inline MeasureResult qfi_dephasing(const DensityMatrix& rho,
                                   const DephasingChannel& ch,
                                   double rank_tol = kRankTol) {
  if (ch.dim() != rho.dim())
    throw std::invalid_argument("qfi_dephasing: dimension mismatch");
  const Matrix rotated = ch.basis().adjoint() * rho.matrix() * ch.basis();
  return detail::qfi_affine_family(rotated,
                                   detail::dephase_diagonal(rotated),
                                   ch.p(), rank_tol);
}

/// Convenience overload in the computational basis.
inline MeasureResult qfi_dephasing(const DensityMatrix& rho, double p,
                                   double rank_tol = kRankTol) {
  return qfi_dephasing(rho, DephasingChannel::computational(p, rho.dim()),
                       rank_tol);
}

/// Closed form for a qubit in the computational basis,
///   C_p(rho) = (x^2 + y^2) / (1 - (1-p)^2 (x^2 + y^2) / (1 - z^2)).
/// Returns 0 for incoherent states (x = y = 0, including the poles) and
/// +infinity when the denominator vanishes, which happens only at p = 0
/// for coherent pure states.
inline double coherence_qubit_closed_form(const BlochVector& v, double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("coherence_qubit_closed_form: bad p");
  if (v.norm2() > 1.0 + 1e-12)
    throw std::invalid_argument(
        "coherence_qubit_closed_form: Bloch vector outside ball");
  const double r2 = v.x * v.x + v.y * v.y;
  if (r2 == 0.0) return 0.0;
  const double z2 = v.z * v.z;
  if (z2 >= 1.0) return 0.0;  // pole states carry no coherence
  const double denom = 1.0 - (1.0 - p) * (1.0 - p) * r2 / (1.0 - z2);
  if (denom <= 1e-14) return infinity();
  return r2 / denom;
}

/// Largest attainable C_p in dimension d, reached by maximally coherent
/// states: (d-1) / (p [d - (d-1) p]); +infinity at p = 0.
inline double max_coherence(int d, double p) {
  if (d < 2) throw std::invalid_argument("max_coherence: d must be >= 2");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("max_coherence: bad p");
  if (p == 0.0) return infinity();
  return (d - 1.0) / (p * (d - (d - 1.0) * p));
}

/// Whether C_0(rho) is finite: true iff supp Delta_U(rho) = supp rho.
/// Ranks are compared with eigenvalue threshold tol, and the support
/// inclusion is verified through the projector test
/// ||(I - P_rho) Delta(rho) (I - P_rho)|| <= tol.
inline bool c0_is_finite(const DensityMatrix& rho, const Matrix& u,
                         double tol = 1e-8) {
  if (u.rows() != rho.dim() || !is_unitary(u))
    throw std::invalid_argument("c0_is_finite: bad basis");
  const Matrix rotated = u.adjoint() * rho.matrix() * u;
  const Matrix dephased = detail::dephase_diagonal(rotated);
  const SpectralDecomposition sd = detail::spectral_decomposition_raw(rotated);
  const int d = rho.dim();
  int rank_rho = 0;
  Matrix projector = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    if (sd.eigenvalues(i) > tol) {
      ++rank_rho;
      projector += sd.eigenvectors.col(i) * sd.eigenvectors.col(i).adjoint();
    }
  }
  int rank_dephased = 0;
  for (int i = 0; i < d; ++i)
    if (dephased(i, i).real() > tol) ++rank_dephased;
  if (rank_dephased != rank_rho) return false;
  const Matrix comp = Matrix::Identity(d, d) - projector;
  return (comp * dephased * comp).norm() <= tol;
}

inline bool c0_is_finite(const DensityMatrix& rho, double tol = 1e-8) {
  return c0_is_finite(rho, Matrix::Identity(rho.dim(), rho.dim()), tol);
}

/// Finite-difference fidelity oracle for the QFI: 8 (1 - Fid(rho_p,
/// rho_{p+eps})) / eps^2 with root fidelity, using a central difference
/// where the step fits inside [0,1]. Independent of the spectral-sum path;
/// undefined at divergence points.
inline double qfi_fd_oracle(const DensityMatrix& rho,
                            const DephasingChannel& ch, double eps = 1e-4) {
  if (!(eps > 0.0)) throw std::invalid_argument("qfi_fd_oracle: bad step");
  const double p = ch.p();
  if (p < 0.0 || p > 1.0 || p + eps > 1.0)
    throw std::invalid_argument("qfi_fd_oracle: p + eps outside [0,1]");
  // The family only diverges at p = 0, when dephasing enlarges the support;
  // the support test keeps this check independent of the spectral sum.
  if (p == 0.0 && !c0_is_finite(rho, ch.basis()))
    throw std::domain_error("qfi_fd_oracle: divergence point (rank change)");
  const Matrix rotated = ch.basis().adjoint() * rho.matrix() * ch.basis();
  const Matrix dephased = detail::dephase_diagonal(rotated);
  const auto family = [&](double q) -> Matrix {
    return (1.0 - q) * rotated + q * dephased;
  };
  double lo = p;
  double hi = p + eps;
  if (p - eps >= 0.0 && p + eps <= 1.0) {  // central difference
    lo = p - eps;
    hi = p + eps;
  }
  const double fid = detail::fidelity_raw(family(lo), family(hi));
  const double step = hi - lo;
  return 8.0 * (1.0 - fid) / (step * step);
}

/// NMR-style dephasing strength p = 1 - exp(-t / T2).
inline double p_from_time(double t, double t2) {
  if (t < 0.0) throw std::invalid_argument("p_from_time: negative time");
  if (!(t2 > 0.0)) throw std::invalid_argument("p_from_time: T2 must be > 0");
  return 1.0 - std::exp(-t / t2);
}

/// Cramer-Rao bound on estimator variance from mu copies: 1 / (mu F).
inline double crb_bound(double fisher, int mu) {
  if (mu < 1) throw std::invalid_argument("crb_bound: mu must be >= 1");
  if (!(fisher > 0.0)) throw std::invalid_argument("crb_bound: F must be > 0");
  if (std::isinf(fisher)) return 0.0;
  return 1.0 / (static_cast<double>(mu) * fisher);
}

}  // namespace decometry
