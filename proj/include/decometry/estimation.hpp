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

#include <vector>

#include "decometry/coherence.hpp"

namespace decometry {

/// Monte-Carlo study of p-estimation from POVM statistics on Phi^{p,U}(rho).
/// Outcome probabilities are affine in p, so the per-trial log-likelihood is
/// concave and the MLE is found by golden-section search. An uninformative
/// run (probabilities independent of p, e.g. incoherent rho) is flagged and
/// carries no estimates.
struct EstimationRun {
  double p_true = 0.0;
  int mu = 0;      // copies per trial
  int trials = 0;
  std::vector<Matrix> povm;
  std::vector<double> estimates;
  double variance = 0.0;
  bool informative = true;

  double mean() const {
    if (estimates.empty()) return 0.0;
    double s = 0.0;
    for (double e : estimates) s += e;
    return s / static_cast<double>(estimates.size());
  }
};

namespace detail {

// Golden-section maximization of a concave function on [lo, hi].
inline double golden_section_max(const std::function<double(double)>& f,
                                 double lo, double hi, double tol) {
  constexpr double inv_phi = 0.6180339887498949;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

inline void validate_povm(const std::vector<Matrix>& povm, int dim) {
  if (povm.empty()) throw std::invalid_argument("povm: empty");
  Matrix sum = Matrix::Zero(dim, dim);
  for (const Matrix& m : povm) {
    if (m.rows() != dim || m.cols() != dim)
      throw std::invalid_argument("povm: effect dimension mismatch");
    if (!detail::is_hermitian(m, 1e-10) || detail::min_eigenvalue(m) < -kPsdTol)
      throw std::invalid_argument("povm: effect not PSD");
    sum += m;
  }
  if ((sum - Matrix::Identity(dim, dim)).norm() > kUnitaryTol)
    throw std::invalid_argument("povm: effects do not sum to the identity");
}

inline EstimationRun simulate_estimation(const DensityMatrix& rho,
                                         const Matrix& basis, double p_true,
                                         int mu, int trials,
                                         const std::vector<Matrix>& povm,
                                         std::uint64_t seed) {
  if (!(p_true > 0.0 && p_true < 1.0))
    throw std::invalid_argument("simulate_estimation: p_true must be in (0,1)");
  if (mu < 1 || trials < 2)
    throw std::invalid_argument("simulate_estimation: need mu >= 1, trials >= 2");
  if (!is_unitary(basis) || basis.rows() != rho.dim())
    throw std::invalid_argument("simulate_estimation: bad basis");
  validate_povm(povm, rho.dim());

  EstimationRun run;
  run.p_true = p_true;
  run.mu = mu;
  run.trials = trials;
  run.povm = povm;

  // Born probabilities are affine in p: q_i(p) = a_i + b_i p.
  const Matrix dephased =
      detail::dephase_raw(rho.matrix(), basis);
  const int n = static_cast<int>(povm.size());
  std::vector<double> a(n), b(n);
  double slope_scale = 0.0;
  for (int i = 0; i < n; ++i) {
    a[i] = (povm[i] * rho.matrix()).trace().real();
    b[i] = (povm[i] * (dephased - rho.matrix())).trace().real();
    slope_scale = std::max(slope_scale, std::abs(b[i]));
  }
  if (slope_scale <= 1e-12) {
    run.informative = false;  // likelihood flat in p
    return run;
  }

  const auto prob = [&](int i, double p) {
    return std::max(0.0, a[i] + b[i] * p);
  };

  std::vector<double> cumulative(n);
  {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      acc += prob(i, p_true);
      cumulative[i] = acc;
    }
    // Born probabilities sum to 1; guard the final bin against round-off.
    cumulative[n - 1] = std::max(cumulative[n - 1], 1.0);
  }

  run.estimates.reserve(trials);
  std::vector<long> counts(n);
  for (int t = 0; t < trials; ++t) {
    Rng rng(detail::mix_seed(seed, static_cast<std::uint64_t>(t)));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::fill(counts.begin(), counts.end(), 0L);
    for (int s = 0; s < mu; ++s) {
      const double r = unif(rng);
      int i = 0;
      while (i < n - 1 && r > cumulative[i]) ++i;
      ++counts[i];
    }
    const auto log_likelihood = [&](double p) {
      double ll = 0.0;
      for (int i = 0; i < n; ++i) {
        if (counts[i] == 0) continue;
        ll += counts[i] * std::log(std::max(prob(i, p), 1e-300));
      }
      return ll;
    };
    run.estimates.push_back(
        detail::golden_section_max(log_likelihood, 0.0, 1.0, 1e-8));
  }

  const double mean = run.mean();
  double ss = 0.0;
  for (double e : run.estimates) ss += (e - mean) * (e - mean);
  run.variance = ss / static_cast<double>(trials - 1);
  return run;
}

}  // namespace decometry
