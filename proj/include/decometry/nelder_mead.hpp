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
#include <vector>

#include <Eigen/Dense>

namespace decometry {

struct NelderMeadOptions {
  int max_iters = 2000;
  double f_tol = 1e-9;
  double initial_step = 0.25;
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Downhill-simplex minimization with the standard reflection/expansion/
/// contraction/shrink coefficients (1, 2, 1/2, 1/2). Terminates when the
/// spread of simplex values drops below f_tol.
inline NelderMeadResult nelder_mead_minimize(
    const std::function<double(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& x0, const NelderMeadOptions& opts = {}) {
  const int n = static_cast<int>(x0.size());
  std::vector<Eigen::VectorXd> xs(n + 1, x0);
  std::vector<double> fs(n + 1);
  for (int i = 0; i < n; ++i) xs[i + 1](i) += opts.initial_step;
  for (int i = 0; i <= n; ++i) fs[i] = f(xs[i]);

  std::vector<int> order(n + 1);
  NelderMeadResult result;
  for (int iter = 0; iter < opts.max_iters; ++iter) {
    result.iterations = iter + 1;
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return fs[a] < fs[b]; });
    const int best = order.front();
    const int worst = order.back();
    const int second_worst = order[n - 1];
    if (fs[worst] - fs[best] <= opts.f_tol) {
      result.converged = true;
      break;
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i <= n; ++i)
      if (i != worst) centroid += xs[i];
    centroid /= n;

    const Eigen::VectorXd reflected = centroid + (centroid - xs[worst]);
    const double f_ref = f(reflected);
    if (f_ref < fs[best]) {
      const Eigen::VectorXd expanded = centroid + 2.0 * (centroid - xs[worst]);
      const double f_exp = f(expanded);
      if (f_exp < f_ref) {
        xs[worst] = expanded;
        fs[worst] = f_exp;
      } else {
        xs[worst] = reflected;
        fs[worst] = f_ref;
      }
      continue;
    }
    if (f_ref < fs[second_worst]) {
      xs[worst] = reflected;
      fs[worst] = f_ref;
      continue;
    }
    const Eigen::VectorXd contracted =
        centroid + 0.5 * ((f_ref < fs[worst] ? reflected : xs[worst]) - centroid);
    const double f_con = f(contracted);
    if (f_con < std::min(f_ref, fs[worst])) {
      xs[worst] = contracted;
      fs[worst] = f_con;
      continue;
    }
    // Shrink toward the best vertex.
    for (int i = 0; i <= n; ++i) {
      if (i == best) continue;
      xs[i] = xs[best] + 0.5 * (xs[i] - xs[best]);
      fs[i] = f(xs[i]);
    }
  }

  int best = 0;
  for (int i = 1; i <= n; ++i)
    if (fs[i] < fs[best]) best = i;
  result.x = xs[best];
  result.value = fs[best];
  return result;
}

}  // namespace decometry
