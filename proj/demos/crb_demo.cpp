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
//
// Monte-Carlo check that the maximum-likelihood estimator of the dephasing
// strength attains the Cramer-Rao bound 1/(mu F) when the readout saturates
// the quantum Fisher information.

#include <cstdio>

#include <decometry/decometry.hpp>

int main() {
  using namespace decometry;

  const DensityMatrix plus = maximally_coherent(2);
  const double p_true = 0.5;
  const int trials = 200;

  std::printf("%8s %14s %14s %8s\n", "mu", "variance", "CRB", "ratio");
  for (int mu : {2500, 5000, 10000, 20000}) {
    const EstimationRun run =
        simulate_estimation(plus, Matrix::Identity(2, 2), p_true, mu, trials,
                            plus_minus_povm(), 42);
    const double bound = crb_bound(qfi_dephasing(plus, p_true).value, mu);
    std::printf("%8d %14.6e %14.6e %8.3f\n", mu, run.variance, bound,
                run.variance / bound);
  }
  return 0;
}
