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
// Sweeps the dephasing strength for a pure qubit probe and its mixed
// counterpart, printing the sensitivity C_p next to the qubit closed form.

#include <cstdio>

#include <decometry/decometry.hpp>

int main() {
  using namespace decometry;

  const DensityMatrix plus = maximally_coherent(2);
  const DensityMatrix mixed = qubit_from_bloch({0.5, 0.0, 0.3});

  std::printf("%6s %14s %14s %14s\n", "p", "C_p(|+>)", "C_p(mixed)",
              "closed form");
  for (int i = 1; i <= 9; ++i) {
    const double p = 0.1 * i;
    const double pure_value = qfi_dephasing(plus, p).value;
    const double mixed_value = qfi_dephasing(mixed, p).value;
    const double closed =
        coherence_qubit_closed_form(bloch_from_qubit(mixed), p);
    std::printf("%6.2f %14.8f %14.8f %14.8f\n", p, pure_value, mixed_value,
                closed);
  }

  // NMR-style time axis: p = 1 - exp(-t/T2).
  const double t2 = 1.0;
  std::printf("\nNMR map with T2 = %.1f: t = T2 ln 2 gives p = %.4f\n", t2,
              p_from_time(t2 * std::log(2.0), t2));
  return 0;
}
