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

#include <catch2/catch_amalgamated.hpp>

#include <decometry/coherence.hpp>
#include <decometry/verify.hpp>

using namespace decometry;

TEST_CASE("qfi_dephasing basics") {
  SECTION("incoherent states have zero sensitivity at every p") {
    Matrix diag = Matrix::Zero(3, 3);
    diag(0, 0) = 0.6;
    diag(1, 1) = 0.4;  // rank deficient on purpose
    const DensityMatrix rho(diag);
    for (double p : {0.0, 0.2, 0.5, 1.0}) {
      const MeasureResult r = qfi_dephasing(rho, p);
      CHECK_FALSE(r.divergent());
      CHECK(r.value <= 1e-12);
    }
    // The kernel pair is excluded but carries a vanishing numerator.
    CHECK(qfi_dephasing(rho, 0.5).dropped_terms > 0);
  }
  SECTION("pure uniform superposition at p = 1/2") {
    const MeasureResult r = qfi_dephasing(maximally_coherent(2), 0.5);
    CHECK(r.value == Catch::Approx(4.0 / 3.0).margin(1e-12));
  }
  SECTION("maximally coherent qutrit at p = 1/2") {
    const MeasureResult r = qfi_dephasing(maximally_coherent(3), 0.5);
    CHECK(r.value == Catch::Approx(2.0).margin(1e-12));
  }
  SECTION("coherent pure states diverge at p = 0") {
    const MeasureResult r = qfi_dephasing(maximally_coherent(2), 0.0);
    CHECK(r.divergent());
    CHECK(std::isinf(r.value));
  }
  SECTION("input validation") {
    CHECK_THROWS_AS(
        qfi_dephasing(maximally_coherent(2),
                      DephasingChannel(0.5, Matrix::Identity(3, 3))),
        std::invalid_argument);
  }
}

TEST_CASE("qubit closed form") {
  SECTION("pure state on the equator at p = 1/2") {
    CHECK(coherence_qubit_closed_form({1.0, 0.0, 0.0}, 0.5) ==
          Catch::Approx(4.0 / 3.0).margin(1e-14));
  }
  SECTION("p = 1 reduces to R^2 independently of z") {
    for (double z : {0.0, 0.3, 0.7}) {
      CHECK(coherence_qubit_closed_form({0.6, 0.0, z}, 1.0) ==
            Catch::Approx(0.36).margin(1e-14));
    }
    // R^2 = 4 |<0|rho|1>|^2 for the matching density matrix.
    const DensityMatrix rho = qubit_from_bloch({0.6, 0.0, 0.3});
    CHECK(4.0 * std::norm(rho.matrix()(0, 1)) ==
          Catch::Approx(0.36).margin(1e-14));
  }
  SECTION("mixed-state value") {
    const double expected = 0.25 / (1.0 - 0.49 * 0.25 / 0.91);
    CHECK(coherence_qubit_closed_form({0.5, 0.0, 0.3}, 0.3) ==
          Catch::Approx(expected).margin(1e-14));
    CHECK(expected == Catch::Approx(0.288889).margin(1e-6));
  }
  SECTION("poles and divergences") {
    CHECK(coherence_qubit_closed_form({0.0, 0.0, 1.0}, 0.5) == 0.0);
    CHECK(coherence_qubit_closed_form({0.0, 0.0, 0.2}, 0.0) == 0.0);
    CHECK(std::isinf(coherence_qubit_closed_form({1.0, 0.0, 0.0}, 0.0)));
  }
  SECTION("agreement with the spectral sum") {
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
      const DensityMatrix rho =
          random_density(2, 1 + static_cast<int>(rng() % 2), rng);
      for (double p : {0.1, 0.4, 0.8}) {
        const double closed =
            coherence_qubit_closed_form(bloch_from_qubit(rho), p);
        CHECK(std::abs(qfi_dephasing(rho, p).value - closed) <= 1e-8);
      }
    }
  }
}

TEST_CASE("max_coherence") {
  CHECK(max_coherence(2, 0.5) == Catch::Approx(4.0 / 3.0).margin(1e-14));
  CHECK(max_coherence(3, 0.5) == Catch::Approx(2.0).margin(1e-14));
  CHECK(max_coherence(2, 1.0) == Catch::Approx(1.0).margin(1e-14));
  CHECK(std::isinf(max_coherence(4, 0.0)));
  CHECK_THROWS_AS(max_coherence(1, 0.5), std::invalid_argument);
}

TEST_CASE("c0_is_finite") {
  Rng rng(11);
  SECTION("full-rank states are typical and finite") {
    for (int trial = 0; trial < 20; ++trial) {
      const int d = 2 + static_cast<int>(rng() % 4);
      CHECK(c0_is_finite(random_density(d, d, rng)));
    }
  }
  SECTION("coherent pure states diverge") {
    for (int trial = 0; trial < 20; ++trial) {
      const int d = 2 + static_cast<int>(rng() % 4);
      CHECK_FALSE(c0_is_finite(random_pure(d, rng)));
    }
  }
  SECTION("diagonal states of any rank are finite") {
    Matrix diag = Matrix::Zero(4, 4);
    diag(0, 0) = 0.5;
    diag(2, 2) = 0.5;
    CHECK(c0_is_finite(DensityMatrix(diag)));
  }
  SECTION("agrees with the p = 0 divergence flag") {
    for (int trial = 0; trial < 40; ++trial) {
      const int d = 2 + static_cast<int>(rng() % 4);
      const int rank = 1 + static_cast<int>(rng() % d);
      const DensityMatrix rho = random_density(d, rank, rng);
      CHECK(c0_is_finite(rho) == !qfi_dephasing(rho, 0.0).divergent());
    }
  }
}

TEST_CASE("finite-difference oracle") {
  SECTION("matches the closed form on the pinned mixed state") {
    const DensityMatrix rho = qubit_from_bloch({0.5, 0.0, 0.3});
    const double expected = 0.25 / (1.0 - 0.49 * 0.25 / 0.91);
    const double fd =
        qfi_fd_oracle(rho, DephasingChannel::computational(0.3, 2));
    CHECK(std::abs(fd - expected) <= 1e-3);
  }
  SECTION("vanishes on incoherent states") {
    Matrix diag = Matrix::Zero(2, 2);
    diag(0, 0) = 0.7;
    diag(1, 1) = 0.3;
    const double fd = qfi_fd_oracle(DensityMatrix(diag),
                                    DephasingChannel::computational(0.4, 2));
    CHECK(std::abs(fd) <= 1e-9);
  }
  SECTION("relative agreement on random full-rank states") {
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
      const int d = 2 + static_cast<int>(rng() % 3);
      const DensityMatrix rho = random_density(d, d, rng);
      const double p = 0.2 + 0.6 * (trial % 5) / 4.0;
      const DephasingChannel ch = DephasingChannel::computational(p, d);
      const double spectral = qfi_dephasing(rho, ch).value;
      const double fd = qfi_fd_oracle(rho, ch);
      CHECK(std::abs(fd - spectral) <= 1e-3 * std::max(1e-6, spectral));
    }
  }
  SECTION("divergence points are flagged") {
    CHECK_THROWS_AS(
        qfi_fd_oracle(maximally_coherent(2),
                      DephasingChannel::computational(0.0, 2)),
        std::domain_error);
    // Full dephasing keeps the support, so p = 0 is fine for diagonal input.
    Matrix diag = Matrix::Zero(2, 2);
    diag(0, 0) = 0.7;
    diag(1, 1) = 0.3;
    CHECK_NOTHROW(qfi_fd_oracle(DensityMatrix(diag),
                                DephasingChannel::computational(0.0, 2)));
  }
  SECTION("a dephased state measured as a fresh probe matches the formula") {
    const DensityMatrix rho = apply_dephasing(
        maximally_coherent(2), DephasingChannel::computational(0.2, 2));
    const DephasingChannel at(0.5, Matrix::Identity(2, 2));
    CHECK(std::abs(qfi_fd_oracle(rho, at) - qfi_dephasing(rho, at).value) <=
          1e-3 * qfi_dephasing(rho, at).value);
  }
}

TEST_CASE("p_from_time") {
  CHECK(p_from_time(0.0, 2.0) == 0.0);
  CHECK(p_from_time(200.0, 2.0) == Catch::Approx(1.0).margin(1e-10));
  CHECK(p_from_time(2.0 * std::log(2.0), 2.0) ==
        Catch::Approx(0.5).margin(1e-14));
  CHECK_THROWS_AS(p_from_time(-1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(p_from_time(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("crb_bound") {
  CHECK(crb_bound(4.0 / 3.0, 1) == Catch::Approx(0.75).margin(1e-14));
  CHECK(crb_bound(1.0, 100) == Catch::Approx(0.01).margin(1e-14));
  CHECK(crb_bound(infinity(), 10) == 0.0);
  CHECK_THROWS_AS(crb_bound(0.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(crb_bound(1.0, 0), std::invalid_argument);
}

TEST_CASE("coherence measure properties, small battery") {
  // Full-scale runs live in the acceptance suite; these keep the unit tests
  // honest at lower sample counts.
  for (const PropertyReport& r : verify_coherence(40, 2026)) {
    INFO(r.name << ": " << r.violations << "/" << r.samples
                << " violations, worst slack " << r.worst_slack);
    CHECK(r.passed());
  }
}
