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

#include <string>
#include <vector>

#include "decometry/discord.hpp"
#include "decometry/estimation.hpp"

namespace decometry {

// Randomized property batteries behind the `verify` CLI subcommand. Each
// property is checked on seeded samples; slack is defined so that the
// property demands slack >= 0, with the tolerance already folded in.

struct PropertyReport {
  std::string name;
  int samples = 0;
  int violations = 0;
  double worst_slack = std::numeric_limits<double>::infinity();

  bool passed() const { return violations == 0; }

  void record(double slack) {
    ++samples;
    worst_slack = std::min(worst_slack, slack);
    if (slack < 0.0) ++violations;
  }
};

namespace detail {

inline DensityMatrix random_diagonal_state(int d, Rng& rng) {
  std::uniform_real_distribution<double> unif(0.05, 1.0);
  RealVector probs(d);
  double sum = 0.0;
  for (int i = 0; i < d; ++i) {
    probs(i) = unif(rng);
    sum += probs(i);
  }
  Matrix m = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = probs(i) / sum;
  return DensityMatrix(std::move(m));
}

inline BipartiteState random_cq_state(int da, int db, Rng& rng) {
  std::uniform_real_distribution<double> unif(0.2, 1.0);
  std::vector<double> probs(da);
  double sum = 0.0;
  for (double& p : probs) {
    p = unif(rng);
    sum += p;
  }
  for (double& p : probs) p /= sum;
  std::vector<DensityMatrix> conditionals;
  for (int i = 0; i < da; ++i)
    conditionals.push_back(random_density(db, 1 + static_cast<int>(
        rng() % static_cast<std::uint64_t>(db)), rng));
  return cq_state(probs, random_unitary(da, rng), conditionals);
}

inline double p_grid_value(int index) {
  static constexpr double grid[] = {0.1, 0.3, 0.5, 0.7, 0.9};
  return grid[index % 5];
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Coherence batteries: the measure axioms (faithfulness, monotonicity,
// convexity) fuzzed on random states, plus the module-level properties.
// ---------------------------------------------------------------------------

inline PropertyReport check_c1_faithfulness(int samples, std::uint64_t seed) {
  PropertyReport report{"C1 faithfulness"};
  Rng rng(detail::mix_seed(seed, 1));
  const int incoherent = std::max(1, samples / 4);
  for (int s = 0; s < samples + incoherent; ++s) {
    const int d = 2 + static_cast<int>(rng() % 4);
    // Alternate computational and random dephasing bases.
    const Matrix u =
        (s % 2 == 0) ? Matrix(Matrix::Identity(d, d)) : random_unitary(d, rng);
    const bool force_incoherent = s >= samples;
    const DensityMatrix diag = detail::random_diagonal_state(d, rng);
    const DensityMatrix rho =
        force_incoherent
            ? DensityMatrix(detail::hermitize(u * diag.matrix() * u.adjoint()))
            : random_density(d, 1 + static_cast<int>(rng() % d), rng);
    const double p = detail::p_grid_value(s);
    const double value = qfi_dephasing(rho, DephasingChannel(p, u)).value;
    const double incoherence =
        (detail::dephase_raw(rho.matrix(), u) - rho.matrix()).norm();
    if (incoherence <= 1e-9)
      report.record(1e-12 - value);  // must vanish on incoherent states
    else
      report.record(value - 1e-9);  // must be strictly positive otherwise
  }
  return report;
}

inline PropertyReport check_c2_deterministic(int samples, std::uint64_t seed) {
  PropertyReport report{"C2 SIO monotonicity"};
  Rng rng(detail::mix_seed(seed, 2));
  for (int s = 0; s < samples; ++s) {
    const int d = 2 + static_cast<int>(rng() % 4);
    const DensityMatrix rho =
        random_density(d, 1 + static_cast<int>(rng() % d), rng);
    const KrausChannel e = sio_to_kraus(random_sio(d, d, rng));
    const double p = detail::p_grid_value(s);
    const double before = qfi_dephasing(rho, p).value;
    const double after = qfi_dephasing(apply_kraus(rho, e), p).value;
    report.record(before - after + 1e-8);
  }
  return report;
}

inline PropertyReport check_c2_ensemble(int samples, std::uint64_t seed) {
  PropertyReport report{"C2 ensemble monotonicity"};
  Rng rng(detail::mix_seed(seed, 3));
  for (int s = 0; s < samples; ++s) {
    const int d = 2 + static_cast<int>(rng() % 4);
    const DensityMatrix rho =
        random_density(d, 1 + static_cast<int>(rng() % d), rng);
    const KrausChannel e = sio_to_kraus(random_sio(d, d, rng));
    const double p = detail::p_grid_value(s);
    const double before = qfi_dephasing(rho, p).value;
    double average = 0.0;
    for (const EnsembleBranch& branch : measure_ensemble(rho, e))
      average += branch.prob * qfi_dephasing(branch.state, p).value;
    report.record(before - average + 1e-8);
  }
  return report;
}

inline PropertyReport check_c3_convexity(int samples, std::uint64_t seed) {
  PropertyReport report{"C3 convexity"};
  Rng rng(detail::mix_seed(seed, 4));
  std::uniform_real_distribution<double> unif(0.1, 1.0);
  for (int s = 0; s < samples; ++s) {
    const int d = 2 + static_cast<int>(rng() % 4);
    double weights[3];
    double wsum = 0.0;
    for (double& w : weights) {
      w = unif(rng);
      wsum += w;
    }
    Matrix mix = Matrix::Zero(d, d);
    double average = 0.0;
    const double p = detail::p_grid_value(s);
    for (double w : weights) {
      const DensityMatrix rho =
          random_density(d, 1 + static_cast<int>(rng() % d), rng);
      mix += (w / wsum) * rho.matrix();
      average += (w / wsum) * qfi_dephasing(rho, p).value;
    }
    const double mixed = qfi_dephasing(DensityMatrix(mix), p).value;
    report.record(average - mixed + 1e-8);
  }
  return report;
}

inline PropertyReport check_closed_form_equivalence(int samples,
                                                    std::uint64_t seed) {
  PropertyReport report{"qubit closed-form equivalence"};
  Rng rng(detail::mix_seed(seed, 5));
  for (int s = 0; s < samples; ++s) {
    const DensityMatrix rho = random_density(2, 1 + static_cast<int>(rng() % 2), rng);
    for (int pi = 1; pi <= 9; ++pi) {
      const double p = 0.1 * pi;
      const double spectral = qfi_dephasing(rho, p).value;
      const double closed =
          coherence_qubit_closed_form(bloch_from_qubit(rho), p);
      report.record(1e-8 - std::abs(spectral - closed));
    }
  }
  return report;
}

inline PropertyReport check_extremality(int samples, std::uint64_t seed) {
  PropertyReport report{"pure-state extremality"};
  Rng rng(detail::mix_seed(seed, 6));
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  for (int s = 0; s < samples; ++s) {
    const int d = 2 + static_cast<int>(rng() % 3);
    const double p = detail::p_grid_value(s);
    const double bound = max_coherence(d, p);
    report.record(bound - qfi_dephasing(random_pure(d, rng), p).value + 1e-8);
    // Maximally coherent states reach the bound at arbitrary phases.
    std::vector<double> phases(d);
    for (double& t : phases) t = phase(rng);
    const double at_max =
        qfi_dephasing(maximally_coherent(d, phases), p).value;
    report.record(1e-8 - std::abs(at_max - bound));
  }
  return report;
}

inline PropertyReport check_distillation(int samples, std::uint64_t seed) {
  PropertyReport report{"no pure-state distillation from full rank"};
  Rng rng(detail::mix_seed(seed, 7));
  for (int s = 0; s < samples; ++s) {
    const int d = 2 + static_cast<int>(rng() % 3);
    const DensityMatrix rho = random_density(d, d, rng);
    if (!c0_is_finite(rho)) {
      report.record(-1.0);
      continue;
    }
    const KrausChannel e = sio_to_kraus(random_sio(d, d, rng));
    bool all_finite = true;
    for (const EnsembleBranch& branch : measure_ensemble(rho, e))
      all_finite = all_finite && c0_is_finite(branch.state);
    report.record(all_finite ? 1.0 : -1.0);
  }
  return report;
}

inline PropertyReport check_basis_covariance(int samples, std::uint64_t seed) {
  PropertyReport report{"dephasing-basis covariance"};
  Rng rng(detail::mix_seed(seed, 8));
  for (int s = 0; s < samples; ++s) {
    const int d = 2 + static_cast<int>(rng() % 4);
    const DensityMatrix rho =
        random_density(d, 1 + static_cast<int>(rng() % d), rng);
    const Matrix u = random_unitary(d, rng);
    const double p = detail::p_grid_value(s);
    const double direct = qfi_dephasing(rho, DephasingChannel(p, u)).value;
    const DensityMatrix rotated(
        detail::hermitize(u.adjoint() * rho.matrix() * u));
    const double conjugated = qfi_dephasing(rotated, p).value;
    report.record(1e-10 - std::abs(direct - conjugated));
  }
  return report;
}

inline std::vector<PropertyReport> verify_coherence(int samples,
                                                    std::uint64_t seed) {
  return {check_c1_faithfulness(samples, seed),
          check_c2_deterministic(samples, seed),
          check_c2_ensemble(samples, seed),
          check_c3_convexity(samples, seed),
          check_closed_form_equivalence(std::max(1, samples / 2), seed),
          check_extremality(std::max(1, samples / 2), seed),
          check_distillation(std::max(1, samples / 2), seed),
          check_basis_covariance(std::max(1, samples / 2), seed)};
}

// ---------------------------------------------------------------------------
// Discord batteries: the measure axioms (faithfulness, local monotonicity,
// pure-state extremality) fuzzed on random states, plus module properties.
// ---------------------------------------------------------------------------

inline PropertyReport check_d1_cq(int samples, std::uint64_t seed) {
  PropertyReport report{"D1 zero on CQ states"};
  Rng rng(detail::mix_seed(seed, 11));
  for (int s = 0; s < samples; ++s) {
    const BipartiteState rho = detail::random_cq_state(2, 2, rng);
    OptimizerConfig cfg;
    cfg.seed = detail::mix_seed(seed, 1100 + s);
    const double p = detail::p_grid_value(s);
    report.record(1e-7 - discord(rho, p, cfg).value);
  }
  return report;
}

inline PropertyReport check_d1_non_cq(int samples, std::uint64_t seed) {
  PropertyReport report{"D1 positive on non-CQ states"};
  Rng rng(detail::mix_seed(seed, 12));
  int produced = 0;
  int attempts = 0;
  while (produced < samples && attempts < 20 * samples) {
    ++attempts;
    const BipartiteState rho(random_density(4, 4, rng), 2, 2);
    const double p = detail::p_grid_value(produced);
    // Pre-screen with the grid oracle; skip states too close to CQ.
    if (discord_qubit_a_grid(rho, p).value <= 1e-3) continue;
    OptimizerConfig cfg;
    cfg.seed = detail::mix_seed(seed, 1200 + produced);
    report.record(discord(rho, p, cfg).value - 1e-3);
    ++produced;
  }
  return report;
}

inline PropertyReport check_d2_b_monotonicity(int samples, std::uint64_t seed) {
  PropertyReport report{"D2 monotonicity under channels on B"};
  Rng rng(detail::mix_seed(seed, 13));
  for (int s = 0; s < samples; ++s) {
    const BipartiteState rho(random_density(4, 1 + static_cast<int>(rng() % 4), rng),
                             2, 2);
    const KrausChannel e = random_channel(2, 2, rng);
    const double p = detail::p_grid_value(s);
    OptimizerConfig cfg;
    cfg.seed = detail::mix_seed(seed, 1300 + s);
    const double before = discord(rho, p, cfg).value;
    const double after = discord(apply_local(rho, e, Subsystem::B), p, cfg).value;
    report.record(before - after + 1e-5);
  }
  return report;
}

inline PropertyReport check_d4_isotropic(int samples, std::uint64_t seed) {
  PropertyReport report{"D4 monotonicity under isotropic ECPOs on A"};
  Rng rng(detail::mix_seed(seed, 14));
  static constexpr double t_values[] = {0.0, 0.3, 0.7, 1.0};
  for (int s = 0; s < samples; ++s) {
    const BipartiteState rho(random_density(4, 1 + static_cast<int>(rng() % 4), rng),
                             2, 2);
    IsotropicSpec iso;
    iso.t = t_values[s % 4];
    iso.unitary = random_unitary(2, rng);
    const KrausChannel e = ecpo_to_channel(iso, 2);
    const double p = detail::p_grid_value(s);
    OptimizerConfig cfg;
    cfg.seed = detail::mix_seed(seed, 1400 + s);
    const double before = discord(rho, p, cfg).value;
    const double after = discord(apply_local(rho, e, Subsystem::A), p, cfg).value;
    report.record(before - after + 1e-5);
  }
  return report;
}

inline PropertyReport check_d4_semiclassical(int samples, std::uint64_t seed) {
  PropertyReport report{"D4 semiclassical ECPOs destroy discord"};
  Rng rng(detail::mix_seed(seed, 15));
  for (int s = 0; s < samples; ++s) {
    const BipartiteState rho(random_density(4, 4, rng), 2, 2);
    // Random projective semiclassical channel on A.
    SemiclassicalSpec sc;
    sc.out_basis = random_unitary(2, rng);
    const Matrix meas = random_unitary(2, rng);
    for (int i = 0; i < 2; ++i)
      sc.povm.push_back(meas.col(i) * meas.col(i).adjoint());
    const KrausChannel e = ecpo_to_channel(sc, 2);
    const double p = detail::p_grid_value(s);
    OptimizerConfig cfg;
    cfg.seed = detail::mix_seed(seed, 1500 + s);
    report.record(1e-7 -
                  discord(apply_local(rho, e, Subsystem::A), p, cfg).value);
  }
  return report;
}

inline PropertyReport check_d3_pure_corollary(int samples, std::uint64_t seed) {
  PropertyReport report{"D3 corollary: maximally entangled is extremal"};
  Rng rng(detail::mix_seed(seed, 16));
  static constexpr double p_values[] = {0.3, 0.5, 0.8};
  for (int s = 0; s < samples; ++s) {
    const double p = p_values[s % 3];
    OptimizerConfig cfg;
    cfg.seed = detail::mix_seed(seed, 1600 + s);
    const double bound = discord(maximally_entangled(2), p, cfg).value;
    const BipartiteState psi(random_pure(4, rng), 2, 2);
    report.record(bound - discord(psi, p, cfg).value + 1e-6);
  }
  return report;
}

inline PropertyReport check_local_unitary_invariance(int samples,
                                                     std::uint64_t seed) {
  PropertyReport report{"local unitary invariance"};
  Rng rng(detail::mix_seed(seed, 17));
  for (int s = 0; s < samples; ++s) {
    const BipartiteState rho(random_density(4, 1 + static_cast<int>(rng() % 4), rng),
                             2, 2);
    const Matrix w = Eigen::kroneckerProduct(random_unitary(2, rng),
                                             random_unitary(2, rng));
    const BipartiteState rotated(
        DensityMatrix(detail::hermitize(w * rho.matrix() * w.adjoint())), 2, 2);
    const double p = detail::p_grid_value(s);
    OptimizerConfig cfg;
    cfg.seed = detail::mix_seed(seed, 1700 + s);
    const double a = discord(rho, p, cfg).value;
    const double b = discord(rotated, p, cfg).value;
    report.record(1e-5 - std::abs(a - b));
  }
  return report;
}

inline PropertyReport check_transfer_identity(int samples, std::uint64_t seed) {
  PropertyReport report{"flat landscape on maximally entangled states"};
  Rng rng(detail::mix_seed(seed, 18));
  const BipartiteState psi = maximally_entangled(2);
  const double p = 0.5;
  const double at_identity =
      local_dephasing_qfi(psi, p, Matrix::Identity(2, 2)).value;
  for (int s = 0; s < samples; ++s) {
    const double at_u =
        local_dephasing_qfi(psi, p, random_unitary(2, rng)).value;
    report.record(1e-8 - std::abs(at_u - at_identity));
  }
  return report;
}

inline PropertyReport check_optimizer_sanity(int samples, std::uint64_t seed) {
  PropertyReport report{"optimizer bookkeeping"};
  Rng rng(detail::mix_seed(seed, 19));
  for (int s = 0; s < samples; ++s) {
    const BipartiteState rho(random_density(4, 4, rng), 2, 2);
    OptimizerConfig cfg;
    cfg.seed = detail::mix_seed(seed, 1900 + s);
    const DiscordResult r = discord(rho, 0.5, cfg);
    double slack = std::numeric_limits<double>::infinity();
    for (double v : r.per_start_values) slack = std::min(slack, v - r.value);
    // Identity start plus Haar starts plus the qubit grid entry.
    if (r.starts != cfg.num_starts + 2) slack = -1.0;
    report.record(slack);
  }
  return report;
}

inline PropertyReport check_grid_agreement(int samples, std::uint64_t seed) {
  PropertyReport report{"optimizer agrees with grid oracle"};
  Rng rng(detail::mix_seed(seed, 20));
  for (int s = 0; s < samples; ++s) {
    const BipartiteState rho(random_density(4, 1 + static_cast<int>(rng() % 4), rng),
                             2, 2);
    const double p = detail::p_grid_value(s);
    OptimizerConfig cfg;
    cfg.seed = detail::mix_seed(seed, 2000 + s);
    const double opt = discord(rho, p, cfg).value;
    const double grid = discord_qubit_a_grid(rho, p).value;
    report.record(1e-5 - std::abs(opt - grid));
  }
  return report;
}

inline std::vector<PropertyReport> verify_discord(int samples,
                                                  std::uint64_t seed) {
  return {check_d1_cq(samples, seed),
          check_d1_non_cq(samples, seed),
          check_d2_b_monotonicity(samples, seed),
          check_d4_isotropic(samples, seed),
          check_d4_semiclassical(std::max(1, samples / 2), seed),
          check_d3_pure_corollary(samples, seed),
          check_local_unitary_invariance(std::max(1, samples / 2), seed),
          check_transfer_identity(std::max(4, samples / 2), seed),
          check_optimizer_sanity(std::max(1, samples / 10), seed),
          check_grid_agreement(samples, seed)};
}

// ---------------------------------------------------------------------------
// Conversion battery.
// ---------------------------------------------------------------------------

inline PropertyReport check_conversion_inequality(int samples,
                                                  std::uint64_t seed) {
  PropertyReport report{"coherence-to-discord conversion inequality"};
  Rng rng(detail::mix_seed(seed, 21));
  for (int s = 0; s < samples; ++s) {
    const int db = 2 + static_cast<int>(rng() % 2);
    const DensityMatrix rho_a = random_density(2, 1 + static_cast<int>(rng() % 2), rng);
    const DensityMatrix sigma_b = detail::random_diagonal_state(db, rng);
    const KrausChannel e = random_commuting_bipartite_sio(2, db, 2 * db, rng);
    const double p = detail::p_grid_value(s);
    OptimizerConfig cfg;
    cfg.seed = detail::mix_seed(seed, 2100 + s);
    report.record(conversion_check(rho_a, sigma_b, e, p, cfg).slack + 1e-6);
  }
  return report;
}

inline PropertyReport check_cnot_saturation(std::uint64_t seed) {
  PropertyReport report{"CNOT saturates the conversion inequality"};
  OptimizerConfig cfg;
  cfg.seed = detail::mix_seed(seed, 22);
  Matrix ket0 = Matrix::Zero(2, 2);
  ket0(0, 0) = 1.0;
  const ConversionResult r = conversion_check(
      maximally_coherent(2), DensityMatrix(ket0), cnot_channel(), 0.5, cfg);
  report.record(1e-5 - std::abs(r.slack));
  report.record(1e-6 - std::abs(r.c_in - 4.0 / 3.0));
  report.record(1e-6 - std::abs(r.d_out - 4.0 / 3.0));
  return report;
}

inline std::vector<PropertyReport> verify_conversion(int samples,
                                                     std::uint64_t seed) {
  return {check_conversion_inequality(samples, seed),
          check_cnot_saturation(seed)};
}

// ---------------------------------------------------------------------------
// Estimation battery.
// ---------------------------------------------------------------------------

inline std::vector<Matrix> plus_minus_povm() {
  Matrix plus(2, 2), minus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  minus << 0.5, -0.5, -0.5, 0.5;
  return {plus, minus};
}

inline PropertyReport check_crb_band(int trials, std::uint64_t seed) {
  PropertyReport report{"variance sits in the Cramer-Rao band"};
  // |+> probed by the {|+>,|->} measurement: the classical Fisher
  // information of this readout equals the QFI, so the MLE variance has to
  // sit right at the bound.
  const DensityMatrix plus = maximally_coherent(2);
  const int mu = 10000;
  const double p = 0.5;
  const EstimationRun run =
      simulate_estimation(plus, Matrix::Identity(2, 2), p, mu, trials,
                          plus_minus_povm(), detail::mix_seed(seed, 31));
  const double bound = crb_bound(qfi_dephasing(plus, p).value, mu);
  report.record(run.variance - 0.8 * bound);
  report.record(1.3 * bound - run.variance);
  return report;
}

inline PropertyReport check_crb_lower_bound(int trials, std::uint64_t seed) {
  PropertyReport report{"variance never beats the bound"};
  Rng rng(detail::mix_seed(seed, 32));
  static constexpr double p_values[] = {0.3, 0.5, 0.7};
  for (int s = 0; s < 3; ++s) {
    const DensityMatrix rho = random_density(2, 1 + s % 2, rng);
    if ((detail::dephase_diagonal(rho.matrix()) - rho.matrix()).norm() < 1e-3)
      continue;  // nearly incoherent states are uninformative
    const double p = p_values[s];
    const EstimationRun run =
        simulate_estimation(rho, Matrix::Identity(2, 2), p, 10000, trials,
                            plus_minus_povm(), detail::mix_seed(seed, 3200 + s));
    if (!run.informative) continue;
    const double bound = crb_bound(qfi_dephasing(rho, p).value, 10000);
    report.record(run.variance - 0.8 * bound);
  }
  return report;
}

inline PropertyReport check_mu_scaling(int trials, std::uint64_t seed) {
  PropertyReport report{"doubling mu halves the variance"};
  const DensityMatrix plus = maximally_coherent(2);
  const int n = std::max(trials, 400);
  const EstimationRun base =
      simulate_estimation(plus, Matrix::Identity(2, 2), 0.5, 10000, n,
                          plus_minus_povm(), detail::mix_seed(seed, 33));
  const EstimationRun doubled =
      simulate_estimation(plus, Matrix::Identity(2, 2), 0.5, 20000, n,
                          plus_minus_povm(), detail::mix_seed(seed, 34));
  const double ratio = doubled.variance / base.variance;
  report.record(0.25 - std::abs(ratio - 0.5));
  return report;
}

inline PropertyReport check_estimates_sane(int trials, std::uint64_t seed) {
  PropertyReport report{"estimates in range and unbiased"};
  const DensityMatrix plus = maximally_coherent(2);
  const double p = 0.5;
  const EstimationRun run =
      simulate_estimation(plus, Matrix::Identity(2, 2), p, 10000, trials,
                          plus_minus_povm(), detail::mix_seed(seed, 35));
  for (double e : run.estimates)
    report.record(std::min(e, 1.0 - e) >= 0.0 ? 1.0 : -1.0);
  const double se = std::sqrt(run.variance / run.estimates.size());
  report.record(3.0 * se - std::abs(run.mean() - p));
  return report;
}

inline PropertyReport check_uninformative_flag(std::uint64_t seed) {
  PropertyReport report{"incoherent probes are flagged uninformative"};
  Rng rng(detail::mix_seed(seed, 36));
  const DensityMatrix rho = detail::random_diagonal_state(2, rng);
  const EstimationRun run =
      simulate_estimation(rho, Matrix::Identity(2, 2), 0.5, 100, 2,
                          plus_minus_povm(), detail::mix_seed(seed, 37));
  report.record(run.informative ? -1.0 : 1.0);
  return report;
}

inline std::vector<PropertyReport> verify_estimation(int samples,
                                                     std::uint64_t seed) {
  const int trials = std::max(50, samples);
  return {check_crb_band(trials, seed), check_crb_lower_bound(trials, seed),
          check_mu_scaling(trials, seed), check_estimates_sane(trials, seed),
          check_uninformative_flag(seed)};
}

}  // namespace decometry
