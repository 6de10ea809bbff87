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
// Command-line front end: compute coherence/discord sweeps on state files,
// and run the randomized property suites.
//
//   decometry coherence <state.json> --p 0.1 0.5 0.9 [--basis-file U.json]
//   decometry discord <state.json> --p 0.5 [--dims 2 2] [--starts 16]
//   decometry verify --suite all --samples 100 --seed 42
//
// Exit codes: 0 success, 2 validation failure, 3 numerical failure.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <decometry/decometry.hpp>
#include <decometry/io.hpp>

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

std::string format_value(double v) {
  if (std::isinf(v)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10f", v);
  return buf;
}

std::string format_p(double p) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", p);
  return buf;
}

// Rows go to --csv when given, otherwise to stdout.
class CsvSink {
 public:
  explicit CsvSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_)
        throw std::invalid_argument("cannot write csv file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int run_coherence(const std::string& state_path,
                  const std::vector<double>& p_values,
                  const std::string& basis_path, const std::string& csv_path) {
  const decometry::LoadedState loaded = decometry::read_state_file(state_path);
  decometry::Matrix basis = decometry::Matrix::Identity(loaded.state.dim(),
                                                        loaded.state.dim());
  if (!basis_path.empty()) {
    basis = decometry::read_matrix_file(basis_path);
    if (basis.rows() != loaded.state.dim() || !decometry::is_unitary(basis))
      throw std::invalid_argument("basis file does not hold a unitary of the "
                                  "state dimension");
  }
  for (double p : p_values)
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument("p values must lie in [0,1]");

  CsvSink sink(csv_path);
  sink.stream() << "p,value,divergent,dropped_terms\n";
  for (double p : p_values) {
    const decometry::MeasureResult r = decometry::qfi_dephasing(
        loaded.state, decometry::DephasingChannel(p, basis));
    sink.stream() << format_p(p) << ',' << format_value(r.value) << ','
                  << (r.divergent() ? 1 : 0) << ',' << r.dropped_terms << '\n';
  }
  return 0;
}

int run_discord(const std::string& state_path,
                const std::vector<double>& p_values, std::vector<int> dims,
                int starts, std::uint64_t seed, const std::string& csv_path,
                const std::string& basis_out) {
  const decometry::LoadedState loaded = decometry::read_state_file(state_path);
  if (dims.empty()) {
    if (!loaded.dims)
      throw std::invalid_argument(
          "state file has no dims field; pass --dims dA dB");
    dims = {loaded.dims->first, loaded.dims->second};
  }
  if (dims.size() != 2)
    throw std::invalid_argument("--dims expects exactly two integers");
  const decometry::BipartiteState rho(loaded.state, dims[0], dims[1]);
  for (double p : p_values) {
    if (p == 0.0) throw std::invalid_argument("p=0 unsupported for discord");
    if (!(p > 0.0 && p <= 1.0))
      throw std::invalid_argument("p values must lie in (0,1]");
  }

  decometry::OptimizerConfig cfg;
  cfg.num_starts = starts;
  cfg.seed = seed;

  CsvSink sink(csv_path);
  sink.stream() << "p,value,converged,starts,best_start\n";
  nlohmann::json bases = nlohmann::json::array();
  bool all_converged = true;
  for (double p : p_values) {
    const decometry::DiscordResult r = decometry::discord(rho, p, cfg);
    all_converged = all_converged && r.converged;
    sink.stream() << format_p(p) << ',' << format_value(r.value) << ','
                  << (r.converged ? 1 : 0) << ',' << r.starts << ','
                  << r.best_start << '\n';
    if (!basis_out.empty()) {
      nlohmann::json entry = decometry::detail::matrix_parts_to_json(
          r.argmin_basis);
      entry["dim"] = dims[0];
      entry["p"] = p;
      bases.push_back(std::move(entry));
    }
  }
  if (!basis_out.empty()) {
    std::ofstream out(basis_out);
    if (!out)
      throw std::invalid_argument("cannot write basis file: " + basis_out);
    out << bases.dump(2) << '\n';
  }
  return all_converged ? 0 : kExitNumerical;
}

int run_verify(const std::string& suite, int samples, std::uint64_t seed) {
  using decometry::PropertyReport;
  std::vector<PropertyReport> reports;
  const auto append = [&](std::vector<PropertyReport> r) {
    for (auto& rep : r) reports.push_back(std::move(rep));
  };
  if (suite == "coherence" || suite == "all")
    append(decometry::verify_coherence(samples, seed));
  if (suite == "discord" || suite == "all")
    append(decometry::verify_discord(samples, seed));
  if (suite == "conversion" || suite == "all")
    append(decometry::verify_conversion(samples, seed));
  if (suite == "estimation" || suite == "all")
    append(decometry::verify_estimation(samples, seed));
  if (reports.empty())
    throw std::invalid_argument("unknown suite: " + suite);

  bool all_passed = true;
  for (const PropertyReport& r : reports) {
    all_passed = all_passed && r.passed();
    std::printf("[%s] %-45s violations %d/%d, worst slack %.3e\n",
                r.passed() ? "PASS" : "FAIL", r.name.c_str(), r.violations,
                r.samples, r.worst_slack);
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dephasing-channel sensitivity measures (coherence & discord "
               "as quantum Fisher information)"};
  app.require_subcommand(1);

  std::string state_path, basis_path, csv_path, basis_out, suite = "all";
  std::vector<double> p_values;
  std::vector<int> dims;
  int starts = 16;
  int samples = 100;
  std::uint64_t seed = 0;

  CLI::App* coherence =
      app.add_subcommand("coherence", "coherence sweep of a state file");
  coherence->add_option("state", state_path, "state JSON file")->required();
  coherence->add_option("--p", p_values, "dephasing strengths in [0,1]")
      ->required()
      ->expected(-1);
  coherence->add_option("--basis-file", basis_path,
                        "unitary JSON fixing the dephasing basis");
  coherence->add_option("--csv", csv_path, "write rows to this file");

  CLI::App* discord_cmd =
      app.add_subcommand("discord", "discord sweep of a bipartite state file");
  discord_cmd->add_option("state", state_path, "bipartite state JSON file")
      ->required();
  discord_cmd->add_option("--p", p_values, "dephasing strengths in (0,1]")
      ->required()
      ->expected(-1);
  discord_cmd->add_option("--dims", dims, "subsystem dimensions dA dB")
      ->expected(2);
  discord_cmd->add_option("--starts", starts, "random optimizer starts");
  discord_cmd->add_option("--seed", seed, "optimizer seed")
      ->envname("DECOMETRY_SEED");
  discord_cmd->add_option("--csv", csv_path, "write rows to this file");
  discord_cmd->add_option("--emit-basis", basis_out,
                          "write the argmin basis to this sidecar JSON");

  CLI::App* verify = app.add_subcommand("verify", "randomized property suites");
  verify->add_option("--suite", suite,
                     "coherence|discord|conversion|estimation|all");
  verify->add_option("--samples", samples, "samples per property");
  verify->add_option("--seed", seed, "suite seed")->envname("DECOMETRY_SEED");

  CLI11_PARSE(app, argc, argv);

  try {
    if (coherence->parsed())
      return run_coherence(state_path, p_values, basis_path, csv_path);
    if (discord_cmd->parsed())
      return run_discord(state_path, p_values, dims, starts, seed, csv_path,
                         basis_out);
    return run_verify(suite, samples, seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "decometry: error: validation: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "decometry: error: numerical: " << e.what() << '\n';
    return kExitNumerical;
  }
}
