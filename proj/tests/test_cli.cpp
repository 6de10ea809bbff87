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
// End-to-end checks of the command-line interface against the documented
// CSV columns, exit codes, and determinism contract.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <decometry/io.hpp>
#include <decometry/verify.hpp>

using namespace decometry;

namespace {

namespace fs = std::filesystem;

struct CliOutcome {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path work_dir() {
  const fs::path dir = fs::temp_directory_path() / "decometry_cli_test";
  fs::create_directories(dir);
  return dir;
}

CliOutcome run_cli(const std::string& args, const std::string& env = "") {
  const fs::path dir = work_dir();
  const fs::path out = dir / "stdout.txt";
  const fs::path err = dir / "stderr.txt";
  const std::string cmd = env + " " + std::string(DECOMETRY_CLI_PATH) + " " +
                          args + " > " + out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  CliOutcome result;
  result.exit_code = WEXITSTATUS(status);
  result.out = slurp(out);
  result.err = slurp(err);
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("coherence subcommand") {
  const fs::path dir = work_dir();
  const fs::path plus_file = dir / "plus.json";
  write_state_file(plus_file.string(), maximally_coherent(2));

  SECTION("pure-state value at p = 1/2") {
    const CliOutcome r = run_cli("coherence " + plus_file.string() + " --p 0.5");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "p,value,divergent,dropped_terms");
    CHECK(lines[1] == "0.5,1.3333333333,0,0");
  }
  SECTION("divergence is encoded as inf with flag 1") {
    const CliOutcome r = run_cli("coherence " + plus_file.string() + " --p 0");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[1].rfind("0,inf,1,", 0) == 0);
  }
  SECTION("diagonal states sweep to zero") {
    Matrix diag = Matrix::Zero(2, 2);
    diag(0, 0) = 0.7;
    diag(1, 1) = 0.3;
    const fs::path diag_file = dir / "diag.json";
    write_state_file(diag_file.string(), DensityMatrix(diag));
    const CliOutcome r =
        run_cli("coherence " + diag_file.string() + " --p 0.2 0.5 0.8");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 4);
    for (std::size_t i = 1; i < lines.size(); ++i)
      CHECK(lines[i].find(",0.0000000000,0,") != std::string::npos);
  }
  SECTION("dephasing in the state eigenbasis vanishes") {
    const fs::path basis_file = dir / "hadamard.json";
    Matrix h(2, 2);
    h << 1, 1, 1, -1;
    write_matrix_file(basis_file.string(), h / std::sqrt(2.0));
    const CliOutcome r =
        run_cli("coherence " + plus_file.string() + " --p 0.5 --basis-file " +
                basis_file.string());
    REQUIRE(r.exit_code == 0);
    // Rotated into its eigenbasis the state is pure and diagonal: zero
    // value, one excluded kernel pair.
    CHECK(lines_of(r.out)[1] == "0.5,0.0000000000,0,1");
  }
  SECTION("csv output goes to the requested file") {
    const fs::path csv = dir / "sweep.csv";
    const CliOutcome r = run_cli("coherence " + plus_file.string() +
                                 " --p 0.5 --csv " + csv.string());
    REQUIRE(r.exit_code == 0);
    CHECK(slurp(csv).find("0.5,1.3333333333,0,0") != std::string::npos);
  }
  SECTION("malformed input exits 2 with a one-line tag") {
    const fs::path broken = dir / "broken.json";
    std::ofstream(broken.string()) << "{ nope";
    const CliOutcome r = run_cli("coherence " + broken.string() + " --p 0.5");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("decometry: error:") != std::string::npos);
    CHECK(lines_of(r.err).size() == 1);
  }
  SECTION("out-of-range p exits 2") {
    const CliOutcome r = run_cli("coherence " + plus_file.string() + " --p 1.5");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("validation") != std::string::npos);
  }
}

TEST_CASE("discord subcommand") {
  const fs::path dir = work_dir();
  const fs::path bell_file = dir / "bell.json";
  write_state_file(bell_file.string(), maximally_entangled(2));

  SECTION("Bell state at p = 1/2 with sidecar basis") {
    const fs::path sidecar = dir / "basis_out.json";
    const CliOutcome r =
        run_cli("discord " + bell_file.string() +
                " --p 0.5 --seed 7 --emit-basis " + sidecar.string());
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "p,value,converged,starts,best_start");
    const double value = std::stod(lines[1].substr(lines[1].find(',') + 1));
    CHECK(std::abs(value - 4.0 / 3.0) <= 1e-6);
    // Sidecar holds one unitary per p value.
    std::ifstream in(sidecar.string());
    nlohmann::json j;
    in >> j;
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    CHECK(j[0]["dim"] == 2);
  }
  SECTION("CQ fixture sweeps to zero") {
    Rng rng(5);
    const BipartiteState cq = detail::random_cq_state(2, 2, rng);
    const fs::path cq_file = dir / "cq.json";
    write_state_file(cq_file.string(), cq);
    const CliOutcome r = run_cli("discord " + cq_file.string() + " --p 0.5");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    const double value = std::stod(lines[1].substr(lines[1].find(',') + 1));
    CHECK(value <= 1e-7);
  }
  SECTION("p = 0 is rejected with exit 2") {
    const CliOutcome r = run_cli("discord " + bell_file.string() + " --p 0");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("p=0 unsupported") != std::string::npos);
  }
  SECTION("dims flag overrides a missing dims field") {
    const fs::path flat_file = dir / "flat.json";
    write_state_file(flat_file.string(), maximally_entangled(2).state());
    const CliOutcome missing = run_cli("discord " + flat_file.string() + " --p 0.5");
    CHECK(missing.exit_code == 2);
    const CliOutcome fixed =
        run_cli("discord " + flat_file.string() + " --p 0.5 --dims 2 2");
    CHECK(fixed.exit_code == 0);
  }
  SECTION("output is deterministic given the seed") {
    const std::string args = "discord " + bell_file.string() + " --p 0.3 0.7";
    const CliOutcome a = run_cli(args, "DECOMETRY_SEED=99");
    const CliOutcome b = run_cli(args, "DECOMETRY_SEED=99");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("verify subcommand") {
  SECTION("estimation suite passes and prints one line per property") {
    const CliOutcome r = run_cli("verify --suite estimation --samples 60 --seed 3");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    CHECK(lines.size() == 5);
    for (const std::string& line : lines)
      CHECK(line.rfind("[PASS]", 0) == 0);
  }
  SECTION("unknown suite exits 2") {
    const CliOutcome r = run_cli("verify --suite nonsense");
    CHECK(r.exit_code == 2);
  }
}
