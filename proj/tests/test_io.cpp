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

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <catch2/catch_amalgamated.hpp>

#include <decometry/io.hpp>

using namespace decometry;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("state files round trip") {
  Rng rng(1);
  const auto path = temp_file("decometry_state.json");
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 5);
    const DensityMatrix rho = random_density(d, 1 + static_cast<int>(rng() % d), rng);
    write_state_file(path.string(), rho);
    const LoadedState loaded = read_state_file(path.string());
    CHECK_FALSE(loaded.dims.has_value());
    CHECK((loaded.state.matrix() - rho.matrix()).cwiseAbs().maxCoeff() <=
          1e-15);
  }
  std::filesystem::remove(path);
}

TEST_CASE("bipartite state files carry dims") {
  const auto path = temp_file("decometry_bipartite.json");
  const BipartiteState bell = maximally_entangled(2);
  write_state_file(path.string(), bell);
  const LoadedState loaded = read_state_file(path.string());
  REQUIRE(loaded.dims.has_value());
  CHECK(loaded.dims->first == 2);
  CHECK(loaded.dims->second == 2);
  CHECK((loaded.state.matrix() - bell.matrix()).cwiseAbs().maxCoeff() <=
        1e-15);
  std::filesystem::remove(path);
}

TEST_CASE("channel files round trip") {
  Rng rng(2);
  const auto path = temp_file("decometry_channel.json");
  const KrausChannel ch = sio_to_kraus(random_sio(3, 3, rng));
  write_channel_file(path.string(), ch);
  const KrausChannel loaded = read_channel_file(path.string());
  REQUIRE(loaded.kraus().size() == ch.kraus().size());
  for (std::size_t k = 0; k < ch.kraus().size(); ++k)
    CHECK((loaded.kraus()[k] - ch.kraus()[k]).cwiseAbs().maxCoeff() <= 1e-15);
  std::filesystem::remove(path);
}

TEST_CASE("matrix files hold unitaries for --basis-file") {
  const auto path = temp_file("decometry_basis.json");
  const Matrix u = random_unitary(3, 77);
  write_matrix_file(path.string(), u);
  CHECK((read_matrix_file(path.string()) - u).cwiseAbs().maxCoeff() <= 1e-15);
  std::filesystem::remove(path);
}

TEST_CASE("invalid files are rejected") {
  const auto path = temp_file("decometry_bad.json");
  SECTION("malformed json") {
    std::ofstream(path.string()) << "{ not json";
    CHECK_THROWS(read_state_file(path.string()));
  }
  SECTION("valid json, invalid state") {
    std::ofstream(path.string())
        << R"({"dim": 2, "re": [[0.9, 0.0], [0.0, 0.0]], "im": [[0,0],[0,0]]})";
    CHECK_THROWS_AS(read_state_file(path.string()), std::invalid_argument);
  }
  SECTION("shape mismatch") {
    std::ofstream(path.string())
        << R"({"dim": 3, "re": [[1.0, 0.0], [0.0, 0.0]], "im": [[0,0],[0,0]]})";
    CHECK_THROWS_AS(read_state_file(path.string()), std::invalid_argument);
  }
  SECTION("missing file") {
    CHECK_THROWS_AS(read_state_file("/nonexistent/decometry.json"),
                    std::invalid_argument);
  }
  std::filesystem::remove(path);
}
