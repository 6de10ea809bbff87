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

#include <fstream>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "decometry/channels.hpp"
#include "decometry/state.hpp"

namespace decometry {

// File formats:
//   state:   {"dim": d, "re": [[...]], "im": [[...]]}   (row-major)
//   bipartite state additionally carries "dims": [dA, dB]
//   channel: {"dim_in": d, "dim_out": d, "kraus": [{"re": .., "im": ..}, ..]}

namespace detail {

inline nlohmann::json matrix_parts_to_json(const Matrix& m) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row_re = nlohmann::json::array();
    nlohmann::json row_im = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row_re.push_back(m(i, j).real());
      row_im.push_back(m(i, j).imag());
    }
    re.push_back(std::move(row_re));
    im.push_back(std::move(row_im));
  }
  return nlohmann::json{{"re", std::move(re)}, {"im", std::move(im)}};
}

inline Matrix matrix_from_json_parts(const nlohmann::json& j, int rows,
                                     int cols) {
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (static_cast<int>(re.size()) != rows || static_cast<int>(im.size()) != rows)
    throw std::invalid_argument("matrix json: wrong number of rows");
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(re[i].size()) != cols ||
        static_cast<int>(im[i].size()) != cols)
      throw std::invalid_argument("matrix json: wrong number of columns");
    for (int j2 = 0; j2 < cols; ++j2)
      m(i, j2) = Complex(re[i][j2].get<double>(), im[i][j2].get<double>());
  }
  return m;
}

inline nlohmann::json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  try {
    nlohmann::json j;
    in >> j;
    return j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

// Shape/type errors surface as std::invalid_argument like every other
// validation failure.
template <class F>
auto guard_json(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed document: ") + e.what());
  }
}

}  // namespace detail

struct LoadedState {
  DensityMatrix state;
  std::optional<std::pair<int, int>> dims;  // present for bipartite files
};

inline nlohmann::json state_to_json(const DensityMatrix& rho) {
  nlohmann::json j = detail::matrix_parts_to_json(rho.matrix());
  j["dim"] = rho.dim();
  return j;
}

inline nlohmann::json state_to_json(const BipartiteState& rho) {
  nlohmann::json j = state_to_json(rho.state());
  j["dims"] = {rho.dim_a(), rho.dim_b()};
  return j;
}

inline LoadedState state_from_json(const nlohmann::json& j) {
  const int d = j.at("dim").get<int>();
  if (d < 1 || d > kMaxDim)
    throw std::invalid_argument("state json: bad dimension");
  Matrix m = detail::matrix_from_json_parts(j, d, d);
  LoadedState out{DensityMatrix(std::move(m)), std::nullopt};
  if (j.contains("dims")) {
    const auto& dims = j.at("dims");
    if (dims.size() != 2)
      throw std::invalid_argument("state json: dims must have two entries");
    out.dims = std::make_pair(dims[0].get<int>(), dims[1].get<int>());
  }
  return out;
}

inline LoadedState read_state_file(const std::string& path) {
  return detail::guard_json(
      [&] { return state_from_json(detail::parse_file(path)); });
}

template <class StateT>
inline void write_state_file(const std::string& path, const StateT& rho) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << state_to_json(rho).dump(2) << '\n';
}

inline nlohmann::json channel_to_json(const KrausChannel& ch) {
  nlohmann::json kraus = nlohmann::json::array();
  for (const Matrix& k : ch.kraus())
    kraus.push_back(detail::matrix_parts_to_json(k));
  return nlohmann::json{{"dim_in", ch.dim_in()},
                        {"dim_out", ch.dim_out()},
                        {"kraus", std::move(kraus)}};
}

inline KrausChannel channel_from_json(const nlohmann::json& j) {
  const int din = j.at("dim_in").get<int>();
  const int dout = j.at("dim_out").get<int>();
  if (din < 1 || dout < 1 || din > kMaxDim || dout > kMaxDim)
    throw std::invalid_argument("channel json: bad dimensions");
  std::vector<Matrix> ops;
  for (const auto& k : j.at("kraus"))
    ops.push_back(detail::matrix_from_json_parts(k, dout, din));
  return KrausChannel(std::move(ops));
}

inline KrausChannel read_channel_file(const std::string& path) {
  return detail::guard_json(
      [&] { return channel_from_json(detail::parse_file(path)); });
}

inline void write_channel_file(const std::string& path,
                               const KrausChannel& ch) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << channel_to_json(ch).dump(2) << '\n';
}

/// Plain complex matrix, same {"dim","re","im"} layout as a state file but
/// without density-matrix validation; used for dephasing-basis files.
inline Matrix read_matrix_file(const std::string& path) {
  return detail::guard_json([&] {
    const nlohmann::json j = detail::parse_file(path);
    const int d = j.at("dim").get<int>();
    if (d < 1 || d > kMaxDim)
      throw std::invalid_argument("matrix json: bad dimension");
    return detail::matrix_from_json_parts(j, d, d);
  });
}

inline void write_matrix_file(const std::string& path, const Matrix& m) {
  nlohmann::json j = detail::matrix_parts_to_json(m);
  j["dim"] = static_cast<int>(m.rows());
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << j.dump(2) << '\n';
}

}  // namespace decometry
