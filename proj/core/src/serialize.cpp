// Copyright 2026 The qlinbench Authors
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

#include "serialize.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace qlin::detail {

nlohmann::json circuit_json(const Circuit& c) {
  nlohmann::json out = nlohmann::json::array();
  for (const Gate& g : c.gates()) {
    nlohmann::json j;
    j["kind"] = std::string(gate_name(g.kind));
    j["targets"] = g.targets;
    j["controls"] = g.controls;
    j["params"] = g.params;
    if (g.payload) j["matrix"] = matrix_json(*g.payload);
    out.push_back(std::move(j));
  }
  return out;
}

nlohmann::json matrix_json(const Matrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      entries.push_back({m(r, c).real(), m(r, c).imag()});
    }
  }
  return {{"dim", m.rows()}, {"entries", std::move(entries)}};
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), end);
}

}  // namespace qlin::detail
