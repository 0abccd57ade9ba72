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

// Internal JSON and number-formatting helpers shared by the report writers.

#pragma once

#include <string>

#include "json.hpp"
#include "qlin/circuit.hpp"

namespace qlin::detail {

nlohmann::json circuit_json(const Circuit& c);
nlohmann::json matrix_json(const Matrix& m);

/// Shortest round-trip decimal form; "nan"/"inf" spelled out.
std::string format_double(double x);

}  // namespace qlin::detail
