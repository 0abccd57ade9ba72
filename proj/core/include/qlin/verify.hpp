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

// Fixture checks run by `qlinbench verify`.

#pragma once

#include <string>
#include <vector>

namespace qlin {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Small closed-form fixtures across all modules. Each check catches its own
/// exceptions and reports them as failures.
std::vector<CheckResult> run_fixture_checks();

}  // namespace qlin
