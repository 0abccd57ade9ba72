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

#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace qlin {

/// Mixes a 64-bit value with the SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Order-sensitive hash of a list of 64-bit words. Used to derive independent
/// per-cell and per-pair seeds from a master seed.
std::uint64_t hash64(std::initializer_list<std::uint64_t> words) noexcept;

/// Hash of a string, for folding suite or dataset names into seeds.
std::uint64_t hash64(std::string_view text) noexcept;

/// Seeded pseudo-random stream.
///
/// The engine is the 64-bit Mersenne Twister (MT19937-64), whose output
/// sequence is fixed by the C++ standard. Conversions to floating point are
/// done here rather than through <random> distributions so the stream is
/// bit-identical on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer on [0, n). Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t n);

  /// Standard normal via Box-Muller.
  double normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace qlin
