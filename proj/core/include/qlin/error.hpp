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

#include <stdexcept>
#include <string>

namespace qlin {

/// Base class for every error raised by the library. `kind()` is the stable
/// name written into report error rows (e.g. "SingularError").
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define QLIN_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  }

QLIN_DEFINE_ERROR(ZeroVector);
QLIN_DEFINE_ERROR(DimensionError);
QLIN_DEFINE_ERROR(TargetError);
QLIN_DEFINE_ERROR(ArgumentError);
QLIN_DEFINE_ERROR(SizeError);
QLIN_DEFINE_ERROR(UnitaryError);
QLIN_DEFINE_ERROR(HermiticityError);
QLIN_DEFINE_ERROR(SingularError);
QLIN_DEFINE_ERROR(ConfigError);
QLIN_DEFINE_ERROR(FormatError);
QLIN_DEFINE_ERROR(LabelError);
QLIN_DEFINE_ERROR(StratifyError);
QLIN_DEFINE_ERROR(EmptyError);
QLIN_DEFINE_ERROR(IOError);

#undef QLIN_DEFINE_ERROR

}  // namespace qlin
