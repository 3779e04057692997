// Copyright 2026 The Infectest Authors
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

#ifndef INFECTEST_DRIVER_ORACLE_H_
#define INFECTEST_DRIVER_ORACLE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "interp/interpreter.h"
#include "interp/value.h"
#include "lang/program.h"
#include "mutgen/mutants.h"

namespace infectest::driver {

inline constexpr std::uint64_t kMaxOracleAssignments = 1'000'000;

struct OracleLabel {
  mutgen::MutantId mutant = 0;
  bool equivalent = true;
  // First distinguishing input in enumeration order.
  std::optional<std::vector<interp::Value>> witness;
};

struct OracleOptions {
  std::int64_t domain_lo = -8;
  std::int64_t domain_hi = 16;
  interp::RunOptions run{};
  int threads = 1;
};

// Runs the original and every mutant on every input of the domain (each int
// parameter over [lo, hi], booleans over both values) and compares outcomes.
// Throws DomainError when a function has more than kMaxOracleAssignments
// inputs. Labels are indexed by mutant id.
std::vector<OracleLabel> BruteForceOracle(const lang::CheckedProgram& program,
                                          const mutgen::MutantTable& table,
                                          const OracleOptions& options = {});

}  // namespace infectest::driver

#endif  // INFECTEST_DRIVER_ORACLE_H_
