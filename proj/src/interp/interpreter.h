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

#ifndef INFECTEST_INTERP_INTERPRETER_H_
#define INFECTEST_INTERP_INTERPRETER_H_

#include <cstdint>
#include <span>
#include <string_view>

#include "interp/trace.h"
#include "interp/value.h"
#include "lang/program.h"
#include "mutgen/mutants.h"

namespace infectest::interp {

inline constexpr std::uint64_t kDefaultStepBudget = 1'000'000;

struct RunOptions {
  // Executed statements plus loop-condition evaluations allowed per call.
  std::uint64_t step_budget = kDefaultStepBudget;
};

// Evaluates `function` on `args`. Unknown functions and argument lists that
// do not match the signature throw UsageError; everything that can go wrong
// at run time is reported in the Outcome.
Outcome Run(const lang::CheckedProgram& program, std::string_view function,
            std::span<const Value> args, const RunOptions& options = {});

struct TracedRun {
  Outcome outcome = Value::Int(0);
  ExecutionTrace trace;
};

// Same evaluation as Run, recording statements, branch decisions,
// assignments, and site evaluations. When `probes` is non-null every
// evaluation of a site also records a ProbeResult for each mutant of that
// site. Probes never change the outcome.
TracedRun RunTraced(const lang::CheckedProgram& program, std::string_view function,
                    std::span<const Value> args, const mutgen::MutantTable* probes,
                    const RunOptions& options = {});

}  // namespace infectest::interp

#endif  // INFECTEST_INTERP_INTERPRETER_H_
