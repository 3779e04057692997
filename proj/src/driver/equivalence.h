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

#ifndef INFECTEST_DRIVER_EQUIVALENCE_H_
#define INFECTEST_DRIVER_EQUIVALENCE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "analysis/analysis.h"
#include "constraints/infection.h"
#include "constraints/path.h"
#include "interp/interpreter.h"
#include "lang/program.h"
#include "mutgen/mutants.h"
#include "preprocess/preprocess.h"
#include "solver/solver.h"
#include "suite/suite.h"

namespace infectest::driver {

using mutgen::MutantId;
using mutgen::MutantSet;

enum class Verdict : std::uint8_t { kEquivalentOverDomain, kKillable, kUnknown };

enum class UnknownCause : std::uint8_t { kNone, kLoops, kPathBound, kSolverBudget };

std::string_view VerdictName(Verdict verdict);
std::string_view UnknownCauseName(UnknownCause cause);

struct PathEvidence {
  constraints::PathScript script;
  constraints::Formula formula;
  solver::SolveResult result;
};

struct EquivalenceVerdict {
  MutantId mutant = 0;
  Verdict status = Verdict::kUnknown;
  constraints::InfectionMode mode = constraints::InfectionMode::kLocal;
  UnknownCause reason = UnknownCause::kNone;
  // Every path for an equivalence; up to and including the satisfiable one
  // otherwise.
  std::vector<PathEvidence> paths;
  std::optional<std::size_t> witness_path;  // index into paths
  std::optional<solver::Assignment> model;
};

struct EquivalenceOptions {
  std::int64_t domain_lo = solver::kDefaultDomainLo;
  std::int64_t domain_hi = solver::kDefaultDomainHi;
  std::size_t path_bound = 64;
  std::uint64_t budget = solver::kDefaultBudget;
  interp::RunOptions run{};
  int threads = 1;
};

// C - I: covered mutants no test infected.
MutantSet LocalCandidates(const preprocess::PreprocessReport& report);

// Covered and infected, yet live under `analysis`.
MutantSet OutermostCandidates(const preprocess::PreprocessReport& report,
                              const analysis::AnalysisReport& analysis);

// One verdict per candidate, in id order. Each path to the site yields one
// constraint; the mutant is equivalent over the domain only when the path
// set is complete and every constraint is unsatisfiable. A loop on the way to
// the site makes the verdict unknown; otherwise a satisfiable path makes it
// killable, and a truncated path set or an exhausted solver budget unknown.
// Suite traces supply the paths of sites behind loops.
std::vector<EquivalenceVerdict> ClassifyEquivalence(
    const lang::CheckedProgram& program, const mutgen::MutantTable& table,
    const suite::TestSuite& suite, const MutantSet& candidates,
    constraints::InfectionMode mode, const EquivalenceOptions& options = {});

}  // namespace infectest::driver

#endif  // INFECTEST_DRIVER_EQUIVALENCE_H_
