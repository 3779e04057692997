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

#ifndef INFECTEST_ANALYSIS_ANALYSIS_H_
#define INFECTEST_ANALYSIS_ANALYSIS_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "interp/interpreter.h"
#include "lang/program.h"
#include "mutgen/mutants.h"
#include "preprocess/preprocess.h"
#include "suite/suite.h"

namespace infectest::analysis {

using mutgen::MutantId;
using mutgen::MutantSet;

// Which (mutant, test) pairs strong mutation analysis executes.
enum class Filter { kNone, kCoverage, kInfection };

std::string_view FilterName(Filter filter);
std::optional<Filter> FilterFromName(std::string_view name);

enum class MutantStatus { kKilled, kLive, kSkippedUncovered, kSkippedUninfected };

std::string_view StatusName(MutantStatus status);

struct MutantResult {
  MutantStatus status = MutantStatus::kLive;
  std::vector<std::string> killing_tests;
  std::size_t executions = 0;
};

struct AnalysisReport {
  Filter filter = Filter::kNone;
  std::vector<MutantResult> per_mutant;  // indexed by mutant id
  MutantSet killed;
  std::size_t executed_pairs = 0;
  // Mutants run against at least one test.
  std::size_t executed_mutants = 0;
  double mutation_score = 0.0;  // killed / |M|

  MutantSet WithStatus(MutantStatus status) const;
};

struct AnalysisOptions {
  interp::RunOptions run{};
  int threads = 1;
};

// Strong mutation analysis. Tests run per mutant in suite order and stop at
// the first kill; a filter other than kNone restricts each mutant to the tests
// that cover (or infect) it according to `report`, which must then be given.
AnalysisReport RunAnalysis(const lang::CheckedProgram& program,
                           const mutgen::MutantTable& table,
                           const suite::TestSuite& suite, Filter filter,
                           const preprocess::PreprocessReport* report,
                           const AnalysisOptions& options = {});

struct SavingsReport {
  // Indexed by Filter.
  std::array<AnalysisReport, 3> reports;
  // 1 - infection/coverage, and 1 - coverage/none, on executed pairs and on
  // executed mutants; 0 when the baseline is 0.
  double pair_reduction_vs_coverage = 0.0;
  double pair_reduction_vs_none = 0.0;
  double mutant_reduction_vs_coverage = 0.0;

  const AnalysisReport& at(Filter filter) const {
    return reports[static_cast<std::size_t>(filter)];
  }
};

// Runs all three filters. Throws InvariantViolation if the killed sets
// differ or the executed pair counts are not ordered none >= coverage >=
// infection.
SavingsReport CompareFilters(const lang::CheckedProgram& program,
                             const mutgen::MutantTable& table,
                             const suite::TestSuite& suite,
                             const preprocess::PreprocessReport& report,
                             const AnalysisOptions& options = {});

}  // namespace infectest::analysis

#endif  // INFECTEST_ANALYSIS_ANALYSIS_H_
