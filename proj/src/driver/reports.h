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

#ifndef INFECTEST_DRIVER_REPORTS_H_
#define INFECTEST_DRIVER_REPORTS_H_

#include <span>
#include <string>
#include <vector>

#include "analysis/analysis.h"
#include "driver/equivalence.h"
#include "driver/oracle.h"
#include "mutgen/mutants.h"
#include "preprocess/preprocess.h"
#include "solver/solver.h"
#include "suite/suite.h"

// JSON renderings of every report the tool writes. Output is indented with
// two spaces, keys keep a fixed order, and the text ends with a newline, so
// equal inputs give byte-identical files.
namespace infectest::driver {

std::string MutantsJson(const mutgen::MutantTable& table);

std::string PreprocessJson(const mutgen::MutantTable& table, const suite::TestSuite& suite,
                           const preprocess::PreprocessReport& report);

std::string AnalysisJson(const mutgen::MutantTable& table, const suite::TestSuite& suite,
                         const analysis::AnalysisReport& report);

std::string SavingsJson(const suite::TestSuite& suite, const analysis::SavingsReport& savings);

// `oracle` is empty when no cross-check ran; otherwise it holds one label per
// mutant id.
std::string EquivalenceJson(const mutgen::MutantTable& table,
                            std::span<const EquivalenceVerdict> verdicts,
                            const EquivalenceOptions& options,
                            std::span<const OracleLabel> oracle = {});

std::string SolveJson(const solver::Formula& formula, const solver::Domain& domain,
                      const solver::SolveResult& result);

struct SuiteRow {
  std::string name;
  std::size_t tests = 0;
  std::size_t covered = 0;
  std::size_t infected = 0;
  std::size_t killed = 0;
  double mutation_score = 0.0;
};

struct VerdictCounts {
  std::string mode;
  std::size_t candidates = 0;
  std::size_t equivalent = 0;
  std::size_t killable = 0;
  std::size_t unknown = 0;
};

VerdictCounts CountVerdicts(std::span<const EquivalenceVerdict> verdicts,
                            constraints::InfectionMode mode);

std::string SummaryJson(const std::string& program, std::size_t mutants,
                        const EquivalenceOptions& options, std::span<const SuiteRow> rows,
                        std::span<const VerdictCounts> verdicts, bool oracle_checked);

}  // namespace infectest::driver

#endif  // INFECTEST_DRIVER_REPORTS_H_
