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

#ifndef INFECTEST_PREPROCESS_PREPROCESS_H_
#define INFECTEST_PREPROCESS_PREPROCESS_H_

#include <cstddef>
#include <string>
#include <vector>

#include "interp/interpreter.h"
#include "lang/program.h"
#include "mutgen/mutants.h"
#include "suite/suite.h"

namespace infectest::preprocess {

using mutgen::MutantSet;

struct TestCoverage {
  std::string test_id;
  MutantSet covered;
  MutantSet infected;
};

// Covered set C and state-infected set I gathered from one instrumented run
// of the original program per test.
struct PreprocessReport {
  MutantSet all;  // M
  MutantSet covered;  // C
  MutantSet infected;  // I
  MutantSet probe_errors;
  std::vector<TestCoverage> per_test;  // suite order
  // Runs of the original program performed; mutants are never executed here.
  std::size_t original_runs = 0;
};

struct PreprocessOptions {
  interp::RunOptions run{};
  int threads = 1;
};

// Throws UsageError when a test names a function the program lacks.
PreprocessReport Preprocess(const lang::CheckedProgram& program,
                            const mutgen::MutantTable& table,
                            const suite::TestSuite& suite,
                            const PreprocessOptions& options = {});

// C - I: covered mutants that no test infected.
MutantSet PotentiallyEquivalent(const PreprocessReport& report);

// Throws InvariantViolation unless I <= C <= M, C and I are the unions of the
// per-test sets, and probe errors are a subset of I.
void VerifyReport(const PreprocessReport& report);

}  // namespace infectest::preprocess

#endif  // INFECTEST_PREPROCESS_PREPROCESS_H_
