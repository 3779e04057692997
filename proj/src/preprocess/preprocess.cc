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

#include "preprocess/preprocess.h"

#include <algorithm>
#include <iterator>

#include "common/error.h"
#include "common/parallel.h"

namespace infectest::preprocess {

namespace {

bool Includes(const MutantSet& outer, const MutantSet& inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

struct TestResult {
  TestCoverage coverage;
  MutantSet probe_errors;
};

TestResult Observe(const lang::CheckedProgram& program,
                   const mutgen::MutantTable& table, const suite::TestCase& test,
                   const interp::RunOptions& options) {
  const interp::TracedRun run =
      interp::RunTraced(program, test.function, test.args, &table, options);
  TestResult result;
  result.coverage.test_id = test.id;
  for (const interp::TraceStep& step : run.trace.steps) {
    if (const auto* eval = std::get_if<interp::SiteEval>(&step)) {
      for (mutgen::MutantId id : table.AtNode(eval->site)) {
        result.coverage.covered.insert(id);
      }
    } else if (const auto* probe = std::get_if<interp::ProbeResult>(&step)) {
      if (probe->infected) result.coverage.infected.insert(probe->mutant);
      if (probe->probe_error) result.probe_errors.insert(probe->mutant);
    }
  }
  return result;
}

}  // namespace

PreprocessReport Preprocess(const lang::CheckedProgram& program,
                            const mutgen::MutantTable& table,
                            const suite::TestSuite& suite,
                            const PreprocessOptions& options) {
  std::vector<TestResult> results(suite.tests.size());
  ParallelFor(suite.tests.size(), options.threads, [&](std::size_t i) {
    results[i] = Observe(program, table, suite.tests[i], options.run);
  });

  PreprocessReport report;
  report.all = table.AllIds();
  for (TestResult& result : results) {
    report.covered.insert(result.coverage.covered.begin(),
                          result.coverage.covered.end());
    report.infected.insert(result.coverage.infected.begin(),
                           result.coverage.infected.end());
    report.probe_errors.insert(result.probe_errors.begin(), result.probe_errors.end());
    report.per_test.push_back(std::move(result.coverage));
  }
  report.original_runs = suite.tests.size();
  return report;
}

MutantSet PotentiallyEquivalent(const PreprocessReport& report) {
  MutantSet out;
  std::set_difference(report.covered.begin(), report.covered.end(),
                      report.infected.begin(), report.infected.end(),
                      std::inserter(out, out.end()));
  return out;
}

void VerifyReport(const PreprocessReport& report) {
  if (!Includes(report.covered, report.infected)) {
    throw InvariantViolation("infected mutants are not a subset of covered mutants");
  }
  if (!Includes(report.all, report.covered)) {
    throw InvariantViolation("covered mutants are not a subset of all mutants");
  }
  if (!Includes(report.infected, report.probe_errors)) {
    throw InvariantViolation("probe errors are not a subset of infected mutants");
  }
  MutantSet covered;
  MutantSet infected;
  for (const TestCoverage& t : report.per_test) {
    if (!Includes(t.covered, t.infected)) {
      throw InvariantViolation("test " + t.test_id + " infects mutants it does not cover");
    }
    covered.insert(t.covered.begin(), t.covered.end());
    infected.insert(t.infected.begin(), t.infected.end());
  }
  if (covered != report.covered || infected != report.infected) {
    throw InvariantViolation("aggregate sets differ from the union of per-test sets");
  }
}

}  // namespace infectest::preprocess
