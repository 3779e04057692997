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

#include "analysis/analysis.h"

#include <algorithm>

#include "common/error.h"
#include "common/parallel.h"

namespace infectest::analysis {

namespace {

double Reduction(std::size_t baseline, std::size_t reduced) {
  if (baseline == 0) return 0.0;
  return 1.0 - static_cast<double>(reduced) / static_cast<double>(baseline);
}

}  // namespace

std::string_view FilterName(Filter filter) {
  switch (filter) {
    case Filter::kNone:
      return "none";
    case Filter::kCoverage:
      return "coverage";
    case Filter::kInfection:
      return "infection";
  }
  return "?";
}

std::optional<Filter> FilterFromName(std::string_view name) {
  for (Filter f : {Filter::kNone, Filter::kCoverage, Filter::kInfection}) {
    if (FilterName(f) == name) return f;
  }
  return std::nullopt;
}

std::string_view StatusName(MutantStatus status) {
  switch (status) {
    case MutantStatus::kKilled:
      return "killed";
    case MutantStatus::kLive:
      return "live";
    case MutantStatus::kSkippedUncovered:
      return "skipped-uncovered";
    case MutantStatus::kSkippedUninfected:
      return "skipped-uninfected";
  }
  return "?";
}

MutantSet AnalysisReport::WithStatus(MutantStatus status) const {
  MutantSet out;
  for (std::size_t id = 0; id < per_mutant.size(); ++id) {
    if (per_mutant[id].status == status) out.insert(static_cast<MutantId>(id));
  }
  return out;
}

AnalysisReport RunAnalysis(const lang::CheckedProgram& program,
                           const mutgen::MutantTable& table,
                           const suite::TestSuite& suite, Filter filter,
                           const preprocess::PreprocessReport* report,
                           const AnalysisOptions& options) {
  if (filter != Filter::kNone && report == nullptr) {
    throw UsageError("filter '" + std::string(FilterName(filter)) +
                     "' needs a preprocess report");
  }
  if (report != nullptr && report->per_test.size() != suite.tests.size()) {
    throw UsageError("preprocess report was computed for a different suite");
  }

  // The original outcomes are the kill oracle.
  std::vector<interp::Outcome> original;
  original.reserve(suite.tests.size());
  for (const suite::TestCase& test : suite.tests) {
    original.push_back(interp::Run(program, test.function, test.args, options.run));
  }

  AnalysisReport out;
  out.filter = filter;
  out.per_mutant.resize(table.size());
  ParallelFor(table.size(), options.threads, [&](std::size_t index) {
    const auto id = static_cast<MutantId>(index);
    MutantResult& result = out.per_mutant[index];
    std::vector<std::size_t> selected;
    for (std::size_t t = 0; t < suite.tests.size(); ++t) {
      if (filter == Filter::kCoverage && !report->per_test[t].covered.count(id)) continue;
      if (filter == Filter::kInfection && !report->per_test[t].infected.count(id)) continue;
      selected.push_back(t);
    }
    if (selected.empty() && filter != Filter::kNone) {
      result.status = report->covered.count(id) ? MutantStatus::kSkippedUninfected
                                                : MutantStatus::kSkippedUncovered;
      return;
    }
    const lang::CheckedProgram mutated = mutgen::ApplyMutant(program, table, id);
    result.status = MutantStatus::kLive;
    for (std::size_t t : selected) {
      const suite::TestCase& test = suite.tests[t];
      ++result.executions;
      if (interp::Run(mutated, test.function, test.args, options.run) != original[t]) {
        result.status = MutantStatus::kKilled;
        result.killing_tests.push_back(test.id);
        break;
      }
    }
  });

  for (std::size_t id = 0; id < out.per_mutant.size(); ++id) {
    const MutantResult& result = out.per_mutant[id];
    out.executed_pairs += result.executions;
    if (result.executions > 0) ++out.executed_mutants;
    if (result.status == MutantStatus::kKilled) out.killed.insert(static_cast<MutantId>(id));
  }
  out.mutation_score =
      table.size() == 0 ? 0.0
                        : static_cast<double>(out.killed.size()) / static_cast<double>(table.size());

  if (report != nullptr) {
    const MutantSet& bound = filter == Filter::kInfection ? report->infected : report->covered;
    if (!std::includes(bound.begin(), bound.end(), out.killed.begin(), out.killed.end())) {
      throw InvariantViolation("a killed mutant lies outside the " +
                               std::string(filter == Filter::kInfection ? "infected"
                                                                        : "covered") +
                               " set");
    }
  }
  return out;
}

SavingsReport CompareFilters(const lang::CheckedProgram& program,
                             const mutgen::MutantTable& table,
                             const suite::TestSuite& suite,
                             const preprocess::PreprocessReport& report,
                             const AnalysisOptions& options) {
  SavingsReport savings;
  for (Filter f : {Filter::kNone, Filter::kCoverage, Filter::kInfection}) {
    savings.reports[static_cast<std::size_t>(f)] =
        RunAnalysis(program, table, suite, f, &report, options);
  }
  const AnalysisReport& none = savings.at(Filter::kNone);
  const AnalysisReport& coverage = savings.at(Filter::kCoverage);
  const AnalysisReport& infection = savings.at(Filter::kInfection);
  if (none.killed != coverage.killed || coverage.killed != infection.killed) {
    throw InvariantViolation("filters disagree on the killed mutant set");
  }
  if (!(infection.executed_pairs <= coverage.executed_pairs &&
        coverage.executed_pairs <= none.executed_pairs)) {
    throw InvariantViolation("executed pair counts do not shrink as the filter strengthens");
  }
  savings.pair_reduction_vs_coverage =
      Reduction(coverage.executed_pairs, infection.executed_pairs);
  savings.pair_reduction_vs_none = Reduction(none.executed_pairs, coverage.executed_pairs);
  savings.mutant_reduction_vs_coverage =
      Reduction(coverage.executed_mutants, infection.executed_mutants);
  return savings;
}

}  // namespace infectest::analysis
