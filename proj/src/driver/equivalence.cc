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

#include "driver/equivalence.h"

#include <algorithm>
#include <iterator>

#include "common/parallel.h"

namespace infectest::driver {

std::string_view VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kEquivalentOverDomain:
      return "equivalent-over-domain";
    case Verdict::kKillable:
      return "killable";
    case Verdict::kUnknown:
      return "unknown";
  }
  return "?";
}

std::string_view UnknownCauseName(UnknownCause cause) {
  switch (cause) {
    case UnknownCause::kNone:
      return "none";
    case UnknownCause::kLoops:
      return "loops";
    case UnknownCause::kPathBound:
      return "path-bound";
    case UnknownCause::kSolverBudget:
      return "solver-budget";
  }
  return "?";
}

MutantSet LocalCandidates(const preprocess::PreprocessReport& report) {
  return preprocess::PotentiallyEquivalent(report);
}

MutantSet OutermostCandidates(const preprocess::PreprocessReport& report,
                              const analysis::AnalysisReport& analysis) {
  MutantSet out;
  for (MutantId id : report.infected) {
    if (id < analysis.per_mutant.size() &&
        analysis.per_mutant[id].status == analysis::MutantStatus::kLive) {
      out.insert(id);
    }
  }
  return out;
}

std::vector<EquivalenceVerdict> ClassifyEquivalence(
    const lang::CheckedProgram& program, const mutgen::MutantTable& table,
    const suite::TestSuite& suite, const MutantSet& candidates,
    constraints::InfectionMode mode, const EquivalenceOptions& options) {
  std::vector<interp::ExecutionTrace> traces;
  traces.reserve(suite.tests.size());
  for (const suite::TestCase& test : suite.tests) {
    traces.push_back(
        interp::RunTraced(program, test.function, test.args, nullptr, options.run).trace);
  }
  std::vector<solver::Domain> domains;
  for (const lang::FunctionDef& fn : program.functions()) {
    domains.push_back(solver::UniformDomain(fn.params, options.domain_lo, options.domain_hi));
  }

  const std::vector<MutantId> ids(candidates.begin(), candidates.end());
  std::vector<EquivalenceVerdict> verdicts(ids.size());
  ParallelFor(ids.size(), options.threads, [&](std::size_t index) {
    EquivalenceVerdict& v = verdicts[index];
    v.mutant = ids[index];
    v.mode = mode;
    const lang::NodeId site = table.at(v.mutant).site.node;
    const constraints::PathSet paths =
        constraints::EnumeratePaths(program, site, options.path_bound, traces);
    bool solver_unknown = false;
    for (const constraints::PathScript& script : paths.paths) {
      PathEvidence evidence{script, {}, {}};
      evidence.formula = constraints::BuildConstraint(program, table, v.mutant, script, mode);
      evidence.result =
          solver::Solve(evidence.formula, domains[script.function], options.budget);
      v.paths.push_back(std::move(evidence));
      const solver::SolveResult& r = v.paths.back().result;
      if (r.status == solver::SolveStatus::kSat) {
        v.witness_path = v.paths.size() - 1;
        v.model = r.model;
        break;
      }
      if (r.status == solver::SolveStatus::kUnknown) solver_unknown = true;
    }
    if (paths.reason == constraints::Incompleteness::kLoops) {
      v.status = Verdict::kUnknown;
      v.reason = UnknownCause::kLoops;
    } else if (v.model) {
      v.status = Verdict::kKillable;
    } else if (!paths.complete) {
      v.status = Verdict::kUnknown;
      v.reason = UnknownCause::kPathBound;
    } else if (solver_unknown) {
      v.status = Verdict::kUnknown;
      v.reason = UnknownCause::kSolverBudget;
    } else {
      v.status = Verdict::kEquivalentOverDomain;
    }
  });
  return verdicts;
}

}  // namespace infectest::driver
