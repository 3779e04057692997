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

#include <variant>

#include <gtest/gtest.h>

#include "analysis/analysis.h"
#include "driver/equivalence.h"
#include "driver/oracle.h"
#include "fixtures.h"
#include "interp/interpreter.h"
#include "preprocess/preprocess.h"

namespace infectest {
namespace {

using constraints::InfectionMode;
using driver::UnknownCause;
using driver::Verdict;

std::vector<interp::Value> ModelArgs(const solver::Assignment& model) {
  std::vector<interp::Value> args;
  for (const solver::Binding& b : model) {
    args.push_back(b.sort == lang::Type::kBool ? interp::Value::Bool(b.value != 0)
                                               : interp::Value::Int(b.value));
  }
  return args;
}

// Did running the original on `args` fire an infecting probe for `mutant`?
bool ProbeFires(const lang::CheckedProgram& p, const mutgen::MutantTable& t,
                const std::string& function, const std::vector<interp::Value>& args,
                mutgen::MutantId mutant) {
  const interp::TracedRun run = interp::RunTraced(p, function, args, &t);
  for (const interp::TraceStep& step : run.trace.steps) {
    const auto* probe = std::get_if<interp::ProbeResult>(&step);
    if (probe != nullptr && probe->mutant == mutant && probe->infected) return true;
  }
  return false;
}

class TriangleEquivalence : public ::testing::Test {
 protected:
  lang::CheckedProgram program = testing::Triangle();
  mutgen::MutantTable table = mutgen::GenerateMutants(program);
  suite::TestSuite suite = testing::LoadSuite(program, "t1.tests", "T1");
  preprocess::PreprocessReport report = preprocess::Preprocess(program, table, suite);
  driver::EquivalenceOptions options{.domain_lo = -5, .domain_hi = 10};
};

TEST_F(TriangleEquivalence, LocalVerdictsAgreeWithExecution) {
  const mutgen::MutantSet candidates = driver::LocalCandidates(report);
  EXPECT_EQ(candidates, preprocess::PotentiallyEquivalent(report));
  const std::vector<driver::EquivalenceVerdict> verdicts = driver::ClassifyEquivalence(
      program, table, suite, candidates, InfectionMode::kLocal, options);
  ASSERT_EQ(verdicts.size(), candidates.size());
  const std::vector<driver::OracleLabel> labels =
      driver::BruteForceOracle(program, table, {.domain_lo = -5, .domain_hi = 10});
  std::size_t equivalent = 0;
  for (const driver::EquivalenceVerdict& v : verdicts) {
    EXPECT_NE(v.status, Verdict::kUnknown);
    if (v.status == Verdict::kEquivalentOverDomain) {
      ++equivalent;
      EXPECT_TRUE(labels[v.mutant].equivalent) << mutgen::MutantDescriptor(table, v.mutant);
      for (const driver::PathEvidence& e : v.paths) {
        EXPECT_EQ(e.result.status, solver::SolveStatus::kUnsatOverDomain);
      }
    } else {
      ASSERT_TRUE(v.model.has_value());
      ASSERT_TRUE(v.witness_path.has_value());
      EXPECT_TRUE(ProbeFires(program, table, "classify", ModelArgs(*v.model), v.mutant))
          << mutgen::MutantDescriptor(table, v.mutant);
    }
  }
  EXPECT_GE(equivalent, 1u);
}

TEST_F(TriangleEquivalence, ThreadCountDoesNotChangeVerdicts) {
  const mutgen::MutantSet candidates = driver::LocalCandidates(report);
  const auto a = driver::ClassifyEquivalence(program, table, suite, candidates,
                                             InfectionMode::kLocal, options);
  driver::EquivalenceOptions parallel = options;
  parallel.threads = 4;
  const auto b = driver::ClassifyEquivalence(program, table, suite, candidates,
                                             InfectionMode::kLocal, parallel);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].mutant, b[i].mutant);
    EXPECT_EQ(a[i].status, b[i].status);
    EXPECT_EQ(a[i].model, b[i].model);
  }
}

TEST_F(TriangleEquivalence, OutermostCandidatesAreInfectedAndLive) {
  const analysis::AnalysisReport a = analysis::RunAnalysis(
      program, table, suite, analysis::Filter::kInfection, &report);
  const mutgen::MutantSet candidates = driver::OutermostCandidates(report, a);
  for (mutgen::MutantId id : candidates) {
    EXPECT_TRUE(report.infected.contains(id));
    EXPECT_FALSE(a.killed.contains(id));
  }
  const auto verdicts = driver::ClassifyEquivalence(program, table, suite, candidates,
                                                    InfectionMode::kOutermost, options);
  for (const driver::EquivalenceVerdict& v : verdicts) {
    EXPECT_EQ(v.mode, InfectionMode::kOutermost);
  }
}

TEST_F(TriangleEquivalence, TinyBudgetGivesUnknown) {
  driver::EquivalenceOptions tiny = options;
  tiny.budget = 1;
  const auto verdicts = driver::ClassifyEquivalence(
      program, table, suite, driver::LocalCandidates(report), InfectionMode::kLocal, tiny);
  for (const driver::EquivalenceVerdict& v : verdicts) {
    EXPECT_NE(v.status, Verdict::kEquivalentOverDomain);
    if (v.status == Verdict::kUnknown) {
      EXPECT_EQ(v.reason, UnknownCause::kSolverBudget);
    }
  }
}

TEST(Equivalence, SitesBehindLoopsAreUnknown) {
  const lang::CheckedProgram p = driver::LoadProgram(testing::CorpusPath("sumto.ml0"));
  const mutgen::MutantTable t = mutgen::GenerateMutants(p);
  const suite::TestSuite s = testing::LoadSuite(p, "sumto.tests", "S");
  mutgen::MutantSet behind;
  for (const mutgen::Mutant& m : t.mutants()) {
    if (m.site.loc.line >= 8) behind.insert(m.id);
  }
  ASSERT_FALSE(behind.empty());
  for (const auto& v :
       driver::ClassifyEquivalence(p, t, s, behind, InfectionMode::kLocal)) {
    EXPECT_EQ(v.status, Verdict::kUnknown);
    EXPECT_EQ(v.reason, UnknownCause::kLoops);
  }
}

TEST(Equivalence, InfectableButEquivalentIsNotCalledEquivalent) {
  const lang::CheckedProgram p = driver::LoadProgram(testing::CorpusPath("clamp.ml0"));
  const mutgen::MutantTable t = mutgen::GenerateMutants(p);
  const suite::TestSuite s = testing::LoadSuite(p, "clamp.tests", "C");
  const preprocess::PreprocessReport r = preprocess::Preprocess(p, t, s);
  const mutgen::MutantId le = testing::FindMutant(t, 3, 9, lang::BinaryOp::kLe);
  ASSERT_TRUE(driver::LocalCandidates(r).contains(le));
  const auto verdicts = driver::ClassifyEquivalence(p, t, s, {le}, InfectionMode::kLocal);
  ASSERT_EQ(verdicts.size(), 1u);
  EXPECT_EQ(verdicts[0].status, Verdict::kKillable);
  ASSERT_TRUE(verdicts[0].model.has_value());
  // a < 0 and a <= 0 differ only at a = 0.
  EXPECT_EQ((*verdicts[0].model)[0].value, 0);
  EXPECT_TRUE(driver::BruteForceOracle(p, t)[le].equivalent);
}

TEST(Equivalence, NamesAreStable) {
  EXPECT_EQ(driver::VerdictName(Verdict::kEquivalentOverDomain), "equivalent-over-domain");
  EXPECT_EQ(driver::VerdictName(Verdict::kKillable), "killable");
  EXPECT_EQ(driver::UnknownCauseName(UnknownCause::kLoops), "loops");
}

}  // namespace
}  // namespace infectest
