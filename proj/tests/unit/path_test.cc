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

#include <cstddef>
#include <variant>

#include <gtest/gtest.h>

#include "common/error.h"
#include "constraints/infection.h"
#include "constraints/path.h"
#include "fixtures.h"
#include "formula_oracle.h"
#include "interp/interpreter.h"
#include "lang/sites.h"

namespace infectest {
namespace {

using constraints::Assume;
using constraints::AssumeOrigin;
using constraints::Incompleteness;
using constraints::PathScript;
using constraints::PathStep;
using lang::BinaryOp;

lang::NodeId SiteAt(const mutgen::MutantTable& table, int line, int column, BinaryOp op) {
  return table.at(testing::FindMutant(table, line, column, op)).site.node;
}

std::vector<Assume> Assumes(const PathScript& script) {
  std::vector<Assume> out;
  for (const PathStep& step : script.steps) {
    if (const auto* a = std::get_if<Assume>(&step)) out.push_back(*a);
  }
  return out;
}

class TrianglePaths : public ::testing::Test {
 protected:
  lang::CheckedProgram program = testing::Triangle();
  mutgen::MutantTable table = mutgen::GenerateMutants(program);

  interp::ExecutionTrace Trace(std::initializer_list<std::int64_t> args) {
    return interp::RunTraced(program, "classify", testing::Ints(args), nullptr).trace;
  }
};

TEST_F(TrianglePaths, SecondConjunctOfLineSix) {
  const lang::NodeId site = SiteAt(table, 6, 19, BinaryOp::kLe);
  const PathScript script = constraints::TraceToPath(program, Trace({1, 1, 2}), site);
  const std::vector<Assume> assumes = Assumes(script);
  ASSERT_EQ(assumes.size(), 2u);
  EXPECT_EQ(constraints::ToString(assumes[0].cond),
            "(or (<= a 0) (<= b 0) (<= c 0))");
  EXPECT_FALSE(assumes[0].polarity);
  EXPECT_EQ(assumes[0].origin, AssumeOrigin::kBranch);
  EXPECT_EQ(constraints::ToString(assumes[1].cond), "(== a b)");
  EXPECT_TRUE(assumes[1].polarity);
  EXPECT_EQ(assumes[1].origin, AssumeOrigin::kShortCircuit);

  const constraints::PathSet set = constraints::EnumeratePaths(program, site, 64);
  EXPECT_TRUE(set.complete);
  ASSERT_EQ(set.paths.size(), 1u);
  EXPECT_EQ(set.paths[0], script);
}

TEST_F(TrianglePaths, FirstStatementSiteHasNoAssumptions) {
  const lang::NodeId site = SiteAt(table, 2, 9, BinaryOp::kLt);
  const PathScript script = constraints::TraceToPath(program, Trace({0, 1, 1}), site);
  EXPECT_TRUE(script.steps.empty());
  const constraints::PathSet set = constraints::EnumeratePaths(program, site, 64);
  ASSERT_EQ(set.paths.size(), 1u);
  EXPECT_TRUE(set.paths[0].steps.empty());
}

TEST_F(TrianglePaths, DisjunctGuardedByFalseLeftOperand) {
  const lang::NodeId site = SiteAt(table, 2, 19, BinaryOp::kLt);
  const std::vector<PathStep> guards = constraints::SiteGuards(program, site);
  ASSERT_EQ(guards.size(), 1u);
  const Assume& a = std::get<Assume>(guards[0]);
  EXPECT_EQ(constraints::ToString(a.cond), "(<= a 0)");
  EXPECT_FALSE(a.polarity);
}

TEST_F(TrianglePaths, TraceMustReachTheSite) {
  const lang::NodeId site = SiteAt(table, 6, 19, BinaryOp::kLe);
  EXPECT_THROW(constraints::TraceToPath(program, Trace({0, 1, 1}), site), UsageError);
}

TEST_F(TrianglePaths, PathBoundTruncates) {
  // Line 11 is reached through either branch of line 10.
  const lang::NodeId site = SiteAt(table, 11, 9, BinaryOp::kLe);
  const constraints::PathSet two = constraints::EnumeratePaths(program, site, 2);
  EXPECT_TRUE(two.complete);
  EXPECT_EQ(two.paths.size(), 2u);
  const constraints::PathSet one = constraints::EnumeratePaths(program, site, 1);
  EXPECT_FALSE(one.complete);
  EXPECT_EQ(one.reason, Incompleteness::kPathBound);
  ASSERT_EQ(one.paths.size(), 1u);
  EXPECT_EQ(one.paths[0], two.paths[0]);
}

TEST_F(TrianglePaths, EightPathsReachTheScaleneTest) {
  // Three independent two-way branches on lines 10 to 12.
  const lang::NodeId site = SiteAt(table, 13, 13, BinaryOp::kLe);
  const constraints::PathSet set = constraints::EnumeratePaths(program, site, 64);
  EXPECT_TRUE(set.complete);
  EXPECT_EQ(set.paths.size(), 8u);
}

TEST_F(TrianglePaths, EveryTestSatisfiesItsOwnReachability) {
  const suite::TestSuite s = testing::LoadSuite(program, "t1.tests", "T1");
  for (const suite::TestCase& test : s.tests) {
    const interp::ExecutionTrace trace =
        interp::RunTraced(program, test.function, test.args, nullptr).trace;
    const testing::Env env = {{"a", test.args[0].as_int()},
                              {"b", test.args[1].as_int()},
                              {"c", test.args[2].as_int()}};
    for (const lang::MutationSite& site : lang::ExpressionSites(program)) {
      bool reached = false;
      for (const interp::TraceStep& step : trace.steps) {
        const auto* e = std::get_if<interp::SiteEval>(&step);
        if (e != nullptr && e->site == site.node) reached = true;
      }
      if (!reached) continue;
      const constraints::Formula f = constraints::Backsubstitute(
          constraints::TraceToPath(program, trace, site.node), constraints::Formula::Bool(true));
      EXPECT_TRUE(testing::OracleHolds(f, env)) << test.id << " " << constraints::ToString(f);
    }
  }
}

TEST(LoopPaths, IterationsAreUnrolled) {
  const lang::CheckedProgram p = testing::Compile(
      "fn g(n:int)->int { i = 0; while (i < n) { i = i + 1; } return i * 2; }");
  const mutgen::MutantTable t = mutgen::GenerateMutants(p);
  const lang::NodeId site = SiteAt(t, 1, 65, BinaryOp::kAdd);
  const interp::ExecutionTrace trace =
      interp::RunTraced(p, "g", testing::Ints({3}), nullptr).trace;
  const PathScript script = constraints::TraceToPath(p, trace, site);
  const std::vector<Assume> assumes = Assumes(script);
  ASSERT_EQ(assumes.size(), 4u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(assumes[i].polarity);
  EXPECT_FALSE(assumes[3].polarity);
  const constraints::Formula f =
      constraints::Backsubstitute(script, constraints::Formula::Bool(true));
  EXPECT_TRUE(testing::OracleHolds(f, {{"n", 3}}));
  EXPECT_FALSE(testing::OracleHolds(f, {{"n", 2}}));
  EXPECT_FALSE(testing::OracleHolds(f, {{"n", 4}}));
}

TEST(LoopPaths, SiteInsideLoopIsIncomplete) {
  const lang::CheckedProgram p = driver::LoadProgram(testing::CorpusPath("sumto.ml0"));
  const mutgen::MutantTable t = mutgen::GenerateMutants(p);
  const lang::NodeId body = SiteAt(t, 10, 11, BinaryOp::kSub);
  const constraints::PathSet bare = constraints::EnumeratePaths(p, body, 64);
  EXPECT_FALSE(bare.complete);
  EXPECT_EQ(bare.reason, Incompleteness::kLoops);

  const suite::TestSuite s = testing::LoadSuite(p, "sumto.tests", "S");
  std::vector<interp::ExecutionTrace> traces;
  for (const suite::TestCase& test : s.tests) {
    traces.push_back(interp::RunTraced(p, test.function, test.args, nullptr).trace);
  }
  const constraints::PathSet observed = constraints::EnumeratePaths(p, body, 64, traces);
  EXPECT_FALSE(observed.complete);
  EXPECT_EQ(observed.reason, Incompleteness::kLoops);
  // Only sumto(3) enters the loop body.
  EXPECT_EQ(observed.paths.size(), 1u);
}

TEST(LoopPaths, SiteBeforeLoopIsComplete) {
  const lang::CheckedProgram p = driver::LoadProgram(testing::CorpusPath("sumto.ml0"));
  const mutgen::MutantTable t = mutgen::GenerateMutants(p);
  const constraints::PathSet set =
      constraints::EnumeratePaths(p, SiteAt(t, 3, 9, BinaryOp::kLe), 64);
  EXPECT_TRUE(set.complete);
  EXPECT_EQ(set.paths.size(), 1u);
}

}  // namespace
}  // namespace infectest
