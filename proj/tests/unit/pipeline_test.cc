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

#include <filesystem>
#include <string>

#include <unistd.h>

#include <gtest/gtest.h>
#include <json.hpp>

#include "analysis/analysis.h"
#include "common/error.h"
#include "driver/pipeline.h"
#include "fixtures.h"

namespace infectest {
namespace {

namespace fs = std::filesystem;

fs::path ScratchDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() /
                       ("infectest-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  return dir;
}

driver::PipelineConfig TriangleConfig(const fs::path& out) {
  driver::PipelineConfig c;
  c.program_path = testing::CorpusPath("triangle.ml0");
  c.suite_path = testing::CorpusPath("t1.tests");
  c.out_dir = out.string();
  return c;
}

TEST(Pipeline, WritesEveryReport) {
  const fs::path out = ScratchDir("files");
  const driver::PipelineResult r = driver::RunPipeline(TriangleConfig(out));
  for (const char* name :
       {"preprocess.json", "analysis-none.json", "analysis-coverage.json",
        "analysis-infection.json", "savings.json", "equivalence.json", "t2.tests",
        "analysis-t2.json", "equivalence-outermost.json", "t3.tests", "analysis-t3.json",
        "summary.json"}) {
    EXPECT_TRUE(fs::exists(out / name)) << name;
  }
  EXPECT_EQ(r.files.size(), 12u);
  ASSERT_EQ(r.rows.size(), 3u);
  EXPECT_LE(r.rows[0].killed, r.rows[1].killed);
  EXPECT_LE(r.rows[1].killed, r.rows[2].killed);

  const lang::CheckedProgram p = testing::Triangle();
  const mutgen::MutantTable t = mutgen::GenerateMutants(p);
  const suite::TestSuite t1 = testing::LoadSuite(p, "t1.tests", "T1");
  EXPECT_EQ(r.rows[0].killed,
            analysis::RunAnalysis(p, t, t1, analysis::Filter::kNone, nullptr).killed.size());
  const suite::TestSuite t2 =
      suite::ParseSuite(p, driver::ReadFile((out / "t2.tests").string()), "T2");
  EXPECT_EQ(r.rows[1].tests, t2.tests.size());

  const nlohmann::json summary = nlohmann::json::parse(driver::ReadFile((out / "summary.json").string()));
  EXPECT_EQ(summary["mutants"], t.size());
  fs::remove_all(out);
}

TEST(Pipeline, LocalOnlySkipsSecondPass) {
  const fs::path out = ScratchDir("local");
  driver::PipelineConfig c = TriangleConfig(out);
  c.outermost = false;
  const driver::PipelineResult r = driver::RunPipeline(c);
  EXPECT_EQ(r.rows.size(), 2u);
  EXPECT_FALSE(fs::exists(out / "t3.tests"));
  fs::remove_all(out);
}

TEST(Pipeline, ReportsAreDeterministic) {
  const fs::path a = ScratchDir("det-a");
  const fs::path b = ScratchDir("det-b");
  driver::PipelineConfig ca = TriangleConfig(a);
  driver::PipelineConfig cb = TriangleConfig(b);
  cb.equivalence.threads = 4;
  const driver::PipelineResult ra = driver::RunPipeline(ca);
  driver::RunPipeline(cb);
  for (const std::string& file : ra.files) {
    const std::string name = fs::path(file).filename().string();
    EXPECT_EQ(driver::ReadFile((a / name).string()), driver::ReadFile((b / name).string()))
        << name;
  }
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST(Pipeline, OracleFindsNoFalseEquivalence) {
  const fs::path out = ScratchDir("oracle");
  driver::PipelineConfig c = TriangleConfig(out);
  c.oracle = true;
  c.equivalence.domain_lo = -5;
  c.equivalence.domain_hi = 10;
  const driver::PipelineResult r = driver::RunPipeline(c);
  EXPECT_TRUE(r.false_equivalences.empty());
  fs::remove_all(out);
}

TEST(Pipeline, MissingInputsThrow) {
  const fs::path out = ScratchDir("missing");
  driver::PipelineConfig c = TriangleConfig(out);
  c.program_path = testing::CorpusPath("absent.ml0");
  EXPECT_THROW(driver::RunPipeline(c), IoError);
  c = TriangleConfig(out);
  c.suite_path = testing::CorpusPath("absent.tests");
  EXPECT_THROW(driver::RunPipeline(c), IoError);
  fs::remove_all(out);
}

}  // namespace
}  // namespace infectest
