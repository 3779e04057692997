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

#include "driver/pipeline.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "common/error.h"
#include "driver/augment.h"
#include "driver/oracle.h"
#include "lang/parser.h"

namespace infectest::driver {

namespace fs = std::filesystem;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text) || !out.flush()) throw IoError("cannot write '" + path + "'");
}

lang::CheckedProgram LoadProgram(const std::string& path) {
  return lang::Check(lang::Parse(ReadFile(path), fs::path(path).filename().string()));
}

namespace {

class Stage {
 public:
  Stage(const PipelineConfig& config, PipelineResult& result)
      : dir_(config.out_dir), result_(result) {}

  void Write(const std::string& name, const std::string& text) {
    const std::string path = (dir_ / name).string();
    WriteFile(path, text);
    result_.files.push_back(path);
  }

 private:
  fs::path dir_;
  PipelineResult& result_;
};

SuiteRow Row(const suite::TestSuite& suite, const preprocess::PreprocessReport& pre,
             const analysis::AnalysisReport& analysis) {
  return SuiteRow{suite.name, suite.tests.size(), pre.covered.size(), pre.infected.size(),
                  analysis.killed.size(), analysis.mutation_score};
}

void CheckOracle(std::span<const EquivalenceVerdict> verdicts,
                 std::span<const OracleLabel> labels, PipelineResult& result) {
  for (const EquivalenceVerdict& v : verdicts) {
    if (v.status == Verdict::kEquivalentOverDomain && !labels[v.mutant].equivalent) {
      result.false_equivalences.push_back(v.mutant);
    }
  }
}

}  // namespace

PipelineResult RunPipeline(const PipelineConfig& config) {
  const lang::CheckedProgram program = LoadProgram(config.program_path);
  const EquivalenceOptions& eq = config.equivalence;
  const suite::TestSuite t1 =
      suite::ParseSuite(program, ReadFile(config.suite_path), "T1", eq.run);
  std::error_code ec;
  fs::create_directories(config.out_dir, ec);
  if (ec) throw IoError("cannot create '" + config.out_dir + "': " + ec.message());

  PipelineResult result;
  Stage out(config, result);
  const mutgen::MutantTable table = mutgen::GenerateMutants(program);
  const preprocess::PreprocessOptions pre_options{eq.run, eq.threads};
  const analysis::AnalysisOptions analysis_options{eq.run, eq.threads};

  std::vector<OracleLabel> labels;
  if (config.oracle) {
    labels = BruteForceOracle(program, table,
                              OracleOptions{eq.domain_lo, eq.domain_hi, eq.run, eq.threads});
  }

  // T1: preprocessing and the three filters.
  const preprocess::PreprocessReport pre1 = preprocess::Preprocess(program, table, t1, pre_options);
  preprocess::VerifyReport(pre1);
  out.Write("preprocess.json", PreprocessJson(table, t1, pre1));
  const analysis::SavingsReport savings =
      analysis::CompareFilters(program, table, t1, pre1, analysis_options);
  for (analysis::Filter f :
       {analysis::Filter::kNone, analysis::Filter::kCoverage, analysis::Filter::kInfection}) {
    out.Write("analysis-" + std::string(analysis::FilterName(f)) + ".json",
              AnalysisJson(table, t1, savings.at(f)));
  }
  out.Write("savings.json", SavingsJson(t1, savings));
  const analysis::AnalysisReport& a1 = savings.at(analysis::Filter::kInfection);
  result.rows.push_back(Row(t1, pre1, a1));

  // Local equivalence over C - I, and T2 from its models.
  const std::vector<EquivalenceVerdict> local = ClassifyEquivalence(
      program, table, t1, LocalCandidates(pre1), constraints::InfectionMode::kLocal, eq);
  out.Write("equivalence.json", EquivalenceJson(table, local, eq, labels));
  result.verdicts.push_back(CountVerdicts(local, constraints::InfectionMode::kLocal));
  if (!labels.empty()) CheckOracle(local, labels, result);

  const suite::TestSuite t2 = AugmentSuite(program, table, t1, local, "T2", eq.run);
  out.Write("t2.tests", suite::FormatSuite(t2));
  const preprocess::PreprocessReport pre2 = preprocess::Preprocess(program, table, t2, pre_options);
  preprocess::VerifyReport(pre2);
  const analysis::AnalysisReport a2 = analysis::RunAnalysis(
      program, table, t2, analysis::Filter::kInfection, &pre2, analysis_options);
  out.Write("analysis-t2.json", AnalysisJson(table, t2, a2));
  result.rows.push_back(Row(t2, pre2, a2));
  if (!std::includes(a2.killed.begin(), a2.killed.end(), a1.killed.begin(), a1.killed.end())) {
    throw InvariantViolation("T2 lost kills of T1");
  }

  if (config.outermost) {
    const std::vector<EquivalenceVerdict> outer =
        ClassifyEquivalence(program, table, t2, OutermostCandidates(pre2, a2),
                            constraints::InfectionMode::kOutermost, eq);
    out.Write("equivalence-outermost.json", EquivalenceJson(table, outer, eq, labels));
    result.verdicts.push_back(CountVerdicts(outer, constraints::InfectionMode::kOutermost));
    if (!labels.empty()) CheckOracle(outer, labels, result);

    const suite::TestSuite t3 = AugmentSuite(program, table, t2, outer, "T3", eq.run);
    out.Write("t3.tests", suite::FormatSuite(t3));
    const preprocess::PreprocessReport pre3 =
        preprocess::Preprocess(program, table, t3, pre_options);
    preprocess::VerifyReport(pre3);
    const analysis::AnalysisReport a3 = analysis::RunAnalysis(
        program, table, t3, analysis::Filter::kInfection, &pre3, analysis_options);
    out.Write("analysis-t3.json", AnalysisJson(table, t3, a3));
    result.rows.push_back(Row(t3, pre3, a3));
    if (!std::includes(a3.killed.begin(), a3.killed.end(), a2.killed.begin(), a2.killed.end())) {
      throw InvariantViolation("T3 lost kills of T2");
    }
  }

  out.Write("summary.json", SummaryJson(table.source_name(), table.size(), eq, result.rows,
                                        result.verdicts, config.oracle));
  if (!result.false_equivalences.empty()) {
    std::string ids;
    for (mutgen::MutantId id : result.false_equivalences) {
      ids += (ids.empty() ? "" : ", ") + std::to_string(id);
    }
    throw InvariantViolation("the oracle distinguishes mutants classified equivalent: " + ids);
  }
  return result;
}

}  // namespace infectest::driver
