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

#ifndef INFECTEST_DRIVER_PIPELINE_H_
#define INFECTEST_DRIVER_PIPELINE_H_

#include <string>
#include <vector>

#include "driver/equivalence.h"
#include "driver/reports.h"
#include "lang/program.h"

namespace infectest::driver {

// Throws IoError.
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& text);

// Parses and checks a source file; the base name becomes the source name.
lang::CheckedProgram LoadProgram(const std::string& path);

struct PipelineConfig {
  std::string program_path;
  std::string suite_path;
  std::string out_dir;
  EquivalenceOptions equivalence;
  // Second pass over the live, infected mutants of T2 to build T3.
  bool outermost = true;
  // Cross-check every verdict against the brute-force oracle.
  bool oracle = false;
};

struct PipelineResult {
  std::vector<SuiteRow> rows;  // T1, T2, and T3 when the second pass ran
  std::vector<VerdictCounts> verdicts;
  std::vector<std::string> files;  // written, in order
  std::vector<mutgen::MutantId> false_equivalences;
};

// preprocess -> filtered analyses -> local equivalence -> T2 -> outermost
// equivalence -> T3, writing every report into out_dir. Throws
// InvariantViolation (after writing the reports) if the oracle contradicts an
// equivalence verdict or a suite loses kills as it grows.
PipelineResult RunPipeline(const PipelineConfig& config);

}  // namespace infectest::driver

#endif  // INFECTEST_DRIVER_PIPELINE_H_
