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

#include "driver/augment.h"

namespace infectest::driver {

suite::TestSuite AugmentSuite(const lang::CheckedProgram& program,
                              const mutgen::MutantTable& table,
                              const suite::TestSuite& suite,
                              std::span<const EquivalenceVerdict> verdicts,
                              std::string name, const interp::RunOptions& options) {
  suite::TestSuite out = suite;
  out.name = std::move(name);
  for (const EquivalenceVerdict& v : verdicts) {
    if (v.status != Verdict::kKillable || !v.model) continue;
    const std::string& function = program.function(table.at(v.mutant).site.function).name;
    std::vector<interp::Value> args;
    for (const solver::Binding& b : *v.model) {
      args.push_back(b.sort == lang::Type::kBool ? interp::Value::Bool(b.value != 0)
                                                 : interp::Value::Int(b.value));
    }
    if (out.Contains(function, args)) continue;
    const std::string base = "mut" + std::to_string(v.mutant) + "-" +
                             std::string(constraints::InfectionModeName(v.mode));
    std::string id = base;
    for (int n = 2; out.HasId(id); ++n) id = base + "-" + std::to_string(n);
    out.tests.push_back(suite::MakeTest(program, std::move(id), function, std::move(args),
                                        options));
  }
  return out;
}

}  // namespace infectest::driver
