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

#include "driver/oracle.h"

#include "common/error.h"
#include "common/parallel.h"
#include "solver/solver.h"

namespace infectest::driver {

namespace {

std::vector<std::vector<interp::Value>> AllInputs(const lang::FunctionDef& fn,
                                                  std::int64_t lo, std::int64_t hi) {
  const solver::Domain domain = solver::UniformDomain(fn.params, lo, hi);
  if (domain.Size() > kMaxOracleAssignments) {
    throw DomainError("domain of '" + fn.name + "' has more than " +
                     std::to_string(kMaxOracleAssignments) + " inputs");
  }
  std::vector<std::vector<interp::Value>> inputs;
  std::vector<std::int64_t> current;
  for (const solver::DomainVar& v : domain.vars) current.push_back(v.lo);
  for (;;) {
    std::vector<interp::Value> args;
    for (std::size_t i = 0; i < current.size(); ++i) {
      args.push_back(domain.vars[i].sort == lang::Type::kBool
                         ? interp::Value::Bool(current[i] != 0)
                         : interp::Value::Int(current[i]));
    }
    inputs.push_back(std::move(args));
    std::size_t k = current.size();
    while (k > 0 && current[k - 1] == domain.vars[k - 1].hi) {
      current[k - 1] = domain.vars[k - 1].lo;
      --k;
    }
    if (k == 0) break;
    ++current[k - 1];
  }
  return inputs;
}

}  // namespace

std::vector<OracleLabel> BruteForceOracle(const lang::CheckedProgram& program,
                                          const mutgen::MutantTable& table,
                                          const OracleOptions& options) {
  // Inputs and original outcomes per function that hosts a mutant.
  std::vector<std::vector<std::vector<interp::Value>>> inputs(program.functions().size());
  std::vector<std::vector<interp::Outcome>> expected(program.functions().size());
  for (const mutgen::Mutant& m : table.mutants()) {
    const std::size_t f = m.site.function;
    if (!inputs[f].empty()) continue;
    const lang::FunctionDef& fn = program.function(f);
    inputs[f] = AllInputs(fn, options.domain_lo, options.domain_hi);
    for (const auto& args : inputs[f]) {
      expected[f].push_back(interp::Run(program, fn.name, args, options.run));
    }
  }

  std::vector<OracleLabel> labels(table.size());
  ParallelFor(table.size(), options.threads, [&](std::size_t index) {
    const auto id = static_cast<mutgen::MutantId>(index);
    const std::size_t f = table.at(id).site.function;
    const lang::CheckedProgram mutated = mutgen::ApplyMutant(program, table, id);
    const std::string& name = program.function(f).name;
    OracleLabel& label = labels[index];
    label.mutant = id;
    for (std::size_t i = 0; i < inputs[f].size(); ++i) {
      if (interp::Run(mutated, name, inputs[f][i], options.run) != expected[f][i]) {
        label.equivalent = false;
        label.witness = inputs[f][i];
        break;
      }
    }
  });
  return labels;
}

}  // namespace infectest::driver
