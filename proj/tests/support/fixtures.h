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

#ifndef INFECTEST_TESTS_SUPPORT_FIXTURES_H_
#define INFECTEST_TESTS_SUPPORT_FIXTURES_H_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "driver/pipeline.h"
#include "interp/value.h"
#include "lang/parser.h"
#include "lang/program.h"
#include "mutgen/mutants.h"
#include "suite/suite.h"

namespace infectest::testing {

inline std::string CorpusPath(std::string_view name) {
  return std::string(INFECTEST_CORPUS_DIR) + "/" + std::string(name);
}

inline lang::CheckedProgram Compile(std::string_view source) {
  return lang::Check(lang::Parse(source, "test.ml0"));
}

inline lang::CheckedProgram Triangle() { return driver::LoadProgram(CorpusPath("triangle.ml0")); }

inline suite::TestSuite LoadSuite(const lang::CheckedProgram& program, std::string_view file,
                                  std::string name) {
  return suite::ParseSuite(program, driver::ReadFile(CorpusPath(file)), std::move(name));
}

inline std::vector<interp::Value> Ints(std::initializer_list<std::int64_t> values) {
  std::vector<interp::Value> out;
  for (std::int64_t v : values) out.push_back(interp::Value::Int(v));
  return out;
}

// The mutant at the binary operator found at `line`:`column` with the given
// replacement; fails the calling test through an exception when absent.
inline mutgen::MutantId FindMutant(const mutgen::MutantTable& table, int line, int column,
                                   lang::BinaryOp replacement) {
  for (const mutgen::Mutant& m : table.mutants()) {
    if (m.site.loc.line == line && m.site.loc.column == column &&
        m.replacement == replacement) {
      return m.id;
    }
  }
  throw std::runtime_error("no mutant at " + std::to_string(line) + ":" +
                           std::to_string(column));
}

}  // namespace infectest::testing

#endif  // INFECTEST_TESTS_SUPPORT_FIXTURES_H_
