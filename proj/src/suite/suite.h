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

#ifndef INFECTEST_SUITE_SUITE_H_
#define INFECTEST_SUITE_SUITE_H_

#include <string>
#include <string_view>
#include <vector>

#include "interp/interpreter.h"
#include "interp/value.h"
#include "lang/program.h"

namespace infectest::suite {

struct TestCase {
  std::string id;
  std::string function;
  std::vector<interp::Value> args;
  // Outcome of the original program; recomputed whenever a test is created.
  interp::Outcome expected = interp::Value::Int(0);
};

// Ordered test cases with unique ids. Order drives execution and the
// kill short-circuit in mutation analysis.
struct TestSuite {
  std::string name;
  std::vector<TestCase> tests;

  bool Contains(std::string_view function,
                const std::vector<interp::Value>& args) const;
  bool HasId(std::string_view id) const;
};

// Builds a test and records the original program's outcome as its
// expectation. Throws UsageError if the call does not fit the signature.
TestCase MakeTest(const lang::CheckedProgram& program, std::string id,
                  std::string function, std::vector<interp::Value> args,
                  const interp::RunOptions& options = {});

// Line format, one test per line: `id function(arg, arg, ...)`. Text after
// '#' is a comment. Throws UsageError naming the offending line.
TestSuite ParseSuite(const lang::CheckedProgram& program, std::string_view text,
                     std::string name, const interp::RunOptions& options = {});

std::string FormatSuite(const TestSuite& suite);

// "classify(1, 1, 2)"
std::string CallText(const TestCase& test);

}  // namespace infectest::suite

#endif  // INFECTEST_SUITE_SUITE_H_
