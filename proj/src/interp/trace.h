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

#ifndef INFECTEST_INTERP_TRACE_H_
#define INFECTEST_INTERP_TRACE_H_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "interp/value.h"
#include "lang/ast.h"
#include "mutgen/mutants.h"

namespace infectest::interp {

struct StmtEnter {
  lang::SourceLoc loc;
  lang::NodeId stmt = 0;
  friend bool operator==(const StmtEnter&, const StmtEnter&) = default;
};

// Decision taken at an if or while condition.
struct Branch {
  lang::NodeId cond = 0;
  bool taken = false;
  friend bool operator==(const Branch&, const Branch&) = default;
};

struct Assign {
  std::string var;
  Value value;
  friend bool operator==(const Assign&, const Assign&) = default;
};

// One completed evaluation of a binary expression of the original program.
// `rhs` is empty when && or || short-circuited and the right operand was not
// evaluated.
struct SiteEval {
  lang::NodeId site = 0;
  Value lhs;
  std::optional<Outcome> rhs;
  Outcome result = Value::Int(0);
  friend bool operator==(const SiteEval&, const SiteEval&) = default;
};

struct ProbeResult {
  mutgen::MutantId mutant = 0;
  bool infected = false;
  // The replacement operator raised a runtime error; counted as infected.
  bool probe_error = false;
  friend bool operator==(const ProbeResult&, const ProbeResult&) = default;
};

using TraceStep = std::variant<StmtEnter, Branch, Assign, SiteEval, ProbeResult>;

struct ExecutionTrace {
  std::vector<TraceStep> steps;
  friend bool operator==(const ExecutionTrace&, const ExecutionTrace&) = default;
};

}  // namespace infectest::interp

#endif  // INFECTEST_INTERP_TRACE_H_
