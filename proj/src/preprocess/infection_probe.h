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

#ifndef INFECTEST_PREPROCESS_INFECTION_PROBE_H_
#define INFECTEST_PREPROCESS_INFECTION_PROBE_H_

#include "interp/value.h"
#include "lang/ast.h"

namespace infectest::preprocess {

// Operand and result values of one evaluation of a site in the original
// program. For && / || sites that short-circuited, `rhs` holds the right
// operand evaluated eagerly for the probe (expressions have no side effects).
struct SiteValues {
  lang::BinaryOp original = lang::BinaryOp::kAdd;
  interp::Value lhs;
  interp::Outcome rhs = interp::Value::Int(0);
  interp::Outcome result = interp::Value::Int(0);
};

struct ProbeVerdict {
  bool infected = false;
  bool probe_error = false;
};

// Would replacing the operator change the value of this evaluation? A
// replacement that raises a runtime error counts as infected.
ProbeVerdict InfectionProbe(const SiteValues& values, lang::BinaryOp replacement);

}  // namespace infectest::preprocess

#endif  // INFECTEST_PREPROCESS_INFECTION_PROBE_H_
