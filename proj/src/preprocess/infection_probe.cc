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

#include "preprocess/infection_probe.h"

namespace infectest::preprocess {

using interp::Outcome;
using interp::Value;
using lang::BinaryOp;

ProbeVerdict InfectionProbe(const SiteValues& values, BinaryOp replacement) {
  if (lang::IsLogical(replacement)) {
    const bool l = values.lhs.as_bool();
    const bool short_circuits =
        (replacement == BinaryOp::kAnd && !l) || (replacement == BinaryOp::kOr && l);
    const Outcome mutated = short_circuits ? Outcome(Value::Bool(l)) : values.rhs;
    if (!mutated.ok()) return {true, true};
    return {mutated != values.result, false};
  }
  // Strict operators evaluate the right operand in both versions, so a failing
  // operand fails identically.
  if (!values.rhs.ok()) return {false, false};
  const Outcome mutated =
      interp::ApplyBinary(replacement, values.lhs, values.rhs.value());
  if (!mutated.ok()) return {true, true};
  return {mutated != values.result, false};
}

}  // namespace infectest::preprocess
