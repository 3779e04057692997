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

#ifndef INFECTEST_LANG_SITES_H_
#define INFECTEST_LANG_SITES_H_

#include <cstddef>
#include <vector>

#include "lang/ast.h"
#include "lang/program.h"

namespace infectest::lang {

// A binary expression node that operator replacement can target.
struct MutationSite {
  NodeId node = 0;
  SourceLoc loc;
  BinaryOp original_op = BinaryOp::kAdd;
  OpClass op_class = OpClass::kAor;
  std::size_t function = 0;
};

// One site per binary expression, ordered by NodeId (pre-order).
std::vector<MutationSite> ExpressionSites(const CheckedProgram& program);

}  // namespace infectest::lang

#endif  // INFECTEST_LANG_SITES_H_
