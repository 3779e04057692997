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

#include "lang/sites.h"

namespace infectest::lang {

std::vector<MutationSite> ExpressionSites(const CheckedProgram& program) {
  std::vector<MutationSite> sites;
  for (NodeId id = 0; id < program.node_count(); ++id) {
    const auto& info = program.node(id);
    if (info.expr == nullptr || info.expr->kind != Expr::Kind::kBinary) continue;
    sites.push_back({id, info.expr->loc, info.expr->binary_op,
                     ClassOf(info.expr->binary_op), info.function});
  }
  return sites;
}

}  // namespace infectest::lang
