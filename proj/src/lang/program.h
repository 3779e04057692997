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

#ifndef INFECTEST_LANG_PROGRAM_H_
#define INFECTEST_LANG_PROGRAM_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "lang/ast.h"

namespace infectest::lang {

// A type-checked, immutable Program together with a NodeId index. Copies are
// cheap and share the underlying tree.
class CheckedProgram {
 public:
  struct NodeInfo {
    const Expr* expr = nullptr;  // set for expression nodes
    const Stmt* stmt = nullptr;  // the statement itself, or the one hosting expr
    const Expr* parent = nullptr;  // enclosing expression, null at the top
    std::size_t function = 0;
  };

  const Program& program() const { return *program_; }
  const std::vector<FunctionDef>& functions() const { return program_->functions; }
  const FunctionDef& function(std::size_t index) const {
    return program_->functions.at(index);
  }
  std::optional<std::size_t> FindFunction(std::string_view name) const;

  NodeId node_count() const { return static_cast<NodeId>(nodes_->size()); }
  // Throws UsageError for ids outside the program.
  const NodeInfo& node(NodeId id) const;
  const Expr* expr(NodeId id) const { return node(id).expr; }

  // Copy of this program with the binary operator at `site` replaced. The
  // replacement must stay within the operator's class so types are preserved.
  CheckedProgram WithOperator(NodeId site, BinaryOp op) const;

 private:
  friend CheckedProgram Check(Program program);
  explicit CheckedProgram(std::shared_ptr<const Program> program);

  std::shared_ptr<const Program> program_;
  std::shared_ptr<const std::vector<NodeInfo>> nodes_;
};

// Resolves variables, assigns types, and verifies that every path through
// every function returns. Throws CheckError.
CheckedProgram Check(Program program);

}  // namespace infectest::lang

#endif  // INFECTEST_LANG_PROGRAM_H_
