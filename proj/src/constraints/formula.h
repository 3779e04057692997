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

#ifndef INFECTEST_CONSTRAINTS_FORMULA_H_
#define INFECTEST_CONSTRAINTS_FORMULA_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lang/ast.h"

namespace infectest::constraints {

using Sort = lang::Type;

enum class FKind : std::uint8_t {
  kIntConst, kBoolConst, kVar,
  kNeg, kNot,
  kAdd, kSub, kMul, kDiv, kMod,
  kLt, kLe, kGt, kGe, kEq, kNe,
  kAnd, kOr,
};

// Quantifier-free formula over integer and boolean variables. Immutable;
// copies share structure. `==` and `!=` apply to either sort (on booleans they
// are equivalence and exclusive-or); `and` / `or` are n-ary and evaluate left
// to right with short-circuiting.
class Formula {
 public:
  struct Node {
    FKind kind = FKind::kBoolConst;
    Sort sort = Sort::kBool;
    std::int64_t value = 0;  // constants
    std::string name;        // variables
    std::vector<Formula> args;
  };

  Formula() : Formula(Bool(true)) {}

  static Formula Int(std::int64_t value);
  static Formula Bool(bool value);
  static Formula Var(std::string name, Sort sort);
  static Formula Neg(Formula operand);
  static Formula Not(Formula operand);
  // Arithmetic, comparison, or equality node. Sorts must fit the operator.
  static Formula Binary(FKind kind, Formula lhs, Formula rhs);
  // Flattens nested conjunctions and drops literal `true`; an empty list is
  // `true` and a single conjunct is returned as is.
  static Formula And(std::vector<Formula> conjuncts);
  // Dual of And.
  static Formula Or(std::vector<Formula> disjuncts);

  const Node& node() const { return *node_; }
  FKind kind() const { return node_->kind; }
  Sort sort() const { return node_->sort; }
  const std::vector<Formula>& args() const { return node_->args; }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula Make(Node node);

  std::shared_ptr<const Node> node_;
};

std::string_view KindSpelling(FKind kind);
bool IsArithmeticKind(FKind kind);
bool IsComparisonKind(FKind kind);  // < <= > >= == !=

// Parenthesized prefix form, e.g. `(and (!= (== a c) (<= a c)) (== a b))`.
std::string ToString(const Formula& formula);

// Parses the prefix form. Variable sorts are inferred from their uses
// (default int). Throws SyntaxError.
Formula ParseFormula(std::string_view text);

// Translation of a MiniLang expression; variables keep their source names.
// `replace` swaps the operator of one binary node on the fly.
struct OperatorOverride {
  lang::NodeId node = 0;
  lang::BinaryOp op = lang::BinaryOp::kAdd;
};
Formula FromExpr(const lang::Expr& expr,
                 std::optional<OperatorOverride> replace = std::nullopt);

// Replaces every occurrence of variable `name` by `replacement`.
Formula Substitute(const Formula& formula, std::string_view name,
                   const Formula& replacement);

// Variables in order of first appearance (depth-first, left to right).
std::vector<std::pair<std::string, Sort>> FreeVariables(const Formula& formula);

// Right operands of every / and % in the formula, outermost first.
std::vector<Formula> Denominators(const Formula& formula);

}  // namespace infectest::constraints

#endif  // INFECTEST_CONSTRAINTS_FORMULA_H_
