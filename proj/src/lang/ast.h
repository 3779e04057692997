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

#ifndef INFECTEST_LANG_AST_H_
#define INFECTEST_LANG_AST_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace infectest::lang {

// Pre-order position of a statement or expression node within its Program.
// Identical source text always yields identical ids.
using NodeId = std::uint32_t;

struct SourceLoc {
  int line = 1;
  int column = 1;

  friend auto operator<=>(const SourceLoc&, const SourceLoc&) = default;
};

enum class Type : std::uint8_t { kInt, kBool };

enum class UnaryOp : std::uint8_t { kNeg, kNot };

enum class BinaryOp : std::uint8_t {
  kAdd, kSub, kMul, kDiv, kMod,
  kLt, kLe, kGt, kGe, kEq, kNe,
  kAnd, kOr,
};

// Mutation operator class an operator belongs to.
enum class OpClass : std::uint8_t { kAor, kRor, kLcr };

std::string_view TypeName(Type type);
std::string_view UnaryOpSpelling(UnaryOp op);
std::string_view BinaryOpSpelling(BinaryOp op);
std::optional<BinaryOp> BinaryOpFromSpelling(std::string_view spelling);
OpClass ClassOf(BinaryOp op);
std::string_view OpClassName(OpClass op_class);

inline bool IsArithmetic(BinaryOp op) { return ClassOf(op) == OpClass::kAor; }
inline bool IsRelational(BinaryOp op) { return ClassOf(op) == OpClass::kRor; }
inline bool IsLogical(BinaryOp op) { return ClassOf(op) == OpClass::kLcr; }

struct Expr {
  enum class Kind : std::uint8_t { kIntConst, kBoolConst, kVar, kUnary, kBinary };

  Kind kind = Kind::kIntConst;
  NodeId id = 0;
  // Binary nodes are located at their operator token, everything else at its
  // first token.
  SourceLoc loc;
  // Filled in by the checker.
  Type type = Type::kInt;

  std::int64_t int_value = 0;  // kIntConst, and 0/1 for kBoolConst
  std::string name;            // kVar
  int slot = -1;               // kVar, resolved by the checker
  UnaryOp unary_op = UnaryOp::kNeg;
  BinaryOp binary_op = BinaryOp::kAdd;
  std::unique_ptr<Expr> lhs;  // operand of kUnary, left operand of kBinary
  std::unique_ptr<Expr> rhs;

  Expr() = default;
  Expr(const Expr& other);
  Expr& operator=(const Expr& other);
  Expr(Expr&&) noexcept = default;
  Expr& operator=(Expr&&) noexcept = default;

  static Expr IntConst(std::int64_t value, SourceLoc loc);
  static Expr BoolConst(bool value, SourceLoc loc);
  static Expr Var(std::string name, SourceLoc loc);
  static Expr Unary(UnaryOp op, Expr operand, SourceLoc loc);
  static Expr Binary(BinaryOp op, Expr lhs, Expr rhs, SourceLoc loc);
};

struct Stmt;
using Block = std::vector<Stmt>;

struct Stmt {
  enum class Kind : std::uint8_t { kAssign, kIf, kWhile, kReturn };

  Kind kind = Kind::kReturn;
  NodeId id = 0;
  SourceLoc loc;
  std::string target;  // kAssign
  int slot = -1;       // kAssign, resolved by the checker
  // Assignment right-hand side, if/while condition, or returned value.
  Expr expr;
  Block body;       // then-block of kIf, loop body of kWhile
  Block else_body;  // kIf only; empty when there is no else
};

struct Param {
  std::string name;
  Type type = Type::kInt;
  SourceLoc loc;
};

struct FunctionDef {
  std::string name;
  SourceLoc loc;
  std::vector<Param> params;
  Type return_type = Type::kInt;
  Block body;

  // Variable slots, filled in by the checker. Parameters occupy the first
  // params.size() slots in declaration order.
  std::vector<std::string> slot_names;
  std::vector<Type> slot_types;
};

struct Program {
  std::string source_name;
  std::vector<FunctionDef> functions;
};

// Assigns pre-order NodeIds to every statement and expression. Returns the
// number of ids handed out.
NodeId NumberNodes(Program& program);

// Shape equality: ignores NodeIds, locations, and checker annotations.
bool SameShape(const Expr& a, const Expr& b);
bool SameShape(const Program& a, const Program& b);

}  // namespace infectest::lang

#endif  // INFECTEST_LANG_AST_H_
