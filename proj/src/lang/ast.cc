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

#include "lang/ast.h"

#include <array>
#include <utility>

namespace infectest::lang {

namespace {

struct OpInfo {
  BinaryOp op;
  std::string_view spelling;
  OpClass op_class;
};

constexpr std::array<OpInfo, 13> kOps = {{
    {BinaryOp::kAdd, "+", OpClass::kAor},
    {BinaryOp::kSub, "-", OpClass::kAor},
    {BinaryOp::kMul, "*", OpClass::kAor},
    {BinaryOp::kDiv, "/", OpClass::kAor},
    {BinaryOp::kMod, "%", OpClass::kAor},
    {BinaryOp::kLt, "<", OpClass::kRor},
    {BinaryOp::kLe, "<=", OpClass::kRor},
    {BinaryOp::kGt, ">", OpClass::kRor},
    {BinaryOp::kGe, ">=", OpClass::kRor},
    {BinaryOp::kEq, "==", OpClass::kRor},
    {BinaryOp::kNe, "!=", OpClass::kRor},
    {BinaryOp::kAnd, "&&", OpClass::kLcr},
    {BinaryOp::kOr, "||", OpClass::kLcr},
}};

NodeId NumberExpr(Expr& expr, NodeId next) {
  expr.id = next++;
  if (expr.lhs) next = NumberExpr(*expr.lhs, next);
  if (expr.rhs) next = NumberExpr(*expr.rhs, next);
  return next;
}

NodeId NumberBlock(Block& block, NodeId next) {
  for (Stmt& stmt : block) {
    stmt.id = next++;
    next = NumberExpr(stmt.expr, next);
    next = NumberBlock(stmt.body, next);
    next = NumberBlock(stmt.else_body, next);
  }
  return next;
}

bool SameShape(const Block& a, const Block& b);

bool SameShape(const Stmt& a, const Stmt& b) {
  return a.kind == b.kind && a.target == b.target && SameShape(a.expr, b.expr) &&
         SameShape(a.body, b.body) && SameShape(a.else_body, b.else_body);
}

bool SameShape(const Block& a, const Block& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!SameShape(a[i], b[i])) return false;
  }
  return true;
}

bool SameChild(const std::unique_ptr<Expr>& a, const std::unique_ptr<Expr>& b) {
  if (!a || !b) return !a && !b;
  return SameShape(*a, *b);
}

}  // namespace

std::string_view TypeName(Type type) {
  return type == Type::kInt ? "int" : "bool";
}

std::string_view UnaryOpSpelling(UnaryOp op) {
  return op == UnaryOp::kNeg ? "-" : "!";
}

std::string_view BinaryOpSpelling(BinaryOp op) {
  return kOps[static_cast<std::size_t>(op)].spelling;
}

std::optional<BinaryOp> BinaryOpFromSpelling(std::string_view spelling) {
  for (const OpInfo& info : kOps) {
    if (info.spelling == spelling) return info.op;
  }
  return std::nullopt;
}

OpClass ClassOf(BinaryOp op) {
  return kOps[static_cast<std::size_t>(op)].op_class;
}

std::string_view OpClassName(OpClass op_class) {
  switch (op_class) {
    case OpClass::kAor:
      return "AOR";
    case OpClass::kRor:
      return "ROR";
    case OpClass::kLcr:
      return "LCR";
  }
  return "?";
}

Expr::Expr(const Expr& other)
    : kind(other.kind),
      id(other.id),
      loc(other.loc),
      type(other.type),
      int_value(other.int_value),
      name(other.name),
      slot(other.slot),
      unary_op(other.unary_op),
      binary_op(other.binary_op),
      lhs(other.lhs ? std::make_unique<Expr>(*other.lhs) : nullptr),
      rhs(other.rhs ? std::make_unique<Expr>(*other.rhs) : nullptr) {}

Expr& Expr::operator=(const Expr& other) {
  if (this != &other) {
    Expr copy(other);
    *this = std::move(copy);
  }
  return *this;
}

Expr Expr::IntConst(std::int64_t value, SourceLoc loc) {
  Expr e;
  e.kind = Kind::kIntConst;
  e.int_value = value;
  e.loc = loc;
  e.type = Type::kInt;
  return e;
}

Expr Expr::BoolConst(bool value, SourceLoc loc) {
  Expr e;
  e.kind = Kind::kBoolConst;
  e.int_value = value ? 1 : 0;
  e.loc = loc;
  e.type = Type::kBool;
  return e;
}

Expr Expr::Var(std::string name, SourceLoc loc) {
  Expr e;
  e.kind = Kind::kVar;
  e.name = std::move(name);
  e.loc = loc;
  return e;
}

Expr Expr::Unary(UnaryOp op, Expr operand, SourceLoc loc) {
  Expr e;
  e.kind = Kind::kUnary;
  e.unary_op = op;
  e.lhs = std::make_unique<Expr>(std::move(operand));
  e.loc = loc;
  return e;
}

Expr Expr::Binary(BinaryOp op, Expr lhs, Expr rhs, SourceLoc loc) {
  Expr e;
  e.kind = Kind::kBinary;
  e.binary_op = op;
  e.lhs = std::make_unique<Expr>(std::move(lhs));
  e.rhs = std::make_unique<Expr>(std::move(rhs));
  e.loc = loc;
  return e;
}

NodeId NumberNodes(Program& program) {
  NodeId next = 0;
  for (FunctionDef& fn : program.functions) next = NumberBlock(fn.body, next);
  return next;
}

bool SameShape(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::kIntConst:
    case Expr::Kind::kBoolConst:
      return a.int_value == b.int_value;
    case Expr::Kind::kVar:
      return a.name == b.name;
    case Expr::Kind::kUnary:
      return a.unary_op == b.unary_op && SameChild(a.lhs, b.lhs);
    case Expr::Kind::kBinary:
      return a.binary_op == b.binary_op && SameChild(a.lhs, b.lhs) &&
             SameChild(a.rhs, b.rhs);
  }
  return false;
}

bool SameShape(const Program& a, const Program& b) {
  if (a.functions.size() != b.functions.size()) return false;
  for (std::size_t i = 0; i < a.functions.size(); ++i) {
    const FunctionDef& fa = a.functions[i];
    const FunctionDef& fb = b.functions[i];
    if (fa.name != fb.name || fa.return_type != fb.return_type ||
        fa.params.size() != fb.params.size()) {
      return false;
    }
    for (std::size_t p = 0; p < fa.params.size(); ++p) {
      if (fa.params[p].name != fb.params[p].name ||
          fa.params[p].type != fb.params[p].type) {
        return false;
      }
    }
    if (!SameShape(fa.body, fb.body)) return false;
  }
  return true;
}

}  // namespace infectest::lang
