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

#include "lang/printer.h"

#include <sstream>

namespace infectest::lang {

namespace {

// Mirrors the parser's binding powers; atoms bind tightest.
int Binding(const Expr& expr) {
  if (expr.kind == Expr::Kind::kUnary) return 7;
  if (expr.kind != Expr::Kind::kBinary) return 8;
  switch (expr.binary_op) {
    case BinaryOp::kOr:
      return 1;
    case BinaryOp::kAnd:
      return 2;
    case BinaryOp::kEq:
    case BinaryOp::kNe:
      return 3;
    case BinaryOp::kLt:
    case BinaryOp::kLe:
    case BinaryOp::kGt:
    case BinaryOp::kGe:
      return 4;
    case BinaryOp::kAdd:
    case BinaryOp::kSub:
      return 5;
    default:
      return 6;
  }
}

void PrintExpr(const Expr& expr, std::ostream& out);

void PrintOperand(const Expr& operand, bool parenthesize, std::ostream& out) {
  if (parenthesize) out << '(';
  PrintExpr(operand, out);
  if (parenthesize) out << ')';
}

void PrintExpr(const Expr& expr, std::ostream& out) {
  switch (expr.kind) {
    case Expr::Kind::kIntConst:
      out << expr.int_value;
      return;
    case Expr::Kind::kBoolConst:
      out << (expr.int_value != 0 ? "true" : "false");
      return;
    case Expr::Kind::kVar:
      out << expr.name;
      return;
    case Expr::Kind::kUnary:
      out << UnaryOpSpelling(expr.unary_op);
      PrintOperand(*expr.lhs, Binding(*expr.lhs) < 7, out);
      return;
    case Expr::Kind::kBinary: {
      const int binding = Binding(expr);
      PrintOperand(*expr.lhs, Binding(*expr.lhs) < binding, out);
      out << ' ' << BinaryOpSpelling(expr.binary_op) << ' ';
      PrintOperand(*expr.rhs, Binding(*expr.rhs) <= binding, out);
      return;
    }
  }
}

void PrintBlock(const Block& block, int depth, std::ostream& out);

void Indent(int depth, std::ostream& out) {
  for (int i = 0; i < depth; ++i) out << "  ";
}

void PrintIf(const Stmt& stmt, int depth, std::ostream& out) {
  out << "if (";
  PrintExpr(stmt.expr, out);
  out << ") {\n";
  PrintBlock(stmt.body, depth + 1, out);
  Indent(depth, out);
  out << '}';
  if (stmt.else_body.empty()) {
    out << '\n';
    return;
  }
  out << " else ";
  if (stmt.else_body.size() == 1 && stmt.else_body[0].kind == Stmt::Kind::kIf) {
    PrintIf(stmt.else_body[0], depth, out);
    return;
  }
  out << "{\n";
  PrintBlock(stmt.else_body, depth + 1, out);
  Indent(depth, out);
  out << "}\n";
}

void PrintBlock(const Block& block, int depth, std::ostream& out) {
  for (const Stmt& stmt : block) {
    Indent(depth, out);
    switch (stmt.kind) {
      case Stmt::Kind::kAssign:
        out << stmt.target << " = ";
        PrintExpr(stmt.expr, out);
        out << ";\n";
        break;
      case Stmt::Kind::kReturn:
        out << "return ";
        PrintExpr(stmt.expr, out);
        out << ";\n";
        break;
      case Stmt::Kind::kWhile:
        out << "while (";
        PrintExpr(stmt.expr, out);
        out << ") {\n";
        PrintBlock(stmt.body, depth + 1, out);
        Indent(depth, out);
        out << "}\n";
        break;
      case Stmt::Kind::kIf:
        PrintIf(stmt, depth, out);
        break;
    }
  }
}

}  // namespace

std::string Print(const Expr& expr) {
  std::ostringstream out;
  PrintExpr(expr, out);
  return out.str();
}

std::string Print(const Program& program) {
  std::ostringstream out;
  bool first = true;
  for (const FunctionDef& fn : program.functions) {
    if (!first) out << '\n';
    first = false;
    out << "fn " << fn.name << '(';
    for (std::size_t i = 0; i < fn.params.size(); ++i) {
      if (i > 0) out << ", ";
      out << fn.params[i].name << ": " << TypeName(fn.params[i].type);
    }
    out << ") -> " << TypeName(fn.return_type) << " {\n";
    PrintBlock(fn.body, 1, out);
    out << "}\n";
  }
  return out.str();
}

}  // namespace infectest::lang
