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

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "common/error.h"
#include "lang/program.h"

namespace infectest::lang {

namespace {

using Defined = std::set<std::string>;

[[noreturn]] void Fail(CheckError::Kind kind, const std::string& message,
                       SourceLoc loc) {
  throw CheckError(kind, message, loc.line, loc.column);
}

class FunctionChecker {
 public:
  explicit FunctionChecker(FunctionDef& fn) : fn_(fn) {}

  void Run() {
    Defined defined;
    for (const Param& param : fn_.params) {
      if (slots_.count(param.name)) {
        Fail(CheckError::Kind::kDuplicate, "duplicate parameter '" + param.name + "'",
             param.loc);
      }
      Declare(param.name, param.type);
      defined.insert(param.name);
    }
    if (!CheckBlock(fn_.body, defined)) {
      Fail(CheckError::Kind::kMissingReturn,
           "function '" + fn_.name + "' can finish without returning a value",
           fn_.loc);
    }
  }

 private:
  int Declare(const std::string& name, Type type) {
    const int slot = static_cast<int>(fn_.slot_names.size());
    slots_[name] = slot;
    fn_.slot_names.push_back(name);
    fn_.slot_types.push_back(type);
    return slot;
  }

  // Returns true when every path through the block ends in a return.
  bool CheckBlock(Block& block, Defined& defined) {
    bool returns = false;
    for (Stmt& stmt : block) {
      if (returns) {
        Fail(CheckError::Kind::kUnreachable, "unreachable statement", stmt.loc);
      }
      returns = CheckStmt(stmt, defined);
    }
    return returns;
  }

  bool CheckStmt(Stmt& stmt, Defined& defined) {
    switch (stmt.kind) {
      case Stmt::Kind::kAssign: {
        const Type type = CheckExpr(stmt.expr, defined);
        auto it = slots_.find(stmt.target);
        if (it == slots_.end()) {
          stmt.slot = Declare(stmt.target, type);
        } else {
          stmt.slot = it->second;
          if (fn_.slot_types[stmt.slot] != type) {
            Fail(CheckError::Kind::kType,
                 "cannot assign " + std::string(TypeName(type)) + " to '" +
                     stmt.target + "' of type " +
                     std::string(TypeName(fn_.slot_types[stmt.slot])),
                 stmt.loc);
          }
        }
        defined.insert(stmt.target);
        return false;
      }
      case Stmt::Kind::kIf: {
        ExpectType(stmt.expr, Type::kBool, defined, "if condition");
        Defined then_defined = defined;
        Defined else_defined = defined;
        const bool then_returns = CheckBlock(stmt.body, then_defined);
        const bool else_returns = CheckBlock(stmt.else_body, else_defined);
        if (then_returns && else_returns) return true;
        if (then_returns) {
          defined = std::move(else_defined);
        } else if (else_returns) {
          defined = std::move(then_defined);
        } else {
          Defined both;
          for (const std::string& name : then_defined) {
            if (else_defined.count(name)) both.insert(name);
          }
          defined = std::move(both);
        }
        return false;
      }
      case Stmt::Kind::kWhile: {
        ExpectType(stmt.expr, Type::kBool, defined, "while condition");
        Defined body_defined = defined;
        CheckBlock(stmt.body, body_defined);
        // The loop may run zero times.
        return false;
      }
      case Stmt::Kind::kReturn:
        ExpectType(stmt.expr, fn_.return_type, defined, "return value");
        return true;
    }
    return false;
  }

  void ExpectType(Expr& expr, Type want, const Defined& defined,
                  std::string_view what) {
    const Type got = CheckExpr(expr, defined);
    if (got != want) {
      Fail(CheckError::Kind::kType,
           std::string(what) + " has type " + std::string(TypeName(got)) +
               ", expected " + std::string(TypeName(want)),
           expr.loc);
    }
  }

  Type CheckExpr(Expr& expr, const Defined& defined) {
    switch (expr.kind) {
      case Expr::Kind::kIntConst:
        expr.type = Type::kInt;
        break;
      case Expr::Kind::kBoolConst:
        expr.type = Type::kBool;
        break;
      case Expr::Kind::kVar: {
        if (!defined.count(expr.name)) {
          Fail(CheckError::Kind::kUndefinedVariable,
               "variable '" + expr.name + "' is not defined on every path here",
               expr.loc);
        }
        expr.slot = slots_.at(expr.name);
        expr.type = fn_.slot_types[expr.slot];
        break;
      }
      case Expr::Kind::kUnary: {
        const Type want = expr.unary_op == UnaryOp::kNeg ? Type::kInt : Type::kBool;
        ExpectType(*expr.lhs, want, defined, "operand of unary operator");
        expr.type = want;
        break;
      }
      case Expr::Kind::kBinary: {
        const Type operand = IsLogical(expr.binary_op) ? Type::kBool : Type::kInt;
        const std::string what =
            "operand of '" + std::string(BinaryOpSpelling(expr.binary_op)) + "'";
        ExpectType(*expr.lhs, operand, defined, what);
        ExpectType(*expr.rhs, operand, defined, what);
        expr.type = IsArithmetic(expr.binary_op) ? Type::kInt : Type::kBool;
        break;
      }
    }
    return expr.type;
  }

  FunctionDef& fn_;
  std::map<std::string, int> slots_;
};

void IndexExpr(const Expr& expr, const Stmt& host, const Expr* parent,
               std::size_t function,
               std::vector<CheckedProgram::NodeInfo>& nodes) {
  nodes.at(expr.id) = {&expr, &host, parent, function};
  if (expr.lhs) IndexExpr(*expr.lhs, host, &expr, function, nodes);
  if (expr.rhs) IndexExpr(*expr.rhs, host, &expr, function, nodes);
}

void IndexBlock(const Block& block, std::size_t function,
                std::vector<CheckedProgram::NodeInfo>& nodes) {
  for (const Stmt& stmt : block) {
    nodes.at(stmt.id) = {nullptr, &stmt, nullptr, function};
    IndexExpr(stmt.expr, stmt, nullptr, function, nodes);
    IndexBlock(stmt.body, function, nodes);
    IndexBlock(stmt.else_body, function, nodes);
  }
}

Expr* FindExpr(Expr& expr, NodeId id) {
  if (expr.id == id) return &expr;
  if (expr.lhs) {
    if (Expr* found = FindExpr(*expr.lhs, id)) return found;
  }
  if (expr.rhs) {
    if (Expr* found = FindExpr(*expr.rhs, id)) return found;
  }
  return nullptr;
}

Expr* FindExpr(Block& block, NodeId id) {
  for (Stmt& stmt : block) {
    if (Expr* found = FindExpr(stmt.expr, id)) return found;
    if (Expr* found = FindExpr(stmt.body, id)) return found;
    if (Expr* found = FindExpr(stmt.else_body, id)) return found;
  }
  return nullptr;
}

}  // namespace

CheckedProgram::CheckedProgram(std::shared_ptr<const Program> program)
    : program_(std::move(program)) {
  NodeId count = 0;
  // Ids are dense pre-order positions; the largest id bounds the table.
  auto bump = [&count](NodeId id) { count = std::max(count, id + 1); };
  std::vector<NodeInfo> nodes;
  for (const FunctionDef& fn : program_->functions) {
    std::vector<const Block*> blocks = {&fn.body};
    while (!blocks.empty()) {
      const Block* block = blocks.back();
      blocks.pop_back();
      for (const Stmt& stmt : *block) {
        bump(stmt.id);
        std::vector<const Expr*> exprs = {&stmt.expr};
        while (!exprs.empty()) {
          const Expr* e = exprs.back();
          exprs.pop_back();
          bump(e->id);
          if (e->lhs) exprs.push_back(e->lhs.get());
          if (e->rhs) exprs.push_back(e->rhs.get());
        }
        blocks.push_back(&stmt.body);
        blocks.push_back(&stmt.else_body);
      }
    }
  }
  nodes.resize(count);
  for (std::size_t f = 0; f < program_->functions.size(); ++f) {
    IndexBlock(program_->functions[f].body, f, nodes);
  }
  nodes_ = std::make_shared<const std::vector<NodeInfo>>(std::move(nodes));
}

std::optional<std::size_t> CheckedProgram::FindFunction(std::string_view name) const {
  for (std::size_t i = 0; i < program_->functions.size(); ++i) {
    if (program_->functions[i].name == name) return i;
  }
  return std::nullopt;
}

const CheckedProgram::NodeInfo& CheckedProgram::node(NodeId id) const {
  if (id >= nodes_->size()) {
    throw UsageError("node id " + std::to_string(id) + " is not part of the program");
  }
  return (*nodes_)[id];
}

CheckedProgram CheckedProgram::WithOperator(NodeId site, BinaryOp op) const {
  const Expr* original = expr(site);
  if (original == nullptr || original->kind != Expr::Kind::kBinary) {
    throw UsageError("node " + std::to_string(site) + " is not a binary expression");
  }
  if (ClassOf(original->binary_op) != ClassOf(op)) {
    throw UsageError("replacement operator changes the operator class");
  }
  auto copy = std::make_shared<Program>(*program_);
  Expr* target = FindExpr(copy->functions.at(node(site).function).body, site);
  target->binary_op = op;
  return CheckedProgram(std::move(copy));
}

CheckedProgram Check(Program program) {
  std::set<std::string> names;
  for (FunctionDef& fn : program.functions) {
    if (!names.insert(fn.name).second) {
      Fail(CheckError::Kind::kDuplicate, "duplicate function '" + fn.name + "'",
           fn.loc);
    }
    fn.slot_names.clear();
    fn.slot_types.clear();
    FunctionChecker(fn).Run();
  }
  return CheckedProgram(std::make_shared<const Program>(std::move(program)));
}

}  // namespace infectest::lang
