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

#include "interp/interpreter.h"

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "common/error.h"
#include "preprocess/infection_probe.h"

namespace infectest::interp {

using lang::BinaryOp;
using lang::Expr;
using lang::Stmt;

namespace {

class Machine {
 public:
  Machine(const lang::FunctionDef& fn, std::span<const Value> args,
          const RunOptions& options, ExecutionTrace* trace,
          const mutgen::MutantTable* probes)
      : fn_(fn), options_(options), trace_(trace), probes_(probes) {
    slots_.resize(fn.slot_names.size());
    for (std::size_t i = 0; i < args.size(); ++i) slots_[i] = args[i];
  }

  Outcome Call() {
    std::optional<Outcome> done = ExecBlock(fn_.body);
    // The checker guarantees every path returns.
    return done.value_or(Outcome(Value::Int(0)));
  }

 private:
  // Empty when control falls off the end of the block, otherwise the returned
  // value or the runtime error that stopped execution.
  std::optional<Outcome> ExecBlock(const lang::Block& block) {
    for (const Stmt& stmt : block) {
      if (std::optional<Outcome> done = ExecStmt(stmt)) return done;
    }
    return std::nullopt;
  }

  bool Step() { return ++steps_ <= options_.step_budget; }

  std::optional<Outcome> ExecStmt(const Stmt& stmt) {
    if (!Step()) return Outcome(ErrorKind::kStepBudgetExceeded);
    Record(StmtEnter{stmt.loc, stmt.id});
    switch (stmt.kind) {
      case Stmt::Kind::kAssign: {
        Outcome value = Eval(stmt.expr);
        if (!value.ok()) return value;
        slots_[stmt.slot] = value.value();
        Record(Assign{stmt.target, value.value()});
        return std::nullopt;
      }
      case Stmt::Kind::kReturn:
        return Eval(stmt.expr);
      case Stmt::Kind::kIf: {
        Outcome cond = Eval(stmt.expr);
        if (!cond.ok()) return cond;
        const bool taken = cond.value().as_bool();
        Record(Branch{stmt.expr.id, taken});
        return ExecBlock(taken ? stmt.body : stmt.else_body);
      }
      case Stmt::Kind::kWhile:
        for (bool first = true;; first = false) {
          if (!first && !Step()) return Outcome(ErrorKind::kStepBudgetExceeded);
          Outcome cond = Eval(stmt.expr);
          if (!cond.ok()) return cond;
          const bool taken = cond.value().as_bool();
          Record(Branch{stmt.expr.id, taken});
          if (!taken) return std::nullopt;
          if (std::optional<Outcome> done = ExecBlock(stmt.body)) return done;
        }
    }
    return std::nullopt;
  }

  Outcome Eval(const Expr& expr) {
    switch (expr.kind) {
      case Expr::Kind::kIntConst:
        return Value::Int(expr.int_value);
      case Expr::Kind::kBoolConst:
        return Value::Bool(expr.int_value != 0);
      case Expr::Kind::kVar:
        return slots_[expr.slot];
      case Expr::Kind::kUnary: {
        Outcome operand = Eval(*expr.lhs);
        if (!operand.ok()) return operand;
        const Value v = operand.value();
        if (expr.unary_op == lang::UnaryOp::kNot) return Value::Bool(!v.as_bool());
        if (v.as_int() == std::numeric_limits<std::int64_t>::min()) {
          return ErrorKind::kOverflow;
        }
        return Value::Int(-v.as_int());
      }
      case Expr::Kind::kBinary:
        return EvalBinary(expr);
    }
    return Value::Int(0);
  }

  Outcome EvalBinary(const Expr& expr) {
    Outcome lhs = Eval(*expr.lhs);
    if (!lhs.ok()) return lhs;
    const Value l = lhs.value();
    std::optional<Outcome> rhs;
    std::optional<Outcome> result;
    if (expr.binary_op == BinaryOp::kAnd && !l.as_bool()) {
      result = Value::Bool(false);
    } else if (expr.binary_op == BinaryOp::kOr && l.as_bool()) {
      result = Value::Bool(true);
    } else {
      rhs = Eval(*expr.rhs);
      if (!rhs->ok()) {
        result = *rhs;
      } else if (lang::IsLogical(expr.binary_op)) {
        result = rhs->value();
      } else {
        result = ApplyBinary(expr.binary_op, l, rhs->value());
      }
    }
    if (trace_ != nullptr) {
      trace_->steps.emplace_back(SiteEval{expr.id, l, rhs, *result});
      if (probes_ != nullptr) RunProbes(expr, l, rhs, *result);
    }
    return *result;
  }

  void RunProbes(const Expr& expr, Value lhs, const std::optional<Outcome>& rhs,
                 const Outcome& result) {
    const auto ids = probes_->AtNode(expr.id);
    if (ids.empty()) return;
    preprocess::SiteValues values{expr.binary_op, lhs,
                                  rhs ? *rhs : EvalQuietly(*expr.rhs), result};
    for (mutgen::MutantId id : ids) {
      const preprocess::ProbeVerdict verdict =
          preprocess::InfectionProbe(values, probes_->at(id).replacement);
      trace_->steps.emplace_back(ProbeResult{id, verdict.infected, verdict.probe_error});
    }
  }

  // Evaluates a short-circuited operand for a probe only: nothing is recorded
  // and no steps are charged.
  Outcome EvalQuietly(const Expr& expr) {
    ExecutionTrace* saved = trace_;
    trace_ = nullptr;
    Outcome out = Eval(expr);
    trace_ = saved;
    return out;
  }

  template <typename StepT>
  void Record(StepT step) {
    if (trace_ != nullptr) trace_->steps.emplace_back(std::move(step));
  }

  const lang::FunctionDef& fn_;
  const RunOptions& options_;
  ExecutionTrace* trace_;
  const mutgen::MutantTable* probes_;
  std::vector<Value> slots_;
  std::uint64_t steps_ = 0;
};

const lang::FunctionDef& Resolve(const lang::CheckedProgram& program,
                                 std::string_view function,
                                 std::span<const Value> args) {
  const auto index = program.FindFunction(function);
  if (!index) throw UsageError("unknown function '" + std::string(function) + "'");
  const lang::FunctionDef& fn = program.function(*index);
  if (args.size() != fn.params.size()) {
    throw UsageError("function '" + fn.name + "' expects " +
                     std::to_string(fn.params.size()) + " arguments, got " +
                     std::to_string(args.size()));
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].type != fn.params[i].type) {
      throw UsageError("argument " + std::to_string(i + 1) + " of '" + fn.name +
                       "' must be " + std::string(lang::TypeName(fn.params[i].type)));
    }
  }
  return fn;
}

}  // namespace

Outcome Run(const lang::CheckedProgram& program, std::string_view function,
            std::span<const Value> args, const RunOptions& options) {
  return Machine(Resolve(program, function, args), args, options, nullptr, nullptr)
      .Call();
}

TracedRun RunTraced(const lang::CheckedProgram& program, std::string_view function,
                    std::span<const Value> args, const mutgen::MutantTable* probes,
                    const RunOptions& options) {
  TracedRun run;
  run.outcome = Machine(Resolve(program, function, args), args, options,
                        &run.trace, probes)
                    .Call();
  return run;
}

}  // namespace infectest::interp
