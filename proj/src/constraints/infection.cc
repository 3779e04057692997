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

#include "constraints/infection.h"

#include <algorithm>

#include "common/error.h"

namespace infectest::constraints {

namespace {

bool Divides(lang::BinaryOp op) {
  return op == lang::BinaryOp::kDiv || op == lang::BinaryOp::kMod;
}

}  // namespace

std::string_view InfectionModeName(InfectionMode mode) {
  return mode == InfectionMode::kLocal ? "local" : "outermost";
}

std::optional<InfectionMode> InfectionModeFromName(std::string_view name) {
  if (name == "local") return InfectionMode::kLocal;
  if (name == "outermost") return InfectionMode::kOutermost;
  return std::nullopt;
}

Formula InfectionFormula(const lang::CheckedProgram& program,
                         const mutgen::MutantTable& table, mutgen::MutantId mutant,
                         InfectionMode mode) {
  const mutgen::Mutant& m = table.at(mutant);
  const lang::NodeId site = m.site.node;
  const lang::Expr& expr = *program.expr(site);
  const lang::Expr& scope =
      mode == InfectionMode::kLocal ? expr : program.node(site).stmt->expr;
  const Formula differs =
      Formula::Binary(FKind::kNe, FromExpr(scope),
                      FromExpr(scope, OperatorOverride{site, m.replacement}));
  if (!Divides(m.site.original_op) && !Divides(m.replacement)) return differs;
  // The zero test alone would hold even when an operand cannot be evaluated
  // and the site is never reached, so both operands must be defined first.
  std::vector<Formula> conjuncts;
  for (const lang::Expr* operand : {expr.lhs.get(), expr.rhs.get()}) {
    for (const Formula& d : Denominators(FromExpr(*operand))) {
      conjuncts.push_back(Formula::Binary(FKind::kNe, d, Formula::Int(0)));
    }
  }
  conjuncts.push_back(Formula::Or(
      {Formula::Binary(FKind::kEq, FromExpr(*expr.rhs), Formula::Int(0)), differs}));
  return Formula::And(std::move(conjuncts));
}

Formula Backsubstitute(const PathScript& script, const Formula& fragment) {
  std::vector<Formula> conjuncts{fragment};
  for (auto it = script.steps.rbegin(); it != script.steps.rend(); ++it) {
    if (const auto* assume = std::get_if<Assume>(&*it)) {
      conjuncts.push_back(assume->polarity ? assume->cond : Formula::Not(assume->cond));
      continue;
    }
    const auto& assign = std::get<AssignStep>(*it);
    for (Formula& c : conjuncts) c = Substitute(c, assign.var, assign.rhs);
    for (const Formula& d : Denominators(assign.rhs)) {
      conjuncts.push_back(Formula::Binary(FKind::kNe, d, Formula::Int(0)));
    }
  }
  return Formula::And(std::move(conjuncts));
}

Formula BuildConstraint(const lang::CheckedProgram& program,
                        const mutgen::MutantTable& table, mutgen::MutantId mutant,
                        const PathScript& script, InfectionMode mode) {
  Formula out = Backsubstitute(script, InfectionFormula(program, table, mutant, mode));
  const lang::FunctionDef& fn = program.function(script.function);
  for (const auto& [name, sort] : FreeVariables(out)) {
    const bool is_param = std::any_of(fn.params.begin(), fn.params.end(),
                                      [&](const lang::Param& p) { return p.name == name; });
    if (!is_param) {
      throw InvariantViolation("constraint for mutant " + std::to_string(mutant) +
                               " still mentions local '" + name + "'");
    }
  }
  return out;
}

}  // namespace infectest::constraints
