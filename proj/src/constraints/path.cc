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

#include "constraints/path.h"

#include <algorithm>
#include <set>

#include "common/error.h"

namespace infectest::constraints {

namespace {

using lang::Expr;
using lang::Stmt;

// Marks `host` and every compound statement around it.
bool MarkEnclosing(const lang::Block& block, const Stmt* host, std::set<const Stmt*>& out) {
  bool found = false;
  for (const Stmt& stmt : block) {
    if (&stmt == host || MarkEnclosing(stmt.body, host, out) ||
        MarkEnclosing(stmt.else_body, host, out)) {
      out.insert(&stmt);
      found = true;
    }
  }
  return found;
}

class PathWalker {
 public:
  PathWalker(const lang::CheckedProgram& program, lang::NodeId site, std::size_t bound)
      : site_(site), bound_(bound) {
    const auto& info = program.node(site);
    function_ = info.function;
    host_ = info.stmt;
    guards_ = SiteGuards(program, site);
    MarkEnclosing(program.function(function_).body, host_, enclosing_);
    for (auto it = program.function(function_).body.rbegin();
         it != program.function(function_).body.rend(); ++it) {
      pending_.push_back(&*it);
    }
  }

  PathSet Run() {
    Walk();
    PathSet out;
    out.paths = std::move(paths_);
    if (loops_) {
      out.complete = false;
      out.reason = Incompleteness::kLoops;
    } else if (truncated_) {
      out.complete = false;
      out.reason = Incompleteness::kPathBound;
    }
    return out;
  }

 private:
  bool Stopped() const { return loops_ || truncated_; }

  // `pending_` is a stack of statements still to execute, next on top.
  void Walk() {
    if (Stopped()) return;
    if (std::none_of(pending_.begin(), pending_.end(),
                     [&](const Stmt* s) { return enclosing_.count(s) > 0; })) {
      return;
    }
    const Stmt* stmt = pending_.back();
    pending_.pop_back();
    if (stmt == host_) {
      if (stmt->kind == Stmt::Kind::kWhile) {
        loops_ = true;
      } else {
        Emit();
      }
    } else {
      switch (stmt->kind) {
        case Stmt::Kind::kAssign:
          steps_.push_back(AssignStep{stmt->target, FromExpr(stmt->expr), stmt->id});
          Walk();
          steps_.pop_back();
          break;
        case Stmt::Kind::kReturn:
          break;
        case Stmt::Kind::kWhile:
          loops_ = true;
          break;
        case Stmt::Kind::kIf: {
          const Formula cond = FromExpr(stmt->expr);
          for (bool taken : {true, false}) {
            const lang::Block& block = taken ? stmt->body : stmt->else_body;
            steps_.push_back(Assume{cond, taken, AssumeOrigin::kBranch, stmt->expr.id});
            const std::size_t depth = pending_.size();
            for (auto it = block.rbegin(); it != block.rend(); ++it) pending_.push_back(&*it);
            Walk();
            pending_.resize(depth);
            steps_.pop_back();
          }
          break;
        }
      }
    }
    pending_.push_back(stmt);
  }

  void Emit() {
    if (paths_.size() == bound_) {
      truncated_ = true;
      return;
    }
    PathScript script;
    script.function = function_;
    script.site = site_;
    script.steps = steps_;
    script.steps.insert(script.steps.end(), guards_.begin(), guards_.end());
    paths_.push_back(std::move(script));
  }

  lang::NodeId site_;
  std::size_t bound_;
  std::size_t function_ = 0;
  const Stmt* host_ = nullptr;
  std::vector<PathStep> guards_;
  std::set<const Stmt*> enclosing_;
  std::vector<const Stmt*> pending_;
  std::vector<PathStep> steps_;
  std::vector<PathScript> paths_;
  bool loops_ = false;
  bool truncated_ = false;
};

}  // namespace

std::string_view AssumeOriginName(AssumeOrigin origin) {
  switch (origin) {
    case AssumeOrigin::kBranch:
      return "branch";
    case AssumeOrigin::kShortCircuit:
      return "short-circuit";
    case AssumeOrigin::kDefinedness:
      return "definedness";
  }
  return "?";
}

std::string_view IncompletenessName(Incompleteness reason) {
  switch (reason) {
    case Incompleteness::kNone:
      return "none";
    case Incompleteness::kLoops:
      return "loops";
    case Incompleteness::kPathBound:
      return "path-bound";
  }
  return "?";
}

std::vector<PathStep> SiteGuards(const lang::CheckedProgram& program, lang::NodeId site) {
  std::vector<PathStep> guards;
  const Expr* child = program.expr(site);
  if (child == nullptr) throw UsageError("node " + std::to_string(site) + " is not an expression");
  // Collected innermost first, reversed at the end.
  for (const Expr* parent = program.node(site).parent; parent != nullptr;
       child = parent, parent = program.node(parent->id).parent) {
    if (parent->kind != Expr::Kind::kBinary || parent->rhs.get() != child) continue;
    std::vector<PathStep> local;
    const Formula lhs = FromExpr(*parent->lhs);
    if (parent->binary_op == lang::BinaryOp::kAnd) {
      local.push_back(Assume{lhs, true, AssumeOrigin::kShortCircuit, parent->lhs->id});
    } else if (parent->binary_op == lang::BinaryOp::kOr) {
      local.push_back(Assume{lhs, false, AssumeOrigin::kShortCircuit, parent->lhs->id});
    } else {
      for (const Formula& d : Denominators(lhs)) {
        local.push_back(Assume{Formula::Binary(FKind::kNe, d, Formula::Int(0)), true,
                               AssumeOrigin::kDefinedness, parent->lhs->id});
      }
    }
    guards.insert(guards.begin(), local.begin(), local.end());
  }
  return guards;
}

PathScript TraceToPath(const lang::CheckedProgram& program,
                       const interp::ExecutionTrace& trace, lang::NodeId site) {
  PathScript script;
  script.site = site;
  script.function = program.node(site).function;
  const Stmt* current = nullptr;
  for (const interp::TraceStep& step : trace.steps) {
    if (const auto* enter = std::get_if<interp::StmtEnter>(&step)) {
      current = program.node(enter->stmt).stmt;
    } else if (const auto* branch = std::get_if<interp::Branch>(&step)) {
      script.steps.push_back(Assume{FromExpr(*program.expr(branch->cond)), branch->taken,
                                    AssumeOrigin::kBranch, branch->cond});
    } else if (std::holds_alternative<interp::Assign>(step)) {
      script.steps.push_back(AssignStep{current->target, FromExpr(current->expr), current->id});
    } else if (const auto* eval = std::get_if<interp::SiteEval>(&step)) {
      if (eval->site == site) {
        const std::vector<PathStep> guards = SiteGuards(program, site);
        script.steps.insert(script.steps.end(), guards.begin(), guards.end());
        return script;
      }
    }
  }
  throw UsageError("the trace does not evaluate node " + std::to_string(site));
}

PathSet EnumeratePaths(const lang::CheckedProgram& program, lang::NodeId site,
                       std::size_t path_bound,
                       std::span<const interp::ExecutionTrace> observed) {
  PathSet set = PathWalker(program, site, path_bound).Run();
  if (set.reason != Incompleteness::kLoops) return set;
  set.paths.clear();
  for (const interp::ExecutionTrace& trace : observed) {
    const bool reaches = std::any_of(trace.steps.begin(), trace.steps.end(), [&](const auto& s) {
      const auto* eval = std::get_if<interp::SiteEval>(&s);
      return eval != nullptr && eval->site == site;
    });
    if (!reaches) continue;
    PathScript script = TraceToPath(program, trace, site);
    if (std::find(set.paths.begin(), set.paths.end(), script) != set.paths.end()) continue;
    if (set.paths.size() == path_bound) break;
    set.paths.push_back(std::move(script));
  }
  return set;
}

}  // namespace infectest::constraints
