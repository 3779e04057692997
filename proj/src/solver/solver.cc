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

#include "solver/solver.h"

#include <limits>
#include <map>

#include "common/error.h"

namespace infectest::solver {

namespace {

using constraints::FKind;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

// Flattened formula: node i's operands are listed in `operands` from
// `first` on. Variables refer to a slot of the value array.
struct Compiled {
  struct Op {
    FKind kind;
    std::int64_t value;  // constant, or slot for variables
    std::uint32_t first;
    std::uint32_t count;
  };
  std::vector<Op> ops;
  std::vector<std::uint32_t> operands;
  std::uint32_t root = 0;
};

template <typename SlotOf>
std::uint32_t Compile(const Formula& f, Compiled& out, SlotOf& slot_of) {
  std::vector<std::uint32_t> args;
  for (const Formula& a : f.args()) args.push_back(Compile(a, out, slot_of));
  Compiled::Op op{f.kind(), f.node().value, static_cast<std::uint32_t>(out.operands.size()),
                  static_cast<std::uint32_t>(args.size())};
  if (f.kind() == FKind::kVar) op.value = slot_of(f.node().name, f.sort());
  out.operands.insert(out.operands.end(), args.begin(), args.end());
  out.ops.push_back(op);
  return static_cast<std::uint32_t>(out.ops.size() - 1);
}

// Evaluates node `i`; returns false when evaluation is undefined.
bool Eval(const Compiled& c, std::uint32_t i, const std::int64_t* slots, std::int64_t& out) {
  const Compiled::Op& op = c.ops[i];
  const std::uint32_t* args = c.operands.data() + op.first;
  switch (op.kind) {
    case FKind::kIntConst:
    case FKind::kBoolConst:
      out = op.value;
      return true;
    case FKind::kVar:
      out = slots[op.value];
      return true;
    case FKind::kNeg:
      if (!Eval(c, args[0], slots, out) || out == kMin) return false;
      out = -out;
      return true;
    case FKind::kNot:
      if (!Eval(c, args[0], slots, out)) return false;
      out = out == 0 ? 1 : 0;
      return true;
    case FKind::kAnd:
    case FKind::kOr: {
      const std::int64_t stop = op.kind == FKind::kAnd ? 0 : 1;
      for (std::uint32_t k = 0; k < op.count; ++k) {
        if (!Eval(c, args[k], slots, out)) return false;
        if (out == stop) return true;
      }
      out = 1 - stop;
      return true;
    }
    default:
      break;
  }
  std::int64_t a = 0;
  std::int64_t b = 0;
  if (!Eval(c, args[0], slots, a) || !Eval(c, args[1], slots, b)) return false;
  switch (op.kind) {
    case FKind::kAdd:
      return !__builtin_add_overflow(a, b, &out);
    case FKind::kSub:
      return !__builtin_sub_overflow(a, b, &out);
    case FKind::kMul:
      return !__builtin_mul_overflow(a, b, &out);
    case FKind::kDiv:
      if (b == 0 || (a == kMin && b == -1)) return false;
      out = a / b;
      return true;
    case FKind::kMod:
      if (b == 0) return false;
      out = b == -1 ? 0 : a % b;
      return true;
    case FKind::kLt:
      out = a < b;
      return true;
    case FKind::kLe:
      out = a <= b;
      return true;
    case FKind::kGt:
      out = a > b;
      return true;
    case FKind::kGe:
      out = a >= b;
      return true;
    case FKind::kEq:
      out = a == b;
      return true;
    case FKind::kNe:
      out = a != b;
      return true;
    default:
      return false;
  }
}

bool Holds(const Compiled& c, const std::int64_t* slots) {
  std::int64_t v = 0;
  return Eval(c, c.root, slots, v) && v != 0;
}

}  // namespace

const DomainVar* Domain::Find(std::string_view name) const {
  for (const DomainVar& v : vars) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

std::uint64_t Domain::Size() const {
  std::uint64_t total = 1;
  for (const DomainVar& v : vars) {
    const auto width = static_cast<std::uint64_t>(v.hi - v.lo) + 1;
    if (__builtin_mul_overflow(total, width, &total)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return total;
}

Domain UniformDomain(std::span<const lang::Param> params, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) {
    throw DomainError("empty domain " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  Domain d;
  for (const lang::Param& p : params) {
    if (p.type == Sort::kBool) {
      d.vars.push_back({p.name, Sort::kBool, 0, 1});
    } else {
      d.vars.push_back({p.name, Sort::kInt, lo, hi});
    }
  }
  return d;
}

bool EvalFormula(const Formula& formula, const Assignment& assignment) {
  std::vector<std::int64_t> slots;
  auto slot_of = [&](const std::string& name, Sort) -> std::int64_t {
    for (const Binding& b : assignment) {
      if (b.name == name) {
        slots.push_back(b.value);
        return static_cast<std::int64_t>(slots.size() - 1);
      }
    }
    throw UsageError("variable '" + name + "' is not bound");
  };
  Compiled c;
  c.root = Compile(formula, c, slot_of);
  return Holds(c, slots.data());
}

std::string_view SolveStatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kSat:
      return "sat";
    case SolveStatus::kUnsatOverDomain:
      return "unsat-over-domain";
    case SolveStatus::kUnknown:
      return "unknown";
  }
  return "?";
}

std::string_view UnknownReasonName(UnknownReason reason) {
  switch (reason) {
    case UnknownReason::kNone:
      return "none";
    case UnknownReason::kBudgetExceeded:
      return "budget-exceeded";
    case UnknownReason::kUnsupported:
      return "unsupported";
  }
  return "?";
}

SolveResult Solve(const Formula& formula, const Domain& domain, std::uint64_t budget) {
  if (budget == 0) throw UsageError("solver budget must be positive");
  SolveResult result;
  // Slots follow domain order; only mentioned variables are enumerated.
  std::vector<std::int64_t> slots(domain.vars.size());
  std::vector<bool> used(domain.vars.size(), false);
  for (std::size_t i = 0; i < domain.vars.size(); ++i) slots[i] = domain.vars[i].lo;
  bool supported = true;
  auto slot_of = [&](const std::string& name, Sort sort) -> std::int64_t {
    for (std::size_t i = 0; i < domain.vars.size(); ++i) {
      if (domain.vars[i].name == name) {
        if (domain.vars[i].sort != sort) supported = false;
        used[i] = true;
        return static_cast<std::int64_t>(i);
      }
    }
    supported = false;
    return 0;
  };
  Compiled c;
  c.root = Compile(formula, c, slot_of);
  if (!supported) {
    result.reason = UnknownReason::kUnsupported;
    return result;
  }
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < domain.vars.size(); ++i) {
    if (used[i]) order.push_back(i);
  }

  for (;;) {
    if (result.checked == budget) {
      result.reason = UnknownReason::kBudgetExceeded;
      return result;
    }
    ++result.checked;
    if (Holds(c, slots.data())) {
      result.status = SolveStatus::kSat;
      Assignment model;
      for (std::size_t i = 0; i < domain.vars.size(); ++i) {
        model.push_back({domain.vars[i].name, domain.vars[i].sort, slots[i]});
      }
      result.model = std::move(model);
      return result;
    }
    // Odometer step, least significant variable last.
    std::size_t k = order.size();
    while (k > 0) {
      const std::size_t v = order[k - 1];
      if (slots[v] < domain.vars[v].hi) {
        ++slots[v];
        break;
      }
      slots[v] = domain.vars[v].lo;
      --k;
    }
    if (k == 0) {
      result.status = SolveStatus::kUnsatOverDomain;
      return result;
    }
  }
}

}  // namespace infectest::solver
