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

#ifndef INFECTEST_SOLVER_SOLVER_H_
#define INFECTEST_SOLVER_SOLVER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "constraints/formula.h"
#include "lang/ast.h"

namespace infectest::solver {

using constraints::Formula;
using constraints::Sort;

inline constexpr std::int64_t kDefaultDomainLo = -8;
inline constexpr std::int64_t kDefaultDomainHi = 16;
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct DomainVar {
  std::string name;
  Sort sort = Sort::kInt;
  std::int64_t lo = 0;  // booleans always range over {0, 1}
  std::int64_t hi = 0;
};

// Variables in enumeration order: the first one is the most significant.
struct Domain {
  std::vector<DomainVar> vars;

  const DomainVar* Find(std::string_view name) const;
  // Product of the range sizes, saturating at UINT64_MAX.
  std::uint64_t Size() const;
};

// One [lo, hi] range for every parameter; throws DomainError if lo > hi.
Domain UniformDomain(std::span<const lang::Param> params, std::int64_t lo, std::int64_t hi);

struct Binding {
  std::string name;
  Sort sort = Sort::kInt;
  std::int64_t value = 0;
  friend bool operator==(const Binding&, const Binding&) = default;
};

using Assignment = std::vector<Binding>;

// Ground evaluation. Integer arithmetic is 64-bit; a division or remainder by
// zero, or an overflow, in an evaluated position makes the whole formula
// false. Throws UsageError for a variable missing from the assignment.
bool EvalFormula(const Formula& formula, const Assignment& assignment);

enum class SolveStatus : std::uint8_t { kSat, kUnsatOverDomain, kUnknown };
enum class UnknownReason : std::uint8_t { kNone, kBudgetExceeded, kUnsupported };

std::string_view SolveStatusName(SolveStatus status);
std::string_view UnknownReasonName(UnknownReason reason);

struct SolveResult {
  SolveStatus status = SolveStatus::kUnknown;
  UnknownReason reason = UnknownReason::kNone;
  // Value for every domain variable, in domain order; set when Sat.
  std::optional<Assignment> model;
  std::uint64_t checked = 0;  // assignments evaluated
};

// Enumerates assignments lexicographically (domain order, values ascending)
// and returns the first that satisfies the formula. Domain variables the
// formula does not mention are held at their lower bound. Checking more than
// `budget` assignments gives Unknown(budget-exceeded); a formula variable
// missing from the domain, or of another sort there, gives
// Unknown(unsupported). Throws UsageError if budget is 0.
SolveResult Solve(const Formula& formula, const Domain& domain,
                  std::uint64_t budget = kDefaultBudget);

}  // namespace infectest::solver

#endif  // INFECTEST_SOLVER_SOLVER_H_
