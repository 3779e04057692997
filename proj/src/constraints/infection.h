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

#ifndef INFECTEST_CONSTRAINTS_INFECTION_H_
#define INFECTEST_CONSTRAINTS_INFECTION_H_

#include <optional>
#include <string_view>

#include "constraints/formula.h"
#include "constraints/path.h"
#include "lang/program.h"
#include "mutgen/mutants.h"

namespace infectest::constraints {

enum class InfectionMode : std::uint8_t { kLocal, kOutermost };

std::string_view InfectionModeName(InfectionMode mode);
std::optional<InfectionMode> InfectionModeFromName(std::string_view name);

// Condition, over the variables in scope at the site, under which the mutant
// changes the value of the site (local) or of the top-level expression of the
// statement hosting it (outermost). When the original or replacement operator
// divides, a zero right operand also counts: one side then fails and the
// other does not, or they fail differently. The operands' own denominators
// are then required to be nonzero.
Formula InfectionFormula(const lang::CheckedProgram& program,
                         const mutgen::MutantTable& table, mutgen::MutantId mutant,
                         InfectionMode mode);

// Backward substitution of `fragment` through `script`. Assumptions are
// conjoined with their polarity, assignments substitute their right-hand side
// and contribute a nonzero guard for each denominator in it.
Formula Backsubstitute(const PathScript& script, const Formula& fragment);

// Backsubstitute(script, InfectionFormula(...)). Throws InvariantViolation if
// anything other than the function's parameters is left free.
Formula BuildConstraint(const lang::CheckedProgram& program,
                        const mutgen::MutantTable& table, mutgen::MutantId mutant,
                        const PathScript& script, InfectionMode mode);

}  // namespace infectest::constraints

#endif  // INFECTEST_CONSTRAINTS_INFECTION_H_
