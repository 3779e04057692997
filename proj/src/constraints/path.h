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

#ifndef INFECTEST_CONSTRAINTS_PATH_H_
#define INFECTEST_CONSTRAINTS_PATH_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "constraints/formula.h"
#include "interp/trace.h"
#include "lang/program.h"

namespace infectest::constraints {

enum class AssumeOrigin : std::uint8_t {
  kBranch,        // if or while condition
  kShortCircuit,  // left operand of an enclosing && or ||
  kDefinedness,   // a denominator evaluated before the site must be nonzero
};

std::string_view AssumeOriginName(AssumeOrigin origin);

struct Assume {
  Formula cond;
  bool polarity = true;
  AssumeOrigin origin = AssumeOrigin::kBranch;
  lang::NodeId source = 0;  // condition or operand node
  friend bool operator==(const Assume&, const Assume&) = default;
};

struct AssignStep {
  std::string var;
  Formula rhs;
  lang::NodeId stmt = 0;
  friend bool operator==(const AssignStep&, const AssignStep&) = default;
};

using PathStep = std::variant<Assume, AssignStep>;

// Branch decisions and assignments from function entry to the first
// evaluation of `site`, followed by the guards under which the site's
// enclosing expression actually evaluates it.
struct PathScript {
  std::size_t function = 0;
  lang::NodeId site = 0;
  std::vector<PathStep> steps;
  friend bool operator==(const PathScript&, const PathScript&) = default;
};

// Guards contributed by the expressions enclosing `site`, outermost first:
// for the right operand of && the left operand is assumed true, for || false,
// and for any other operator the denominators of the left operand are assumed
// nonzero.
std::vector<PathStep> SiteGuards(const lang::CheckedProgram& program, lang::NodeId site);

// The path a concrete execution took up to the first evaluation of `site`.
// Loop iterations appear unrolled. Throws UsageError if the trace never
// evaluates the site.
PathScript TraceToPath(const lang::CheckedProgram& program,
                       const interp::ExecutionTrace& trace, lang::NodeId site);

enum class Incompleteness : std::uint8_t { kNone, kLoops, kPathBound };

std::string_view IncompletenessName(Incompleteness reason);

struct PathSet {
  std::vector<PathScript> paths;
  bool complete = true;
  Incompleteness reason = Incompleteness::kNone;
};

// Every acyclic entry-to-site path of the hosting function, in depth-first
// order with then-branches first. A while loop met before the site makes the
// set incomplete; the paths are then those of `observed` traces that reach
// the site, deduplicated. More than `path_bound` paths also make the set
// incomplete, keeping the first `path_bound`.
PathSet EnumeratePaths(const lang::CheckedProgram& program, lang::NodeId site,
                       std::size_t path_bound,
                       std::span<const interp::ExecutionTrace> observed = {});

}  // namespace infectest::constraints

#endif  // INFECTEST_CONSTRAINTS_PATH_H_
