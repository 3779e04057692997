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

#ifndef INFECTEST_MUTGEN_MUTANTS_H_
#define INFECTEST_MUTGEN_MUTANTS_H_

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lang/program.h"
#include "lang/sites.h"

namespace infectest::mutgen {

using MutantId = std::uint32_t;
using MutantSet = std::set<MutantId>;

struct Mutant {
  MutantId id = 0;
  lang::MutationSite site;
  lang::BinaryOp replacement = lang::BinaryOp::kAdd;
};

// The mutant set M of a program: every same-class operator replacement at
// every expression site. Ids are dense positions in the canonical order
// (sites by NodeId, then replacements in the operator-class order below).
class MutantTable {
 public:
  MutantTable() = default;

  const std::string& source_name() const { return source_name_; }
  const std::vector<Mutant>& mutants() const { return mutants_; }
  std::size_t size() const { return mutants_.size(); }
  // Throws UsageError for an unknown id.
  const Mutant& at(MutantId id) const;
  // Empty span when no mutant targets the node.
  std::span<const MutantId> AtNode(lang::NodeId node) const;
  MutantSet AllIds() const;

 private:
  friend MutantTable GenerateMutants(const lang::CheckedProgram& program);

  std::string source_name_;
  std::vector<Mutant> mutants_;
  std::map<lang::NodeId, std::vector<MutantId>> by_node_;
};

// Operators of a class in canonical order: + - * / %, < <= > >= == !=, && ||.
std::span<const lang::BinaryOp> ClassMembers(lang::OpClass op_class);

MutantTable GenerateMutants(const lang::CheckedProgram& program);

// The original program with mutant `id`'s operator swapped in.
lang::CheckedProgram ApplyMutant(const lang::CheckedProgram& program,
                                 const MutantTable& table, MutantId id);

// "file:line:col OP -> OP' (CLASS)"
std::string MutantDescriptor(const MutantTable& table, MutantId id);

}  // namespace infectest::mutgen

#endif  // INFECTEST_MUTGEN_MUTANTS_H_
