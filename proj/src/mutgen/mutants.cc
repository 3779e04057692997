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

#include "mutgen/mutants.h"

#include <array>
#include <sstream>

#include "common/error.h"

namespace infectest::mutgen {

using lang::BinaryOp;
using lang::OpClass;

namespace {

constexpr std::array<BinaryOp, 5> kAor = {BinaryOp::kAdd, BinaryOp::kSub,
                                          BinaryOp::kMul, BinaryOp::kDiv,
                                          BinaryOp::kMod};
constexpr std::array<BinaryOp, 6> kRor = {BinaryOp::kLt, BinaryOp::kLe,
                                          BinaryOp::kGt, BinaryOp::kGe,
                                          BinaryOp::kEq, BinaryOp::kNe};
constexpr std::array<BinaryOp, 2> kLcr = {BinaryOp::kAnd, BinaryOp::kOr};

}  // namespace

std::span<const BinaryOp> ClassMembers(OpClass op_class) {
  switch (op_class) {
    case OpClass::kAor:
      return kAor;
    case OpClass::kRor:
      return kRor;
    case OpClass::kLcr:
      return kLcr;
  }
  return {};
}

const Mutant& MutantTable::at(MutantId id) const {
  if (id >= mutants_.size()) {
    throw UsageError("unknown mutant id " + std::to_string(id) + " (table has " +
                     std::to_string(mutants_.size()) + " mutants)");
  }
  return mutants_[id];
}

std::span<const MutantId> MutantTable::AtNode(lang::NodeId node) const {
  auto it = by_node_.find(node);
  if (it == by_node_.end()) return {};
  return it->second;
}

MutantSet MutantTable::AllIds() const {
  MutantSet ids;
  for (const Mutant& m : mutants_) ids.insert(ids.end(), m.id);
  return ids;
}

MutantTable GenerateMutants(const lang::CheckedProgram& program) {
  MutantTable table;
  table.source_name_ = program.program().source_name;
  for (const lang::MutationSite& site : lang::ExpressionSites(program)) {
    for (BinaryOp op : ClassMembers(site.op_class)) {
      if (op == site.original_op) continue;
      const auto id = static_cast<MutantId>(table.mutants_.size());
      table.mutants_.push_back({id, site, op});
      table.by_node_[site.node].push_back(id);
    }
  }
  return table;
}

lang::CheckedProgram ApplyMutant(const lang::CheckedProgram& program,
                                 const MutantTable& table, MutantId id) {
  const Mutant& mutant = table.at(id);
  return program.WithOperator(mutant.site.node, mutant.replacement);
}

std::string MutantDescriptor(const MutantTable& table, MutantId id) {
  const Mutant& m = table.at(id);
  std::ostringstream out;
  out << table.source_name() << ':' << m.site.loc.line << ':' << m.site.loc.column
      << ' ' << lang::BinaryOpSpelling(m.site.original_op) << " -> "
      << lang::BinaryOpSpelling(m.replacement) << " ("
      << lang::OpClassName(m.site.op_class) << ')';
  return out.str();
}

}  // namespace infectest::mutgen
