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

#include "formula_oracle.h"

#include <limits>
#include <stdexcept>

namespace infectest::testing {

namespace {

using constraints::FKind;
using constraints::Formula;
using Wide = __int128;

std::optional<Wide> Fits(Wide v) {
  if (v < std::numeric_limits<std::int64_t>::min() ||
      v > std::numeric_limits<std::int64_t>::max()) {
    return std::nullopt;
  }
  return v;
}

std::optional<Wide> Value(const Formula& f, const Env& env) {
  const auto& args = f.args();
  switch (f.kind()) {
    case FKind::kIntConst:
    case FKind::kBoolConst:
      return f.node().value;
    case FKind::kVar: {
      auto it = env.find(f.node().name);
      if (it == env.end()) throw std::logic_error("unbound " + f.node().name);
      return it->second;
    }
    case FKind::kNot: {
      auto v = Value(args[0], env);
      if (!v) return std::nullopt;
      return *v == 0 ? 1 : 0;
    }
    case FKind::kNeg: {
      auto v = Value(args[0], env);
      if (!v) return std::nullopt;
      return Fits(-*v);
    }
    case FKind::kAnd: {
      for (const Formula& a : args) {
        auto v = Value(a, env);
        if (!v) return std::nullopt;
        if (*v == 0) return 0;
      }
      return 1;
    }
    case FKind::kOr: {
      for (const Formula& a : args) {
        auto v = Value(a, env);
        if (!v) return std::nullopt;
        if (*v != 0) return 1;
      }
      return 0;
    }
    default:
      break;
  }
  auto l = Value(args[0], env);
  if (!l) return std::nullopt;
  auto r = Value(args[1], env);
  if (!r) return std::nullopt;
  const Wide a = *l;
  const Wide b = *r;
  switch (f.kind()) {
    case FKind::kAdd: return Fits(a + b);
    case FKind::kSub: return Fits(a - b);
    case FKind::kMul: return Fits(a * b);
    case FKind::kDiv:
      if (b == 0) return std::nullopt;
      return Fits(a / b);
    case FKind::kMod:
      if (b == 0) return std::nullopt;
      return a % b;
    case FKind::kLt: return a < b ? 1 : 0;
    case FKind::kLe: return a <= b ? 1 : 0;
    case FKind::kGt: return a > b ? 1 : 0;
    case FKind::kGe: return a >= b ? 1 : 0;
    case FKind::kEq: return a == b ? 1 : 0;
    case FKind::kNe: return a != b ? 1 : 0;
    default:
      throw std::logic_error("unexpected formula kind");
  }
}

void Enumerate(const Formula& f, const std::vector<std::string>& vars, std::size_t next,
               std::int64_t lo, std::int64_t hi, Env& env, std::vector<Env>& out) {
  if (next == vars.size()) {
    if (OracleHolds(f, env)) out.push_back(env);
    return;
  }
  for (std::int64_t v = lo; v <= hi; ++v) {
    env[vars[next]] = v;
    Enumerate(f, vars, next + 1, lo, hi, env, out);
  }
}

Formula RandomInt(std::mt19937_64& rng, const std::vector<std::string>& vars, int depth) {
  std::uniform_int_distribution<int> pick(0, 99);
  if (depth == 0 || pick(rng) < 30) {
    if (pick(rng) < 40) return Formula::Int(std::uniform_int_distribution<int>(-4, 6)(rng));
    return Formula::Var(vars[static_cast<std::size_t>(pick(rng)) % vars.size()],
                        constraints::Sort::kInt);
  }
  if (pick(rng) < 8) return Formula::Neg(RandomInt(rng, vars, depth - 1));
  static constexpr FKind kOps[] = {FKind::kAdd, FKind::kSub, FKind::kMul, FKind::kDiv,
                                   FKind::kMod};
  return Formula::Binary(kOps[pick(rng) % 5], RandomInt(rng, vars, depth - 1),
                         RandomInt(rng, vars, depth - 1));
}

}  // namespace

bool OracleHolds(const Formula& f, const Env& env) {
  auto v = Value(f, env);
  return v.has_value() && *v != 0;
}

std::vector<Env> OracleModels(const Formula& f, const std::vector<std::string>& vars,
                              std::int64_t lo, std::int64_t hi) {
  std::vector<Env> out;
  Env env;
  Enumerate(f, vars, 0, lo, hi, env, out);
  return out;
}

Formula RandomFormula(std::mt19937_64& rng, const std::vector<std::string>& vars, int depth) {
  std::uniform_int_distribution<int> pick(0, 99);
  if (depth == 0 || pick(rng) < 35) {
    static constexpr FKind kCmp[] = {FKind::kLt, FKind::kLe, FKind::kGt,
                                     FKind::kGe, FKind::kEq, FKind::kNe};
    return Formula::Binary(kCmp[pick(rng) % 6], RandomInt(rng, vars, 2),
                           RandomInt(rng, vars, 2));
  }
  const int choice = pick(rng);
  if (choice < 15) return Formula::Not(RandomFormula(rng, vars, depth - 1));
  if (choice < 25) {
    // Boolean equality and exclusive-or.
    return Formula::Binary(pick(rng) < 50 ? FKind::kEq : FKind::kNe,
                           RandomFormula(rng, vars, depth - 1),
                           RandomFormula(rng, vars, depth - 1));
  }
  std::vector<Formula> parts;
  const int n = 2 + pick(rng) % 2;
  for (int i = 0; i < n; ++i) parts.push_back(RandomFormula(rng, vars, depth - 1));
  return choice < 65 ? Formula::And(std::move(parts)) : Formula::Or(std::move(parts));
}

}  // namespace infectest::testing
