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

#ifndef INFECTEST_INTERP_VALUE_H_
#define INFECTEST_INTERP_VALUE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "lang/ast.h"

namespace infectest::interp {

struct Value {
  lang::Type type = lang::Type::kInt;
  std::int64_t bits = 0;

  static Value Int(std::int64_t v) { return {lang::Type::kInt, v}; }
  static Value Bool(bool v) { return {lang::Type::kBool, v ? 1 : 0}; }

  bool is_bool() const { return type == lang::Type::kBool; }
  bool as_bool() const { return bits != 0; }
  std::int64_t as_int() const { return bits; }

  friend bool operator==(const Value&, const Value&) = default;
};

std::string ToString(const Value& value);
// Accepts decimal integers (optionally signed) and true/false.
std::optional<Value> ParseValue(std::string_view text);

enum class ErrorKind : std::uint8_t {
  kDivByZero,
  kModByZero,
  kOverflow,
  kStepBudgetExceeded,
};

std::string_view ErrorKindName(ErrorKind kind);

// Result of evaluating an expression or a whole call: a value or a runtime
// error. Two outcomes are equal only if both are the same value or both are
// errors of the same kind.
class Outcome {
 public:
  Outcome(Value value) : state_(value) {}  // NOLINT(google-explicit-constructor)
  Outcome(ErrorKind error) : state_(error) {}  // NOLINT(google-explicit-constructor)

  bool ok() const { return std::holds_alternative<Value>(state_); }
  const Value& value() const { return std::get<Value>(state_); }
  ErrorKind error() const { return std::get<ErrorKind>(state_); }

  friend bool operator==(const Outcome&, const Outcome&) = default;

 private:
  std::variant<Value, ErrorKind> state_;
};

// "3", "true", or "error:div-by-zero".
std::string ToString(const Outcome& outcome);

// Strict application of a binary operator to two evaluated operands, with
// 64-bit overflow and division checks. Logical operators are applied to both
// values without short-circuiting.
Outcome ApplyBinary(lang::BinaryOp op, Value lhs, Value rhs);

}  // namespace infectest::interp

#endif  // INFECTEST_INTERP_VALUE_H_
