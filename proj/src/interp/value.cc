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

#include "interp/value.h"

#include <charconv>
#include <limits>

namespace infectest::interp {

using lang::BinaryOp;

std::string ToString(const Value& value) {
  if (value.is_bool()) return value.as_bool() ? "true" : "false";
  return std::to_string(value.as_int());
}

std::optional<Value> ParseValue(std::string_view text) {
  if (text == "true") return Value::Bool(true);
  if (text == "false") return Value::Bool(false);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    return std::nullopt;
  }
  return Value::Int(v);
}

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDivByZero:
      return "div-by-zero";
    case ErrorKind::kModByZero:
      return "mod-by-zero";
    case ErrorKind::kOverflow:
      return "overflow";
    case ErrorKind::kStepBudgetExceeded:
      return "step-budget-exceeded";
  }
  return "?";
}

std::string ToString(const Outcome& outcome) {
  if (outcome.ok()) return ToString(outcome.value());
  return "error:" + std::string(ErrorKindName(outcome.error()));
}

Outcome ApplyBinary(BinaryOp op, Value lhs, Value rhs) {
  const std::int64_t a = lhs.bits;
  const std::int64_t b = rhs.bits;
  std::int64_t r = 0;
  switch (op) {
    case BinaryOp::kAdd:
      if (__builtin_add_overflow(a, b, &r)) return ErrorKind::kOverflow;
      return Value::Int(r);
    case BinaryOp::kSub:
      if (__builtin_sub_overflow(a, b, &r)) return ErrorKind::kOverflow;
      return Value::Int(r);
    case BinaryOp::kMul:
      if (__builtin_mul_overflow(a, b, &r)) return ErrorKind::kOverflow;
      return Value::Int(r);
    case BinaryOp::kDiv:
      if (b == 0) return ErrorKind::kDivByZero;
      if (a == std::numeric_limits<std::int64_t>::min() && b == -1) {
        return ErrorKind::kOverflow;
      }
      return Value::Int(a / b);
    case BinaryOp::kMod:
      if (b == 0) return ErrorKind::kModByZero;
      // The remainder is 0, but the hardware instruction traps.
      if (b == -1) return Value::Int(0);
      return Value::Int(a % b);
    case BinaryOp::kLt:
      return Value::Bool(a < b);
    case BinaryOp::kLe:
      return Value::Bool(a <= b);
    case BinaryOp::kGt:
      return Value::Bool(a > b);
    case BinaryOp::kGe:
      return Value::Bool(a >= b);
    case BinaryOp::kEq:
      return Value::Bool(a == b);
    case BinaryOp::kNe:
      return Value::Bool(a != b);
    case BinaryOp::kAnd:
      return Value::Bool(a != 0 && b != 0);
    case BinaryOp::kOr:
      return Value::Bool(a != 0 || b != 0);
  }
  return Value::Int(0);
}

}  // namespace infectest::interp
