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

#include "constraints/formula.h"

#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "common/error.h"

namespace infectest::constraints {

namespace {

struct KindInfo {
  FKind kind;
  std::string_view spelling;
};

constexpr KindInfo kKinds[] = {
    {FKind::kIntConst, "<int>"}, {FKind::kBoolConst, "<bool>"}, {FKind::kVar, "<var>"},
    {FKind::kNeg, "-"},          {FKind::kNot, "not"},          {FKind::kAdd, "+"},
    {FKind::kSub, "-"},          {FKind::kMul, "*"},            {FKind::kDiv, "/"},
    {FKind::kMod, "%"},          {FKind::kLt, "<"},             {FKind::kLe, "<="},
    {FKind::kGt, ">"},           {FKind::kGe, ">="},            {FKind::kEq, "=="},
    {FKind::kNe, "!="},          {FKind::kAnd, "and"},          {FKind::kOr, "or"},
};

FKind KindOf(lang::BinaryOp op) {
  switch (op) {
    case lang::BinaryOp::kAdd: return FKind::kAdd;
    case lang::BinaryOp::kSub: return FKind::kSub;
    case lang::BinaryOp::kMul: return FKind::kMul;
    case lang::BinaryOp::kDiv: return FKind::kDiv;
    case lang::BinaryOp::kMod: return FKind::kMod;
    case lang::BinaryOp::kLt: return FKind::kLt;
    case lang::BinaryOp::kLe: return FKind::kLe;
    case lang::BinaryOp::kGt: return FKind::kGt;
    case lang::BinaryOp::kGe: return FKind::kGe;
    case lang::BinaryOp::kEq: return FKind::kEq;
    case lang::BinaryOp::kNe: return FKind::kNe;
    case lang::BinaryOp::kAnd: return FKind::kAnd;
    case lang::BinaryOp::kOr: return FKind::kOr;
  }
  return FKind::kAdd;
}

void Print(const Formula& f, std::ostream& out) {
  const Formula::Node& n = f.node();
  switch (n.kind) {
    case FKind::kIntConst:
      out << n.value;
      return;
    case FKind::kBoolConst:
      out << (n.value != 0 ? "true" : "false");
      return;
    case FKind::kVar:
      out << n.name;
      return;
    default:
      break;
  }
  out << '(' << KindSpelling(n.kind);
  for (const Formula& arg : n.args) {
    out << ' ';
    Print(arg, out);
  }
  out << ')';
}

void CollectVariables(const Formula& f, std::vector<std::pair<std::string, Sort>>& out) {
  if (f.kind() == FKind::kVar) {
    for (const auto& [name, sort] : out) {
      if (name == f.node().name) return;
    }
    out.emplace_back(f.node().name, f.sort());
    return;
  }
  for (const Formula& arg : f.args()) CollectVariables(arg, out);
}

void CollectDenominators(const Formula& f, std::vector<Formula>& out) {
  if (f.kind() == FKind::kDiv || f.kind() == FKind::kMod) out.push_back(f.args()[1]);
  for (const Formula& arg : f.args()) CollectDenominators(arg, out);
}

// ---- prefix text parser ----

struct SExpr {
  std::string atom;  // empty for lists
  std::vector<SExpr> items;
  std::size_t offset = 0;
  bool is_list = false;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  SExpr ReadAll() {
    SExpr e = Read();
    SkipSpace();
    if (pos_ != text_.size()) Fail("trailing input");
    return e;
  }

  [[noreturn]] void Fail(const std::string& message) const { Fail(message, pos_); }

  [[noreturn]] void Fail(const std::string& message, std::size_t offset) const {
    throw SyntaxError(message, 1, static_cast<int>(offset) + 1);
  }

 private:
  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  SExpr Read() {
    SkipSpace();
    if (pos_ >= text_.size()) Fail("unexpected end of input");
    SExpr e;
    e.offset = pos_;
    if (text_[pos_] == '(') {
      ++pos_;
      e.is_list = true;
      for (;;) {
        SkipSpace();
        if (pos_ >= text_.size()) Fail("missing ')'");
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        e.items.push_back(Read());
      }
      if (e.items.empty()) Fail("empty list", e.offset);
      return e;
    }
    if (text_[pos_] == ')') Fail("unexpected ')'");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')') {
      ++pos_;
    }
    e.atom = std::string(text_.substr(start, pos_ - start));
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool IsIdentifier(std::string_view s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s.front()))) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

std::optional<std::int64_t> ParseInt(std::string_view s) {
  std::int64_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
  return v;
}

// Builds formulas from s-expressions once variable sorts are known.
class Builder {
 public:
  Builder(const Reader& reader, std::map<std::string, Sort> sorts)
      : reader_(reader), sorts_(std::move(sorts)) {}

  Formula Build(const SExpr& e) {
    if (!e.is_list) {
      if (e.atom == "true") return Formula::Bool(true);
      if (e.atom == "false") return Formula::Bool(false);
      if (auto v = ParseInt(e.atom)) return Formula::Int(*v);
      if (!IsIdentifier(e.atom)) reader_.Fail("bad atom '" + e.atom + "'", e.offset);
      return Formula::Var(e.atom, sorts_.at(e.atom));
    }
    const SExpr& head = e.items.front();
    if (head.is_list) reader_.Fail("operator expected", head.offset);
    std::vector<Formula> args;
    for (std::size_t i = 1; i < e.items.size(); ++i) args.push_back(Build(e.items[i]));
    const std::string& op = head.atom;
    auto expect_sort = [&](Sort want) {
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i].sort() != want) {
          reader_.Fail("operand of '" + op + "' has the wrong sort", e.items[i + 1].offset);
        }
      }
    };
    auto expect_arity = [&](std::size_t n) {
      if (args.size() != n) {
        reader_.Fail("'" + op + "' takes " + std::to_string(n) + " operands", e.offset);
      }
    };
    if (op == "and" || op == "or") {
      expect_sort(Sort::kBool);
      if (args.empty()) reader_.Fail("'" + op + "' needs operands", e.offset);
      return op == "and" ? Formula::And(std::move(args)) : Formula::Or(std::move(args));
    }
    if (op == "not") {
      expect_arity(1);
      expect_sort(Sort::kBool);
      return Formula::Not(args[0]);
    }
    if (op == "-" && args.size() == 1) {
      expect_sort(Sort::kInt);
      return Formula::Neg(args[0]);
    }
    for (const KindInfo& info : kKinds) {
      if (info.spelling != op || info.kind == FKind::kNeg) continue;
      if (!IsArithmeticKind(info.kind) && !IsComparisonKind(info.kind)) break;
      expect_arity(2);
      if (info.kind == FKind::kEq || info.kind == FKind::kNe) {
        if (args[0].sort() != args[1].sort()) {
          reader_.Fail("operands of '" + op + "' differ in sort", e.offset);
        }
      } else {
        expect_sort(Sort::kInt);
      }
      return Formula::Binary(info.kind, args[0], args[1]);
    }
    reader_.Fail("unknown operator '" + op + "'", head.offset);
  }

 private:
  const Reader& reader_;
  std::map<std::string, Sort> sorts_;
};

// Sort inference: a variable is boolean if it appears under and/or/not or is
// equated with something boolean; everything else defaults to int.
class SortInference {
 public:
  std::map<std::string, Sort> Run(const SExpr& root) {
    Collect(root);
    bool changed = true;
    while (changed) {
      changed = false;
      Visit(root, std::nullopt, changed);
    }
    std::map<std::string, Sort> out;
    for (const auto& [name, sort] : sorts_) out[name] = sort.value_or(Sort::kInt);
    return out;
  }

 private:
  void Collect(const SExpr& e) {
    if (!e.is_list) {
      if (e.atom != "true" && e.atom != "false" && !ParseInt(e.atom) && IsIdentifier(e.atom)) {
        sorts_.try_emplace(e.atom, std::nullopt);
      }
      return;
    }
    for (std::size_t i = 1; i < e.items.size(); ++i) Collect(e.items[i]);
  }

  // Best-effort sort of an expression without forcing anything.
  std::optional<Sort> SortOf(const SExpr& e) const {
    if (!e.is_list) {
      if (e.atom == "true" || e.atom == "false") return Sort::kBool;
      if (ParseInt(e.atom)) return Sort::kInt;
      auto it = sorts_.find(e.atom);
      return it == sorts_.end() ? std::nullopt : it->second;
    }
    if (e.items.front().is_list) return std::nullopt;
    const std::string& op = e.items.front().atom;
    if (op == "and" || op == "or" || op == "not" || op == "<" || op == "<=" || op == ">" ||
        op == ">=" || op == "==" || op == "!=") {
      return Sort::kBool;
    }
    return Sort::kInt;
  }

  void Force(const SExpr& e, Sort sort, bool& changed) {
    if (e.is_list) return;
    auto it = sorts_.find(e.atom);
    if (it != sorts_.end() && !it->second) {
      it->second = sort;
      changed = true;
    }
  }

  void Visit(const SExpr& e, std::optional<Sort> expected, bool& changed) {
    if (!e.is_list) {
      if (expected) Force(e, *expected, changed);
      return;
    }
    if (e.items.front().is_list) return;
    const std::string& op = e.items.front().atom;
    std::optional<Sort> operand;
    if (op == "and" || op == "or" || op == "not") {
      operand = Sort::kBool;
    } else if (op == "==" || op == "!=") {
      for (std::size_t i = 1; i < e.items.size() && !operand; ++i) {
        operand = SortOf(e.items[i]);
      }
    } else {
      operand = Sort::kInt;
    }
    for (std::size_t i = 1; i < e.items.size(); ++i) Visit(e.items[i], operand, changed);
  }

  std::map<std::string, std::optional<Sort>> sorts_;
};

}  // namespace

Formula Formula::Make(Node node) {
  return Formula(std::make_shared<const Node>(std::move(node)));
}

Formula Formula::Int(std::int64_t value) {
  Node n;
  n.kind = FKind::kIntConst;
  n.sort = Sort::kInt;
  n.value = value;
  return Make(std::move(n));
}

Formula Formula::Bool(bool value) {
  Node n;
  n.kind = FKind::kBoolConst;
  n.sort = Sort::kBool;
  n.value = value ? 1 : 0;
  return Make(std::move(n));
}

Formula Formula::Var(std::string name, Sort sort) {
  Node n;
  n.kind = FKind::kVar;
  n.sort = sort;
  n.name = std::move(name);
  return Make(std::move(n));
}

Formula Formula::Neg(Formula operand) {
  Node n;
  n.kind = FKind::kNeg;
  n.sort = Sort::kInt;
  n.args.push_back(std::move(operand));
  return Make(std::move(n));
}

Formula Formula::Not(Formula operand) {
  Node n;
  n.kind = FKind::kNot;
  n.sort = Sort::kBool;
  n.args.push_back(std::move(operand));
  return Make(std::move(n));
}

Formula Formula::Binary(FKind kind, Formula lhs, Formula rhs) {
  if (kind == FKind::kAnd) return And({std::move(lhs), std::move(rhs)});
  if (kind == FKind::kOr) return Or({std::move(lhs), std::move(rhs)});
  Node n;
  n.kind = kind;
  n.sort = IsArithmeticKind(kind) ? Sort::kInt : Sort::kBool;
  n.args.push_back(std::move(lhs));
  n.args.push_back(std::move(rhs));
  return Make(std::move(n));
}

Formula Formula::And(std::vector<Formula> conjuncts) {
  Node n;
  n.kind = FKind::kAnd;
  n.sort = Sort::kBool;
  for (Formula& c : conjuncts) {
    if (c.kind() == FKind::kAnd) {
      n.args.insert(n.args.end(), c.args().begin(), c.args().end());
    } else if (!(c.kind() == FKind::kBoolConst && c.node().value != 0)) {
      n.args.push_back(std::move(c));
    }
  }
  if (n.args.empty()) return Bool(true);
  if (n.args.size() == 1) return n.args.front();
  return Make(std::move(n));
}

Formula Formula::Or(std::vector<Formula> disjuncts) {
  Node n;
  n.kind = FKind::kOr;
  n.sort = Sort::kBool;
  for (Formula& d : disjuncts) {
    if (d.kind() == FKind::kOr) {
      n.args.insert(n.args.end(), d.args().begin(), d.args().end());
    } else if (!(d.kind() == FKind::kBoolConst && d.node().value == 0)) {
      n.args.push_back(std::move(d));
    }
  }
  if (n.args.empty()) return Bool(false);
  if (n.args.size() == 1) return n.args.front();
  return Make(std::move(n));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const Formula::Node& x = a.node();
  const Formula::Node& y = b.node();
  return x.kind == y.kind && x.sort == y.sort && x.value == y.value && x.name == y.name &&
         x.args == y.args;
}

std::string_view KindSpelling(FKind kind) {
  return kKinds[static_cast<std::size_t>(kind)].spelling;
}

bool IsArithmeticKind(FKind kind) {
  return kind == FKind::kAdd || kind == FKind::kSub || kind == FKind::kMul ||
         kind == FKind::kDiv || kind == FKind::kMod;
}

bool IsComparisonKind(FKind kind) {
  return kind == FKind::kLt || kind == FKind::kLe || kind == FKind::kGt ||
         kind == FKind::kGe || kind == FKind::kEq || kind == FKind::kNe;
}

std::string ToString(const Formula& formula) {
  std::ostringstream out;
  Print(formula, out);
  return out.str();
}

Formula ParseFormula(std::string_view text) {
  Reader reader(text);
  const SExpr root = reader.ReadAll();
  Builder builder(reader, SortInference().Run(root));
  Formula f = builder.Build(root);
  if (f.sort() != Sort::kBool) reader.Fail("formula is not boolean", 0);
  return f;
}

Formula FromExpr(const lang::Expr& expr, std::optional<OperatorOverride> replace) {
  using lang::Expr;
  switch (expr.kind) {
    case Expr::Kind::kIntConst:
      return Formula::Int(expr.int_value);
    case Expr::Kind::kBoolConst:
      return Formula::Bool(expr.int_value != 0);
    case Expr::Kind::kVar:
      return Formula::Var(expr.name, expr.type);
    case Expr::Kind::kUnary: {
      Formula operand = FromExpr(*expr.lhs, replace);
      return expr.unary_op == lang::UnaryOp::kNeg ? Formula::Neg(std::move(operand))
                                                  : Formula::Not(std::move(operand));
    }
    case Expr::Kind::kBinary: {
      const lang::BinaryOp op =
          replace && replace->node == expr.id ? replace->op : expr.binary_op;
      return Formula::Binary(KindOf(op), FromExpr(*expr.lhs, replace),
                             FromExpr(*expr.rhs, replace));
    }
  }
  return Formula::Bool(true);
}

Formula Substitute(const Formula& formula, std::string_view name,
                   const Formula& replacement) {
  const Formula::Node& n = formula.node();
  if (n.kind == FKind::kVar) return n.name == name ? replacement : formula;
  if (n.args.empty()) return formula;
  std::vector<Formula> args;
  args.reserve(n.args.size());
  bool changed = false;
  for (const Formula& arg : n.args) {
    args.push_back(Substitute(arg, name, replacement));
    changed = changed || !(args.back() == arg);
  }
  if (!changed) return formula;
  switch (n.kind) {
    case FKind::kNeg:
      return Formula::Neg(args[0]);
    case FKind::kNot:
      return Formula::Not(args[0]);
    case FKind::kAnd:
      return Formula::And(std::move(args));
    case FKind::kOr:
      return Formula::Or(std::move(args));
    default:
      return Formula::Binary(n.kind, args[0], args[1]);
  }
}

std::vector<std::pair<std::string, Sort>> FreeVariables(const Formula& formula) {
  std::vector<std::pair<std::string, Sort>> out;
  CollectVariables(formula, out);
  return out;
}

std::vector<Formula> Denominators(const Formula& formula) {
  std::vector<Formula> out;
  CollectDenominators(formula, out);
  return out;
}

}  // namespace infectest::constraints
