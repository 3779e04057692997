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

#include "lang/parser.h"

#include <cctype>
#include <charconv>
#include <utility>
#include <vector>

#include "common/error.h"

namespace infectest::lang {

namespace {

enum class Tok {
  kIdent, kInt, kEnd,
  // keywords
  kFn, kIf, kElse, kWhile, kReturn, kTrue, kFalse, kIntType, kBoolType,
  // punctuation
  kLParen, kRParen, kLBrace, kRBrace, kComma, kColon, kSemi, kArrow, kAssign,
  kBang,
  // binary operators; spelling carried in Token::text
  kOp,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  SourceLoc loc;
};

class Lexer {
 public:
  explicit Lexer(std::string_view source) : source_(source) {}

  std::vector<Token> Run() {
    std::vector<Token> tokens;
    for (;;) {
      SkipSpaceAndComments();
      Token tok;
      tok.loc = {line_, column_};
      if (pos_ >= source_.size()) {
        tok.kind = Tok::kEnd;
        tokens.push_back(std::move(tok));
        return tokens;
      }
      const char c = source_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        tok.text = TakeWhile([](char ch) {
          return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
        });
        tok.kind = KeywordOrIdent(tok.text);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        tok.text = TakeWhile(
            [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; });
        tok.kind = Tok::kInt;
      } else {
        LexPunct(tok);
      }
      tokens.push_back(std::move(tok));
    }
  }

 private:
  static Tok KeywordOrIdent(const std::string& word) {
    if (word == "fn") return Tok::kFn;
    if (word == "if") return Tok::kIf;
    if (word == "else") return Tok::kElse;
    if (word == "while") return Tok::kWhile;
    if (word == "return") return Tok::kReturn;
    if (word == "true") return Tok::kTrue;
    if (word == "false") return Tok::kFalse;
    if (word == "int") return Tok::kIntType;
    if (word == "bool") return Tok::kBoolType;
    return Tok::kIdent;
  }

  void LexPunct(Token& tok) {
    const char c = source_[pos_];
    const char n = pos_ + 1 < source_.size() ? source_[pos_ + 1] : '\0';
    auto take = [&](Tok kind, int width) {
      tok.kind = kind;
      tok.text = std::string(source_.substr(pos_, width));
      Advance(width);
    };
    switch (c) {
      case '(': return take(Tok::kLParen, 1);
      case ')': return take(Tok::kRParen, 1);
      case '{': return take(Tok::kLBrace, 1);
      case '}': return take(Tok::kRBrace, 1);
      case ',': return take(Tok::kComma, 1);
      case ':': return take(Tok::kColon, 1);
      case ';': return take(Tok::kSemi, 1);
      case '+': case '*': case '/': case '%':
        return take(Tok::kOp, 1);
      case '-':
        return n == '>' ? take(Tok::kArrow, 2) : take(Tok::kOp, 1);
      case '<': case '>':
        return n == '=' ? take(Tok::kOp, 2) : take(Tok::kOp, 1);
      case '=':
        return n == '=' ? take(Tok::kOp, 2) : take(Tok::kAssign, 1);
      case '!':
        return n == '=' ? take(Tok::kOp, 2) : take(Tok::kBang, 1);
      case '&':
        if (n == '&') return take(Tok::kOp, 2);
        break;
      case '|':
        if (n == '|') return take(Tok::kOp, 2);
        break;
      default:
        break;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", line_,
                      column_);
  }

  template <typename Pred>
  std::string TakeWhile(Pred pred) {
    const std::size_t start = pos_;
    while (pos_ < source_.size() && pred(source_[pos_])) Advance(1);
    return std::string(source_.substr(start, pos_ - start));
  }

  void SkipSpaceAndComments() {
    while (pos_ < source_.size()) {
      const char c = source_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        Advance(1);
      } else if (c == '/' && pos_ + 1 < source_.size() && source_[pos_ + 1] == '/') {
        while (pos_ < source_.size() && source_[pos_] != '\n') Advance(1);
      } else {
        return;
      }
    }
  }

  void Advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos_ < source_.size(); ++i) {
      if (source_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  std::string_view source_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

// Binding power of the binary operators, loosest first.
int Precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::kOr:
      return 1;
    case BinaryOp::kAnd:
      return 2;
    case BinaryOp::kEq:
    case BinaryOp::kNe:
      return 3;
    case BinaryOp::kLt:
    case BinaryOp::kLe:
    case BinaryOp::kGt:
    case BinaryOp::kGe:
      return 4;
    case BinaryOp::kAdd:
    case BinaryOp::kSub:
      return 5;
    case BinaryOp::kMul:
    case BinaryOp::kDiv:
    case BinaryOp::kMod:
      return 6;
  }
  return 0;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Program ParseProgram(std::string source_name) {
    Program program;
    program.source_name = std::move(source_name);
    while (Peek().kind != Tok::kEnd) program.functions.push_back(ParseFunction());
    return program;
  }

 private:
  const Token& Peek() const { return tokens_[pos_]; }

  const Token& Next() {
    const Token& tok = tokens_[pos_];
    if (tok.kind != Tok::kEnd) ++pos_;
    return tok;
  }

  bool Accept(Tok kind) {
    if (Peek().kind != kind) return false;
    Next();
    return true;
  }

  const Token& Expect(Tok kind, std::string_view what) {
    if (Peek().kind != kind) Fail(std::string("expected ") + std::string(what));
    return Next();
  }

  [[noreturn]] void Fail(const std::string& message) const {
    const Token& tok = Peek();
    std::string found = tok.kind == Tok::kEnd ? "end of input" : "'" + tok.text + "'";
    throw SyntaxError(message + ", found " + found, tok.loc.line, tok.loc.column);
  }

  Type ParseType() {
    if (Accept(Tok::kIntType)) return Type::kInt;
    if (Accept(Tok::kBoolType)) return Type::kBool;
    Fail("expected type 'int' or 'bool'");
  }

  FunctionDef ParseFunction() {
    FunctionDef fn;
    fn.loc = Expect(Tok::kFn, "'fn'").loc;
    fn.name = Expect(Tok::kIdent, "function name").text;
    Expect(Tok::kLParen, "'('");
    if (Peek().kind != Tok::kRParen) {
      do {
        Param param;
        const Token& name = Expect(Tok::kIdent, "parameter name");
        param.name = name.text;
        param.loc = name.loc;
        Expect(Tok::kColon, "':'");
        param.type = ParseType();
        fn.params.push_back(std::move(param));
      } while (Accept(Tok::kComma));
    }
    Expect(Tok::kRParen, "')'");
    Expect(Tok::kArrow, "'->'");
    fn.return_type = ParseType();
    fn.body = ParseBlock();
    return fn;
  }

  Block ParseBlock() {
    Expect(Tok::kLBrace, "'{'");
    Block block;
    while (Peek().kind != Tok::kRBrace) {
      if (Peek().kind == Tok::kEnd) Fail("expected '}'");
      block.push_back(ParseStmt());
    }
    Next();
    return block;
  }

  Stmt ParseStmt() {
    Stmt stmt;
    stmt.loc = Peek().loc;
    switch (Peek().kind) {
      case Tok::kIf:
        return ParseIf();
      case Tok::kWhile:
        Next();
        stmt.kind = Stmt::Kind::kWhile;
        stmt.expr = ParseCondition();
        stmt.body = ParseBlock();
        return stmt;
      case Tok::kReturn:
        Next();
        stmt.kind = Stmt::Kind::kReturn;
        stmt.expr = ParseExpr();
        Expect(Tok::kSemi, "';'");
        return stmt;
      case Tok::kIdent:
        stmt.kind = Stmt::Kind::kAssign;
        stmt.target = Next().text;
        Expect(Tok::kAssign, "'='");
        stmt.expr = ParseExpr();
        Expect(Tok::kSemi, "';'");
        return stmt;
      default:
        Fail("expected statement");
    }
  }

  Stmt ParseIf() {
    Stmt stmt;
    stmt.kind = Stmt::Kind::kIf;
    stmt.loc = Next().loc;
    stmt.expr = ParseCondition();
    stmt.body = ParseBlock();
    if (Accept(Tok::kElse)) {
      if (Peek().kind == Tok::kIf) {
        stmt.else_body.push_back(ParseIf());
      } else {
        stmt.else_body = ParseBlock();
      }
    }
    return stmt;
  }

  Expr ParseCondition() {
    Expect(Tok::kLParen, "'('");
    Expr cond = ParseExpr();
    Expect(Tok::kRParen, "')'");
    return cond;
  }

  Expr ParseExpr(int min_precedence = 1) {
    Expr lhs = ParseUnary();
    for (;;) {
      const Token& tok = Peek();
      if (tok.kind != Tok::kOp) return lhs;
      const BinaryOp op = *BinaryOpFromSpelling(tok.text);
      const int prec = Precedence(op);
      if (prec < min_precedence) return lhs;
      const SourceLoc loc = Next().loc;
      Expr rhs = ParseExpr(prec + 1);
      lhs = Expr::Binary(op, std::move(lhs), std::move(rhs), loc);
    }
  }

  Expr ParseUnary() {
    const Token& tok = Peek();
    if (tok.kind == Tok::kBang) {
      const SourceLoc loc = Next().loc;
      return Expr::Unary(UnaryOp::kNot, ParseUnary(), loc);
    }
    if (tok.kind == Tok::kOp && tok.text == "-") {
      const SourceLoc loc = Next().loc;
      return Expr::Unary(UnaryOp::kNeg, ParseUnary(), loc);
    }
    return ParsePrimary();
  }

  Expr ParsePrimary() {
    const Token& tok = Peek();
    switch (tok.kind) {
      case Tok::kInt: {
        std::int64_t value = 0;
        const auto [end, ec] =
            std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
        if (ec != std::errc() || end != tok.text.data() + tok.text.size()) {
          Fail("integer literal out of range");
        }
        return Expr::IntConst(value, Next().loc);
      }
      case Tok::kTrue:
        return Expr::BoolConst(true, Next().loc);
      case Tok::kFalse:
        return Expr::BoolConst(false, Next().loc);
      case Tok::kIdent: {
        const Token& name = Next();
        return Expr::Var(name.text, name.loc);
      }
      case Tok::kLParen: {
        Next();
        Expr inner = ParseExpr();
        Expect(Tok::kRParen, "')'");
        return inner;
      }
      default:
        Fail("expected expression");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Program Parse(std::string_view source, std::string source_name) {
  Parser parser(Lexer(source).Run());
  Program program = parser.ParseProgram(std::move(source_name));
  NumberNodes(program);
  return program;
}

}  // namespace infectest::lang
