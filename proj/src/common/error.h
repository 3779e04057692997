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

#ifndef INFECTEST_COMMON_ERROR_H_
#define INFECTEST_COMMON_ERROR_H_

#include <stdexcept>
#include <string>

namespace infectest {

// Base of every exception the core library throws. The C API maps the
// concrete subclasses onto status codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Source text that does not parse or does not type check.
class SourceError : public Error {
 public:
  SourceError(std::string message, int line, int column)
      : Error(std::move(message)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class SyntaxError : public SourceError {
 public:
  using SourceError::SourceError;
};

class CheckError : public SourceError {
 public:
  enum class Kind { kType, kMissingReturn, kUndefinedVariable, kDuplicate,
                    kUnreachable };

  CheckError(Kind kind, std::string message, int line, int column)
      : SourceError(std::move(message), line, column), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// A caller handed the library something it cannot use: unknown function,
// wrong arity, out-of-range mutant id, malformed suite line, oversized domain.
class UsageError : public Error {
 public:
  using Error::Error;
};

// An input domain that is empty or too large to enumerate.
class DomainError : public UsageError {
 public:
  using UsageError::UsageError;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// An internal guarantee (I <= C <= M, kill-set invariance, oracle agreement)
// did not hold.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace infectest

#endif  // INFECTEST_COMMON_ERROR_H_
