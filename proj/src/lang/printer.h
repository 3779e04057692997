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

#ifndef INFECTEST_LANG_PRINTER_H_
#define INFECTEST_LANG_PRINTER_H_

#include <string>

#include "lang/ast.h"

namespace infectest::lang {

// Canonical source rendering with minimal parentheses. Parsing the result
// yields a program of the same shape.
std::string Print(const Program& program);
std::string Print(const Expr& expr);

}  // namespace infectest::lang

#endif  // INFECTEST_LANG_PRINTER_H_
