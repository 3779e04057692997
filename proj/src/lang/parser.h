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

#ifndef INFECTEST_LANG_PARSER_H_
#define INFECTEST_LANG_PARSER_H_

#include <string>
#include <string_view>

#include "lang/ast.h"

namespace infectest::lang {

// Parses MiniLang source into an unchecked Program with fresh pre-order
// NodeIds. Throws SyntaxError carrying the offending line and column.
Program Parse(std::string_view source, std::string source_name = "<input>");

}  // namespace infectest::lang

#endif  // INFECTEST_LANG_PARSER_H_
