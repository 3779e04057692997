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

#include "suite/suite.h"

#include <cctype>
#include <sstream>

#include "common/error.h"

namespace infectest::suite {

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool IsIdentifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return !std::isdigit(static_cast<unsigned char>(s.front()));
}

bool IsTestId(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
          c == '.')) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool TestSuite::Contains(std::string_view function,
                         const std::vector<interp::Value>& args) const {
  for (const TestCase& t : tests) {
    if (t.function == function && t.args == args) return true;
  }
  return false;
}

bool TestSuite::HasId(std::string_view id) const {
  for (const TestCase& t : tests) {
    if (t.id == id) return true;
  }
  return false;
}

TestCase MakeTest(const lang::CheckedProgram& program, std::string id,
                  std::string function, std::vector<interp::Value> args,
                  const interp::RunOptions& options) {
  TestCase test{std::move(id), std::move(function), std::move(args),
                interp::Value::Int(0)};
  test.expected = interp::Run(program, test.function, test.args, options);
  return test;
}

TestSuite ParseSuite(const lang::CheckedProgram& program, std::string_view text,
                     std::string name, const interp::RunOptions& options) {
  TestSuite suite;
  suite.name = std::move(name);
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    auto fail = [&](const std::string& why) -> UsageError {
      return UsageError(suite.name + ":" + std::to_string(line_no) + ": " + why);
    };
    const auto space = line.find_first_of(" \t");
    const auto open = line.find('(');
    if (space == std::string_view::npos || open == std::string_view::npos ||
        open < space || line.back() != ')') {
      throw fail("expected `id function(arg, ...)`");
    }
    const std::string_view id = line.substr(0, space);
    const std::string_view function = Trim(line.substr(space, open - space));
    if (!IsTestId(id)) throw fail("bad test id '" + std::string(id) + "'");
    if (!IsIdentifier(function)) {
      throw fail("bad function name '" + std::string(function) + "'");
    }
    if (suite.HasId(id)) throw fail("duplicate test id '" + std::string(id) + "'");
    std::vector<interp::Value> args;
    std::string_view arg_text = Trim(line.substr(open + 1, line.size() - open - 2));
    while (!arg_text.empty()) {
      const auto comma = arg_text.find(',');
      const std::string_view arg = Trim(arg_text.substr(0, comma));
      const auto value = interp::ParseValue(arg);
      if (!value) throw fail("bad argument '" + std::string(arg) + "'");
      args.push_back(*value);
      if (comma == std::string_view::npos) break;
      arg_text = arg_text.substr(comma + 1);
      if (Trim(arg_text).empty()) throw fail("trailing comma");
    }
    try {
      suite.tests.push_back(MakeTest(program, std::string(id), std::string(function),
                                     std::move(args), options));
    } catch (const UsageError& e) {
      throw fail(e.what());
    }
  }
  return suite;
}

std::string CallText(const TestCase& test) {
  std::string out = test.function + "(";
  for (std::size_t i = 0; i < test.args.size(); ++i) {
    if (i > 0) out += ", ";
    out += interp::ToString(test.args[i]);
  }
  return out + ")";
}

std::string FormatSuite(const TestSuite& suite) {
  std::ostringstream out;
  out << "# suite " << suite.name << ", " << suite.tests.size() << " tests\n";
  for (const TestCase& test : suite.tests) {
    out << test.id << ' ' << CallText(test) << "  # expect "
        << interp::ToString(test.expected) << '\n';
  }
  return out.str();
}

}  // namespace infectest::suite
