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

// infectest: mutation analysis with state-infection filtering, equivalence
// proving over a bounded domain, and suite augmentation.
//
// Exit codes: 0 success, 2 bad input, 3 invariant violation, 1 internal error.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "infectest/infectest.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;

int ExitCode(ift_status status) {
  switch (status) {
    case IFT_OK:
      return kExitOk;
    case IFT_INVARIANT:
      return kExitInvariant;
    case IFT_INTERNAL:
      return kExitInternal;
    default:
      return kExitInput;
  }
}

// Reports a failed call and converts it to an exit code.
int Report(ift_status status) {
  if (status != IFT_OK) {
    std::cerr << "infectest: " << ift_last_error() << "\n";
  }
  return ExitCode(status);
}

class Text {
 public:
  Text() = default;
  Text(const Text&) = delete;
  Text& operator=(const Text&) = delete;
  ~Text() { ift_free_string(data_); }
  char** out() { return &data_; }
  std::string str() const { return data_ != nullptr ? data_ : ""; }

 private:
  char* data_ = nullptr;
};

struct Program {
  ift_program* handle = nullptr;
  ~Program() { ift_program_free(handle); }
};

struct Suite {
  ift_suite* handle = nullptr;
  ~Suite() { ift_suite_free(handle); }
};

struct Flags {
  std::string program;
  std::string suite;
  std::string filter;
  std::string domain;
  std::string mode;
  std::uint64_t path_bound = 64;
  std::optional<std::uint64_t> budget;
  std::string out;
  bool oracle = false;
  int threads = 1;
  std::string formula;
};

// "LO..HI", either bound may be negative.
bool ParseDomain(const std::string& text, std::int64_t& lo, std::int64_t& hi) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) return false;
  try {
    std::size_t used = 0;
    const std::string l = text.substr(0, dots);
    const std::string h = text.substr(dots + 2);
    lo = std::stoll(l, &used);
    if (used != l.size()) return false;
    hi = std::stoll(h, &used);
    return used == h.size();
  } catch (const std::exception&) {
    return false;
  }
}

// Writes `text` to DIR/name, or to stdout when no directory was given.
int Emit(const Flags& flags, const std::string& name, const std::string& text) {
  if (flags.out.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::error_code ec;
  std::filesystem::create_directories(flags.out, ec);
  const std::filesystem::path path = std::filesystem::path(flags.out) / name;
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (ec || !file || !(file << text) || !file.flush()) {
    std::cerr << "infectest: cannot write '" << path.string() << "'\n";
    return kExitInput;
  }
  std::cerr << "wrote " << path.string() << "\n";
  return kExitOk;
}

class Command {
 public:
  explicit Command(const Flags& flags) : flags_(flags) { ift_options_init(&options_); }

  // Validates the shared numeric flags into the options block.
  int Configure() {
    if (!flags_.domain.empty() &&
        !ParseDomain(flags_.domain, options_.domain_lo, options_.domain_hi)) {
      std::cerr << "infectest: --domain expects LO..HI, got '" << flags_.domain << "'\n";
      return kExitInput;
    }
    if (flags_.budget) options_.budget = *flags_.budget;
    options_.path_bound = flags_.path_bound;
    options_.threads = flags_.threads;
    return kExitOk;
  }

  int LoadProgram() { return Report(ift_program_load(flags_.program.c_str(), &program_.handle)); }

  int LoadSuite() {
    const std::string name = std::filesystem::path(flags_.suite).stem().string();
    return Report(ift_suite_load(program_.handle, flags_.suite.c_str(), name.c_str(),
                                 &options_, &suite_.handle));
  }

  int Parse() {
    Text text;
    if (int rc = Report(ift_program_print(program_.handle, text.out()))) return rc;
    std::cout << text.str();
    return kExitOk;
  }

  int Mutants() {
    Text json;
    if (int rc = Report(ift_program_mutants_json(program_.handle, json.out()))) return rc;
    return Emit(flags_, "mutants.json", json.str());
  }

  int Preprocess() {
    Text json;
    if (int rc = Report(ift_preprocess(program_.handle, suite_.handle, &options_, json.out()))) {
      return rc;
    }
    return Emit(flags_, "preprocess.json", json.str());
  }

  int Analyze() {
    if (!flags_.filter.empty()) return AnalyzeOne(FilterOf(flags_.filter), flags_.filter);
    for (const char* name : {"none", "coverage", "infection"}) {
      if (int rc = AnalyzeOne(FilterOf(name), name)) return rc;
    }
    Text json;
    if (int rc = Report(
            ift_compare_filters(program_.handle, suite_.handle, &options_, json.out()))) {
      return rc;
    }
    return Emit(flags_, "savings.json", json.str());
  }

  int Equiv() {
    const ift_mode mode = Mode(IFT_MODE_LOCAL);
    Text json;
    const ift_status status = ift_equivalence(program_.handle, suite_.handle, mode,
                                              flags_.oracle ? 1 : 0, &options_, json.out());
    if (!json.str().empty()) {
      const int rc = Emit(flags_,
                          mode == IFT_MODE_LOCAL ? "equivalence.json"
                                                 : "equivalence-outermost.json",
                          json.str());
      if (status == IFT_OK && rc != kExitOk) return rc;
    }
    return Report(status);
  }

  int Augment() {
    const ift_mode mode = Mode(IFT_MODE_LOCAL);
    Suite grown;
    const char* name = mode == IFT_MODE_LOCAL ? "T2" : "T3";
    if (int rc = Report(ift_augment(program_.handle, suite_.handle, mode, name, &options_,
                                    &grown.handle))) {
      return rc;
    }
    Text text;
    if (int rc = Report(ift_suite_text(grown.handle, text.out()))) return rc;
    return Emit(flags_, mode == IFT_MODE_LOCAL ? "t2.tests" : "t3.tests", text.str());
  }

  int Pipeline() {
    const std::string out = flags_.out.empty() ? "infectest-out" : flags_.out;
    const bool outermost = flags_.mode != "local";
    const auto start = std::chrono::steady_clock::now();
    Text summary;
    const ift_status status =
        ift_pipeline(flags_.program.c_str(), flags_.suite.c_str(), out.c_str(),
                     outermost ? 1 : 0, flags_.oracle ? 1 : 0, &options_, summary.out());
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    if (!summary.str().empty()) std::cout << summary.str();
    if (status == IFT_OK) {
      std::cout << "reports written to " << out << " in " << elapsed.count() << " s\n";
    }
    return Report(status);
  }

  int Solve() {
    Text json;
    if (int rc = Report(ift_solve(flags_.formula.c_str(), &options_, json.out()))) return rc;
    std::cout << json.str();
    return kExitOk;
  }

 private:
  static ift_filter FilterOf(const std::string& name) {
    if (name == "coverage") return IFT_FILTER_COVERAGE;
    if (name == "infection") return IFT_FILTER_INFECTION;
    return IFT_FILTER_NONE;
  }

  ift_mode Mode(ift_mode fallback) const {
    if (flags_.mode == "local") return IFT_MODE_LOCAL;
    if (flags_.mode == "outermost") return IFT_MODE_OUTERMOST;
    return fallback;
  }

  int AnalyzeOne(ift_filter filter, const std::string& name) {
    Text json;
    if (int rc = Report(
            ift_analyze(program_.handle, suite_.handle, filter, &options_, json.out()))) {
      return rc;
    }
    return Emit(flags_, "analysis-" + name + ".json", json.str());
  }

  const Flags& flags_;
  ift_options options_;
  Program program_;
  Suite suite_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mutation analysis with state-infection filtering and equivalence proving"};
  app.require_subcommand(1);
  Flags flags;

  auto program = [&](CLI::App* sub) {
    sub->add_option("--program", flags.program, "MiniLang source (.ml0)")->required();
  };
  auto suite = [&](CLI::App* sub) {
    sub->add_option("--suite", flags.suite, "test suite (.tests)")->required();
  };
  auto threads = [&](CLI::App* sub) {
    sub->add_option("--threads", flags.threads, "worker threads")->check(CLI::Range(1, 256));
  };
  auto out = [&](CLI::App* sub) {
    sub->add_option("--out", flags.out, "directory for reports (default: stdout)");
  };
  auto solving = [&](CLI::App* sub) {
    sub->add_option("--domain", flags.domain, "input range of int parameters, LO..HI")
        ->default_str("-8..16");
    sub->add_option("--budget", flags.budget, "assignments the solver may check per formula")
        ->check(CLI::PositiveNumber);
  };
  auto equivalence = [&](CLI::App* sub) {
    solving(sub);
    sub->add_option("--mode", flags.mode, "infection scope")
        ->check(CLI::IsMember({"local", "outermost"}));
    sub->add_option("--path-bound", flags.path_bound, "paths per mutant before giving up")
        ->default_val(64)
        ->check(CLI::PositiveNumber);
  };

  CLI::App* parse = app.add_subcommand("parse", "check a program and print it canonically");
  program(parse);
  CLI::App* mutants = app.add_subcommand("mutants", "list the operator-replacement mutants");
  program(mutants);
  out(mutants);
  CLI::App* preprocess =
      app.add_subcommand("preprocess", "covered and infected mutants from one traced run");
  program(preprocess);
  suite(preprocess);
  out(preprocess);
  threads(preprocess);
  CLI::App* analyze = app.add_subcommand("analyze", "strong mutation analysis");
  program(analyze);
  suite(analyze);
  out(analyze);
  threads(analyze);
  analyze->add_option("--filter", flags.filter, "tests run per mutant (default: all three)")
      ->check(CLI::IsMember({"none", "coverage", "infection"}));
  CLI::App* equiv = app.add_subcommand("equiv", "classify candidate mutants");
  program(equiv);
  suite(equiv);
  out(equiv);
  threads(equiv);
  equivalence(equiv);
  equiv->add_flag("--oracle", flags.oracle, "cross-check by exhaustive execution");
  CLI::App* augment = app.add_subcommand("augment", "add tests built from solver models");
  program(augment);
  suite(augment);
  out(augment);
  threads(augment);
  equivalence(augment);
  CLI::App* pipeline = app.add_subcommand("pipeline", "run every stage and write all reports");
  program(pipeline);
  suite(pipeline);
  threads(pipeline);
  equivalence(pipeline);
  pipeline->add_option("--out", flags.out, "report directory")->default_str("infectest-out");
  pipeline->add_flag("--oracle", flags.oracle, "cross-check by exhaustive execution");
  CLI::App* solve = app.add_subcommand("solve", "solve a prefix-form formula");
  solve->add_option("--formula", flags.formula, "formula text")->required();
  solving(solve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  Command command(flags);
  if (int rc = command.Configure()) return rc;
  if (solve->parsed()) return command.Solve();
  if (pipeline->parsed()) return command.Pipeline();
  if (int rc = command.LoadProgram()) return rc;
  if (parse->parsed()) return command.Parse();
  if (mutants->parsed()) return command.Mutants();
  if (int rc = command.LoadSuite()) return rc;
  if (preprocess->parsed()) return command.Preprocess();
  if (analyze->parsed()) return command.Analyze();
  if (equiv->parsed()) return command.Equiv();
  return command.Augment();
}
