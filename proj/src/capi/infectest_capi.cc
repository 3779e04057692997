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

#include "infectest/infectest.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <new>
#include <string>
#include <utility>

#include "analysis/analysis.h"
#include "common/error.h"
#include "constraints/formula.h"
#include "driver/augment.h"
#include "driver/equivalence.h"
#include "driver/oracle.h"
#include "driver/pipeline.h"
#include "driver/reports.h"
#include "lang/parser.h"
#include "lang/printer.h"
#include "mutgen/mutants.h"
#include "preprocess/preprocess.h"
#include "solver/solver.h"
#include "suite/suite.h"

struct ift_program {
  infectest::lang::CheckedProgram program;
  infectest::mutgen::MutantTable table;
};

struct ift_suite {
  infectest::suite::TestSuite suite;
};

namespace {

using namespace infectest;

thread_local std::string last_error;

// Status of a failure; set by the entry points that know which input a
// UsageError refers to.
struct Failure {
  ift_status status;
  std::string message;
};

ift_status Fail(ift_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes. `usage` is the code
// reported for a plain UsageError.
template <typename Body>
ift_status Guard(Body&& body, ift_status usage = IFT_INVALID_ARGUMENT,
                 const char* source = nullptr) {
  try {
    last_error.clear();
    return body();
  } catch (const Failure& f) {
    return Fail(f.status, f.message);
  } catch (const SourceError& e) {
    const std::string where = std::string(source != nullptr ? source : "<input>") + ":" +
                              std::to_string(e.line()) + ":" + std::to_string(e.column());
    const bool syntax = dynamic_cast<const SyntaxError*>(&e) != nullptr;
    return Fail(syntax ? IFT_SYNTAX : IFT_CHECK,
                where + ": " + (syntax ? "syntax error: " : "error: ") + e.what());
  } catch (const DomainError& e) {
    return Fail(IFT_DOMAIN, e.what());
  } catch (const UsageError& e) {
    return Fail(usage, e.what());
  } catch (const IoError& e) {
    return Fail(IFT_IO, e.what());
  } catch (const InvariantViolation& e) {
    return Fail(IFT_INVARIANT, std::string("invariant violation: ") + e.what());
  } catch (const std::bad_alloc&) {
    return Fail(IFT_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(IFT_INTERNAL, e.what());
  }
}

char* Copy(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void Require(bool ok, const char* what) {
  if (!ok) throw Failure{IFT_INVALID_ARGUMENT, std::string(what) + " must not be null"};
}

ift_options Options(const ift_options* options) {
  ift_options out;
  ift_options_init(&out);
  return options != nullptr ? *options : out;
}

interp::RunOptions Run(const ift_options& o) { return interp::RunOptions{o.step_budget}; }

driver::EquivalenceOptions Equivalence(const ift_options& o) {
  driver::EquivalenceOptions e;
  e.domain_lo = o.domain_lo;
  e.domain_hi = o.domain_hi;
  e.path_bound = static_cast<std::size_t>(o.path_bound);
  e.budget = o.budget;
  e.run = Run(o);
  e.threads = o.threads;
  if (e.domain_lo > e.domain_hi) {
    throw DomainError("empty domain " + std::to_string(e.domain_lo) + ".." +
                      std::to_string(e.domain_hi));
  }
  if (e.budget == 0) throw Failure{IFT_INVALID_ARGUMENT, "solver budget must be positive"};
  if (e.path_bound == 0) throw Failure{IFT_INVALID_ARGUMENT, "path bound must be positive"};
  return e;
}

ift_status NewProgram(lang::Program parsed, ift_program** out) {
  lang::CheckedProgram checked = lang::Check(std::move(parsed));
  mutgen::MutantTable table = mutgen::GenerateMutants(checked);
  *out = new ift_program{std::move(checked), std::move(table)};
  return IFT_OK;
}

ift_status NewSuite(const ift_program* program, const std::string& text, const char* name,
                    const ift_options* options, ift_suite** out) {
  try {
    suite::TestSuite parsed = suite::ParseSuite(program->program, text,
                                                name != nullptr ? name : "suite",
                                                Run(Options(options)));
    *out = new ift_suite{std::move(parsed)};
  } catch (const UsageError& e) {
    throw Failure{IFT_SUITE, e.what()};
  }
  return IFT_OK;
}

preprocess::PreprocessReport Preprocessed(const ift_program* p, const ift_suite* s,
                                          const ift_options& o) {
  preprocess::PreprocessReport report = preprocess::Preprocess(
      p->program, p->table, s->suite, preprocess::PreprocessOptions{Run(o), o.threads});
  preprocess::VerifyReport(report);
  return report;
}

std::vector<driver::EquivalenceVerdict> Classify(const ift_program* p, const ift_suite* s,
                                                 ift_mode mode, const ift_options& o) {
  const driver::EquivalenceOptions eq = Equivalence(o);
  const preprocess::PreprocessReport report = Preprocessed(p, s, o);
  if (mode == IFT_MODE_LOCAL) {
    return driver::ClassifyEquivalence(p->program, p->table, s->suite,
                                       driver::LocalCandidates(report),
                                       constraints::InfectionMode::kLocal, eq);
  }
  const analysis::AnalysisReport live =
      analysis::RunAnalysis(p->program, p->table, s->suite, analysis::Filter::kInfection,
                            &report, analysis::AnalysisOptions{Run(o), o.threads});
  return driver::ClassifyEquivalence(p->program, p->table, s->suite,
                                     driver::OutermostCandidates(report, live),
                                     constraints::InfectionMode::kOutermost, eq);
}

}  // namespace

extern "C" {

void ift_options_init(ift_options* options) {
  if (options == nullptr) return;
  options->domain_lo = solver::kDefaultDomainLo;
  options->domain_hi = solver::kDefaultDomainHi;
  options->path_bound = 64;
  options->budget = solver::kDefaultBudget;
  options->step_budget = interp::kDefaultStepBudget;
  options->threads = 1;
}

const char* ift_status_string(ift_status status) {
  switch (status) {
    case IFT_OK:
      return "ok";
    case IFT_INVALID_ARGUMENT:
      return "invalid argument";
    case IFT_IO:
      return "i/o error";
    case IFT_SYNTAX:
      return "syntax error";
    case IFT_CHECK:
      return "check error";
    case IFT_SUITE:
      return "malformed suite";
    case IFT_DOMAIN:
      return "bad domain";
    case IFT_INVARIANT:
      return "invariant violation";
    case IFT_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* ift_last_error(void) { return last_error.c_str(); }

void ift_free_string(char* text) { std::free(text); }

ift_status ift_program_load(const char* path, ift_program** out) {
  const std::string name =
      path != nullptr ? std::filesystem::path(path).filename().string() : "";
  return Guard(
      [&] {
        Require(path != nullptr && out != nullptr, "path and out");
        *out = nullptr;
        return NewProgram(lang::Parse(driver::ReadFile(path), name), out);
      },
      IFT_INVALID_ARGUMENT, name.c_str());
}

ift_status ift_program_parse(const char* source, const char* name, ift_program** out) {
  const char* source_name = name != nullptr ? name : "<input>";
  return Guard(
      [&] {
        Require(source != nullptr && out != nullptr, "source and out");
        *out = nullptr;
        return NewProgram(lang::Parse(source, source_name), out);
      },
      IFT_INVALID_ARGUMENT, source_name);
}

void ift_program_free(ift_program* program) { delete program; }

ift_status ift_program_print(const ift_program* program, char** out) {
  return Guard([&] {
    Require(program != nullptr && out != nullptr, "program and out");
    *out = Copy(lang::Print(program->program.program()));
    return IFT_OK;
  });
}

ift_status ift_program_mutant_count(const ift_program* program, size_t* out) {
  return Guard([&] {
    Require(program != nullptr && out != nullptr, "program and out");
    *out = program->table.size();
    return IFT_OK;
  });
}

ift_status ift_program_mutants_json(const ift_program* program, char** out) {
  return Guard([&] {
    Require(program != nullptr && out != nullptr, "program and out");
    *out = Copy(driver::MutantsJson(program->table));
    return IFT_OK;
  });
}

ift_status ift_program_run(const ift_program* program, const char* function,
                           const char* const* args, size_t arg_count,
                           const ift_options* options, char** outcome) {
  return Guard([&] {
    Require(program != nullptr && function != nullptr && outcome != nullptr &&
                (args != nullptr || arg_count == 0),
            "program, function, args, and outcome");
    std::vector<interp::Value> values;
    for (size_t i = 0; i < arg_count; ++i) {
      Require(args[i] != nullptr, "argument");
      const std::optional<interp::Value> v = interp::ParseValue(args[i]);
      if (!v) throw Failure{IFT_INVALID_ARGUMENT, std::string("bad argument '") + args[i] + "'"};
      values.push_back(*v);
    }
    *outcome = Copy(interp::ToString(
        interp::Run(program->program, function, values, Run(Options(options)))));
    return IFT_OK;
  });
}

ift_status ift_suite_load(const ift_program* program, const char* path, const char* name,
                          const ift_options* options, ift_suite** out) {
  return Guard([&] {
    Require(program != nullptr && path != nullptr && out != nullptr, "program, path, and out");
    *out = nullptr;
    return NewSuite(program, driver::ReadFile(path), name, options, out);
  });
}

ift_status ift_suite_parse(const ift_program* program, const char* text, const char* name,
                           const ift_options* options, ift_suite** out) {
  return Guard([&] {
    Require(program != nullptr && text != nullptr && out != nullptr, "program, text, and out");
    *out = nullptr;
    return NewSuite(program, text, name, options, out);
  });
}

void ift_suite_free(ift_suite* suite) { delete suite; }

size_t ift_suite_size(const ift_suite* suite) {
  return suite != nullptr ? suite->suite.tests.size() : 0;
}

ift_status ift_suite_text(const ift_suite* suite, char** out) {
  return Guard([&] {
    Require(suite != nullptr && out != nullptr, "suite and out");
    *out = Copy(suite::FormatSuite(suite->suite));
    return IFT_OK;
  });
}

ift_status ift_preprocess(const ift_program* program, const ift_suite* suite,
                          const ift_options* options, char** json) {
  return Guard([&] {
    Require(program != nullptr && suite != nullptr && json != nullptr,
            "program, suite, and json");
    const preprocess::PreprocessReport report = Preprocessed(program, suite, Options(options));
    *json = Copy(driver::PreprocessJson(program->table, suite->suite, report));
    return IFT_OK;
  });
}

ift_status ift_analyze(const ift_program* program, const ift_suite* suite, ift_filter filter,
                       const ift_options* options, char** json) {
  return Guard([&] {
    Require(program != nullptr && suite != nullptr && json != nullptr,
            "program, suite, and json");
    if (filter < IFT_FILTER_NONE || filter > IFT_FILTER_INFECTION) {
      throw Failure{IFT_INVALID_ARGUMENT, "unknown filter"};
    }
    const ift_options o = Options(options);
    const preprocess::PreprocessReport report = Preprocessed(program, suite, o);
    const analysis::AnalysisReport result = analysis::RunAnalysis(
        program->program, program->table, suite->suite, static_cast<analysis::Filter>(filter),
        &report, analysis::AnalysisOptions{Run(o), o.threads});
    *json = Copy(driver::AnalysisJson(program->table, suite->suite, result));
    return IFT_OK;
  });
}

ift_status ift_compare_filters(const ift_program* program, const ift_suite* suite,
                               const ift_options* options, char** json) {
  return Guard([&] {
    Require(program != nullptr && suite != nullptr && json != nullptr,
            "program, suite, and json");
    const ift_options o = Options(options);
    const preprocess::PreprocessReport report = Preprocessed(program, suite, o);
    const analysis::SavingsReport savings =
        analysis::CompareFilters(program->program, program->table, suite->suite, report,
                                 analysis::AnalysisOptions{Run(o), o.threads});
    *json = Copy(driver::SavingsJson(suite->suite, savings));
    return IFT_OK;
  });
}

ift_status ift_equivalence(const ift_program* program, const ift_suite* suite, ift_mode mode,
                           int oracle, const ift_options* options, char** json) {
  return Guard([&] {
    Require(program != nullptr && suite != nullptr && json != nullptr,
            "program, suite, and json");
    *json = nullptr;
    const ift_options o = Options(options);
    const driver::EquivalenceOptions eq = Equivalence(o);
    const std::vector<driver::EquivalenceVerdict> verdicts = Classify(program, suite, mode, o);
    std::vector<driver::OracleLabel> labels;
    if (oracle != 0) {
      labels = driver::BruteForceOracle(
          program->program, program->table,
          driver::OracleOptions{eq.domain_lo, eq.domain_hi, eq.run, eq.threads});
    }
    *json = Copy(driver::EquivalenceJson(program->table, verdicts, eq, labels));
    for (const driver::EquivalenceVerdict& v : verdicts) {
      if (!labels.empty() && v.status == driver::Verdict::kEquivalentOverDomain &&
          !labels[v.mutant].equivalent) {
        return Fail(IFT_INVARIANT, "invariant violation: the oracle distinguishes mutant " +
                                       std::to_string(v.mutant) +
                                       ", classified equivalent over the domain");
      }
    }
    return IFT_OK;
  });
}

ift_status ift_augment(const ift_program* program, const ift_suite* suite, ift_mode mode,
                       const char* name, const ift_options* options, ift_suite** out) {
  return Guard([&] {
    Require(program != nullptr && suite != nullptr && out != nullptr,
            "program, suite, and out");
    *out = nullptr;
    const ift_options o = Options(options);
    const std::vector<driver::EquivalenceVerdict> verdicts = Classify(program, suite, mode, o);
    suite::TestSuite grown =
        driver::AugmentSuite(program->program, program->table, suite->suite, verdicts,
                             name != nullptr ? name : suite->suite.name + "+", Run(o));
    *out = new ift_suite{std::move(grown)};
    return IFT_OK;
  });
}

ift_status ift_solve(const char* formula, const ift_options* options, char** json) {
  return Guard([&] {
    Require(formula != nullptr && json != nullptr, "formula and json");
    const ift_options o = Options(options);
    const driver::EquivalenceOptions eq = Equivalence(o);
    const constraints::Formula f = constraints::ParseFormula(formula);
    std::vector<lang::Param> params;
    for (const auto& [var, sort] : constraints::FreeVariables(f)) {
      params.push_back(lang::Param{var, sort, {}});
    }
    const solver::Domain domain = solver::UniformDomain(params, eq.domain_lo, eq.domain_hi);
    *json = Copy(driver::SolveJson(f, domain, solver::Solve(f, domain, eq.budget)));
    return IFT_OK;
  }, IFT_INVALID_ARGUMENT, "formula");
}

ift_status ift_pipeline(const char* program_path, const char* suite_path, const char* out_dir,
                        int outermost, int oracle, const ift_options* options,
                        char** summary) {
  const std::string name =
      program_path != nullptr ? std::filesystem::path(program_path).filename().string() : "";
  if (summary != nullptr) *summary = nullptr;
  const ift_status status = Guard(
      [&] {
        Require(program_path != nullptr && suite_path != nullptr && out_dir != nullptr,
                "program_path, suite_path, and out_dir");
        driver::PipelineConfig config;
        config.program_path = program_path;
        config.suite_path = suite_path;
        config.out_dir = out_dir;
        config.equivalence = Equivalence(Options(options));
        config.outermost = outermost != 0;
        config.oracle = oracle != 0;
        // A summary left by an earlier run must not be mistaken for this one's.
        std::error_code ignored;
        std::filesystem::remove(std::filesystem::path(out_dir) / "summary.json", ignored);
        try {
          driver::RunPipeline(config);
        } catch (const UsageError& e) {
          // Everything the pipeline reads past the program is the suite.
          if (dynamic_cast<const DomainError*>(&e) != nullptr) throw;
          throw Failure{IFT_SUITE, e.what()};
        }
        return IFT_OK;
      },
      IFT_INVALID_ARGUMENT, name.c_str());
  if ((status == IFT_OK || status == IFT_INVARIANT) && summary != nullptr) {
    const std::string path = (std::filesystem::path(out_dir) / "summary.json").string();
    if (std::filesystem::exists(path)) {
      try {
        *summary = Copy(driver::ReadFile(path));
      } catch (const std::exception&) {
        // The status already describes the run.
      }
    }
  }
  return status;
}

}  // extern "C"
