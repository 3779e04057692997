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

// Acceptance run: one PASS or FAIL line per criterion, nonzero exit status if
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "analysis/analysis.h"
#include "checks.h"
#include "constraints/formula.h"
#include "driver/augment.h"
#include "driver/equivalence.h"
#include "driver/oracle.h"
#include "fixtures.h"
#include "formula_oracle.h"
#include "preprocess/preprocess.h"
#include "random_program.h"
#include "solver/solver.h"

namespace infectest {
namespace {

using constraints::InfectionMode;
using driver::Verdict;

constexpr int kRandomPrograms = 500;
constexpr std::uint64_t kRandomSeed = 20260101;

// Values derived by running the tools on the triangle fixture and its
// handwritten suite, then cross-checked against exhaustive execution.
constexpr std::size_t kGoldenLocalEquivalent = 3;
constexpr std::size_t kGoldenTests[] = {14, 25, 35};
constexpr std::size_t kGoldenKilled[] = {113, 121, 131};

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Corpus {
  lang::CheckedProgram program;
  mutgen::MutantTable table;
  suite::TestSuite suite;
};

std::vector<Corpus> BuildCorpus() {
  std::vector<Corpus> out;
  {
    lang::CheckedProgram p = testing::Triangle();
    mutgen::MutantTable t = mutgen::GenerateMutants(p);
    suite::TestSuite s = testing::LoadSuite(p, "t1.tests", "T1");
    out.push_back({std::move(p), std::move(t), std::move(s)});
  }
  std::mt19937_64 rng(kRandomSeed);
  for (int i = 0; i < kRandomPrograms; ++i) {
    const testing::RandomCase c = testing::GenerateCase(rng);
    lang::CheckedProgram p = testing::Compile(c.source);
    mutgen::MutantTable t = mutgen::GenerateMutants(p);
    suite::TestSuite s = suite::ParseSuite(p, c.suite, "random");
    out.push_back({std::move(p), std::move(t), std::move(s)});
  }
  return out;
}

Outcome FromCheck(const testing::CheckResult& r, const std::string& what) {
  Outcome o;
  o.pass = r.ok();
  std::ostringstream detail;
  detail << r.checked << " " << what << ", " << r.failures.size() << " failures";
  if (!r.ok()) detail << "; first: " << r.failures.front();
  o.detail = detail.str();
  return o;
}

Outcome SubsetChain(const std::vector<Corpus>& corpus) {
  testing::CheckResult all;
  for (const Corpus& c : corpus) all.Merge(testing::CheckSubsetChain(c.program, c.table, c.suite));
  Outcome o = FromCheck(all, "reports and per-test sets checked");
  o.detail = std::to_string(corpus.size()) + " programs, " + o.detail;
  return o;
}

Outcome KillInvariance(const std::vector<Corpus>& corpus) {
  testing::CheckResult all;
  for (const Corpus& c : corpus) {
    all.Merge(testing::CheckKillInvariance(c.program, c.table, c.suite));
  }
  Outcome o = FromCheck(all, "filter runs and kills checked");
  o.detail = std::to_string(corpus.size()) + " programs, " + o.detail;
  return o;
}

Outcome Savings() {
  const lang::CheckedProgram p = testing::Triangle();
  const mutgen::MutantTable t = mutgen::GenerateMutants(p);
  const suite::TestSuite s = testing::LoadSuite(p, "t1.tests", "T1");
  const preprocess::PreprocessReport r = preprocess::Preprocess(p, t, s);
  const analysis::SavingsReport sv = analysis::CompareFilters(p, t, s, r);
  const std::size_t none = sv.at(analysis::Filter::kNone).executed_pairs;
  const std::size_t coverage = sv.at(analysis::Filter::kCoverage).executed_pairs;
  const std::size_t infection = sv.at(analysis::Filter::kInfection).executed_pairs;
  Outcome o;
  o.pass = !preprocess::PotentiallyEquivalent(r).empty() && infection < coverage &&
           coverage <= none;
  o.detail = "pairs none/coverage/infection = " + std::to_string(none) + "/" +
             std::to_string(coverage) + "/" + std::to_string(infection) + ", |C-I| = " +
             std::to_string(preprocess::PotentiallyEquivalent(r).size());
  return o;
}

Outcome Faithfulness() {
  const lang::CheckedProgram p = testing::Triangle();
  const mutgen::MutantTable t = mutgen::GenerateMutants(p);
  const suite::TestSuite s = testing::LoadSuite(p, "t1.tests", "T1");
  const testing::CheckResult reach = testing::CheckReachability(p, s);
  const testing::CheckResult replay = testing::CheckModelReplay(p, t, -5, 10);
  Outcome o;
  o.pass = reach.ok() && replay.ok() && reach.checked > 0 && replay.checked > 0;
  o.detail = std::to_string(reach.checked) + " (test, site) pairs, " +
             std::to_string(replay.checked) + " models replayed, " +
             std::to_string(reach.failures.size() + replay.failures.size()) + " failures";
  if (!reach.ok()) o.detail += "; first: " + reach.failures.front();
  if (!replay.ok()) o.detail += "; first: " + replay.failures.front();
  return o;
}

Outcome Soundness() {
  const lang::CheckedProgram p = testing::Triangle();
  const mutgen::MutantTable t = mutgen::GenerateMutants(p);
  const suite::TestSuite s = testing::LoadSuite(p, "t1.tests", "T1");
  const preprocess::PreprocessReport r = preprocess::Preprocess(p, t, s);
  const analysis::AnalysisReport a =
      analysis::RunAnalysis(p, t, s, analysis::Filter::kInfection, &r);
  const driver::EquivalenceOptions options{.domain_lo = -5, .domain_hi = 10};
  const std::vector<driver::OracleLabel> labels =
      driver::BruteForceOracle(p, t, {.domain_lo = -5, .domain_hi = 10});
  std::size_t local_equivalent = 0;
  std::size_t outer_equivalent = 0;
  std::size_t false_equivalences = 0;
  for (InfectionMode mode : {InfectionMode::kLocal, InfectionMode::kOutermost}) {
    const mutgen::MutantSet candidates = mode == InfectionMode::kLocal
                                             ? driver::LocalCandidates(r)
                                             : driver::OutermostCandidates(r, a);
    for (const driver::EquivalenceVerdict& v :
         driver::ClassifyEquivalence(p, t, s, candidates, mode, options)) {
      if (v.status != Verdict::kEquivalentOverDomain) continue;
      (mode == InfectionMode::kLocal ? local_equivalent : outer_equivalent)++;
      if (!labels[v.mutant].equivalent) ++false_equivalences;
    }
  }
  Outcome o;
  o.pass = false_equivalences == 0 && local_equivalent >= 1 &&
           local_equivalent == kGoldenLocalEquivalent;
  o.detail = "domain [-5,10]^3, equivalent local/outermost = " +
             std::to_string(local_equivalent) + "/" + std::to_string(outer_equivalent) +
             " (golden local " + std::to_string(kGoldenLocalEquivalent) +
             "), false equivalences = " + std::to_string(false_equivalences);
  return o;
}

Outcome Augmentation() {
  const lang::CheckedProgram p = testing::Triangle();
  const mutgen::MutantTable t = mutgen::GenerateMutants(p);
  const suite::TestSuite t1 = testing::LoadSuite(p, "t1.tests", "T1");
  const driver::EquivalenceOptions options;
  const auto killed = [&](const suite::TestSuite& s) {
    return analysis::RunAnalysis(p, t, s, analysis::Filter::kNone, nullptr).killed;
  };

  const preprocess::PreprocessReport r1 = preprocess::Preprocess(p, t, t1);
  const suite::TestSuite t2 = driver::AugmentSuite(
      p, t, t1,
      driver::ClassifyEquivalence(p, t, t1, driver::LocalCandidates(r1), InfectionMode::kLocal,
                                  options),
      "T2");
  const preprocess::PreprocessReport r2 = preprocess::Preprocess(p, t, t2);
  const analysis::AnalysisReport a2 =
      analysis::RunAnalysis(p, t, t2, analysis::Filter::kInfection, &r2);
  const suite::TestSuite t3 = driver::AugmentSuite(
      p, t, t2,
      driver::ClassifyEquivalence(p, t, t2, driver::OutermostCandidates(r2, a2),
                                  InfectionMode::kOutermost, options),
      "T3");

  const mutgen::MutantSet k1 = killed(t1);
  const mutgen::MutantSet k2 = killed(t2);
  const mutgen::MutantSet k3 = killed(t3);
  const bool strict = std::includes(k2.begin(), k2.end(), k1.begin(), k1.end()) &&
                      k2.size() > k1.size();
  const bool chain = std::includes(k3.begin(), k3.end(), k2.begin(), k2.end());
  const bool golden = t1.tests.size() == kGoldenTests[0] && t2.tests.size() == kGoldenTests[1] &&
                      t3.tests.size() == kGoldenTests[2] && k1.size() == kGoldenKilled[0] &&
                      k2.size() == kGoldenKilled[1] && k3.size() == kGoldenKilled[2];
  Outcome o;
  o.pass = strict && chain && golden;
  o.detail = "tests " + std::to_string(t1.tests.size()) + "/" + std::to_string(t2.tests.size()) +
             "/" + std::to_string(t3.tests.size()) + ", killed " + std::to_string(k1.size()) +
             "/" + std::to_string(k2.size()) + "/" + std::to_string(k3.size()) + " of " +
             std::to_string(t.size()) + (golden ? "" : " (golden values differ)");
  return o;
}

Outcome InfectionNotSufficient() {
  const lang::CheckedProgram p = driver::LoadProgram(testing::CorpusPath("clamp.ml0"));
  const mutgen::MutantTable t = mutgen::GenerateMutants(p);
  const suite::TestSuite s = testing::LoadSuite(p, "clamp.tests", "C");
  const preprocess::PreprocessReport r = preprocess::Preprocess(p, t, s);
  const std::vector<driver::OracleLabel> labels = driver::BruteForceOracle(p, t);
  std::size_t witnesses = 0;
  std::size_t overclaims = 0;
  for (const driver::EquivalenceVerdict& v : driver::ClassifyEquivalence(
           p, t, s, driver::LocalCandidates(r), InfectionMode::kLocal)) {
    const bool sat = std::any_of(v.paths.begin(), v.paths.end(), [](const auto& e) {
      return e.result.status == solver::SolveStatus::kSat;
    });
    if (sat && labels[v.mutant].equivalent && v.status != Verdict::kEquivalentOverDomain) {
      ++witnesses;
    }
    if (v.status == Verdict::kEquivalentOverDomain && !labels[v.mutant].equivalent) ++overclaims;
  }
  Outcome o;
  o.pass = witnesses >= 1 && overclaims == 0;
  o.detail = "clamp: " + std::to_string(witnesses) +
             " mutant(s) with a satisfiable infection constraint yet equivalent over the "
             "domain, reported killable; " +
             std::to_string(overclaims) + " false equivalences";
  return o;
}

Outcome SolverCertification() {
  std::mt19937_64 rng(kRandomSeed);
  const std::vector<std::string> vars = {"a", "b", "c"};
  solver::Domain domain;
  for (const std::string& v : vars) domain.vars.push_back({v, constraints::Sort::kInt, -4, 4});
  std::size_t sat = 0;
  std::size_t unsat = 0;
  std::size_t disagreements = 0;
  for (int i = 0; i < 1000; ++i) {
    const constraints::Formula f = testing::RandomFormula(rng, vars, 4);
    const solver::SolveResult r = solver::Solve(f, domain);
    const std::vector<testing::Env> models = testing::OracleModels(f, vars, -4, 4);
    if (r.status == solver::SolveStatus::kSat) {
      ++sat;
      testing::Env env;
      for (const solver::Binding& b : *r.model) env[b.name] = b.value;
      if (!solver::EvalFormula(f, *r.model) || !testing::OracleHolds(f, env) || models.empty() ||
          models.front() != env) {
        ++disagreements;
      }
    } else if (r.status == solver::SolveStatus::kUnsatOverDomain) {
      ++unsat;
      if (!models.empty()) ++disagreements;
    } else {
      ++disagreements;
    }
  }
  Outcome o;
  o.pass = disagreements == 0;
  o.detail = "1000 formulas over [-4,4]^3: " + std::to_string(sat) + " sat, " +
             std::to_string(unsat) + " unsat, " + std::to_string(disagreements) +
             " disagreements";
  return o;
}

}  // namespace
}  // namespace infectest

int main() {
  using infectest::Outcome;
  using Clock = std::chrono::steady_clock;

  std::vector<infectest::Corpus> corpus;
  const auto corpus_start = Clock::now();
  corpus = infectest::BuildCorpus();
  const double corpus_seconds =
      std::chrono::duration<double>(Clock::now() - corpus_start).count();

  struct Criterion {
    int number;
    const char* title;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "subset chain I <= C <= M", 30, [&] { return infectest::SubsetChain(corpus); }},
      {2, "kill-set invariance across filters", 120,
       [&] { return infectest::KillInvariance(corpus); }},
      {3, "execution savings structure", 5, [] { return infectest::Savings(); }},
      {4, "constraint faithfulness", 30, [] { return infectest::Faithfulness(); }},
      {5, "equivalence soundness against the oracle", 120,
       [] { return infectest::Soundness(); }},
      {6, "augmentation efficacy", 60, [] { return infectest::Augmentation(); }},
      {7, "infection is not sufficient", 10,
       [] { return infectest::InfectionNotSufficient(); }},
      {8, "solver certification", 30, [] { return infectest::SolverCertification(); }},
  };

  std::printf("corpus: triangle plus %d random programs (%.2fs)\n", infectest::kRandomPrograms,
              corpus_seconds);
  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = Clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = o.pass && in_time;
    if (!pass) ++failures;
    std::printf("%s criterion %d: %s: %s (%.2fs, limit %.0fs%s)\n", pass ? "PASS" : "FAIL",
                c.number, c.title, o.detail.c_str(), seconds, c.limit_seconds,
                in_time ? "" : ", exceeded");
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
