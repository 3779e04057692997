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

#include "driver/reports.h"

#include <cmath>

#include "json.hpp"

namespace infectest::driver {

namespace {

using Json = nlohmann::ordered_json;

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

Json Ids(const mutgen::MutantSet& ids) {
  Json out = Json::array();
  for (mutgen::MutantId id : ids) out.push_back(id);
  return out;
}

// Ratios rounded to six decimals so the text stays stable across platforms.
double Round(double x) { return std::round(x * 1e6) / 1e6; }

Json ValueJson(const interp::Value& v) {
  return v.is_bool() ? Json(v.as_bool()) : Json(v.as_int());
}

Json ModelJson(const solver::Assignment& model) {
  Json out = Json::object();
  for (const solver::Binding& b : model) {
    out[b.name] = b.sort == lang::Type::kBool ? Json(b.value != 0) : Json(b.value);
  }
  return out;
}

Json ResultJson(const solver::SolveResult& r) {
  Json out = Json::object();
  out["status"] = solver::SolveStatusName(r.status);
  if (r.status == solver::SolveStatus::kUnknown) out["reason"] = solver::UnknownReasonName(r.reason);
  out["checked"] = r.checked;
  if (r.model) out["model"] = ModelJson(*r.model);
  return out;
}

Json DomainJson(const EquivalenceOptions& options) {
  return Json{{"lo", options.domain_lo}, {"hi", options.domain_hi}};
}

}  // namespace

std::string MutantsJson(const mutgen::MutantTable& table) {
  Json list = Json::array();
  for (const mutgen::Mutant& m : table.mutants()) {
    list.push_back(Json{
        {"id", m.id},
        {"descriptor", mutgen::MutantDescriptor(table, m.id)},
        {"node", m.site.node},
        {"line", m.site.loc.line},
        {"column", m.site.loc.column},
        {"original", lang::BinaryOpSpelling(m.site.original_op)},
        {"replacement", lang::BinaryOpSpelling(m.replacement)},
        {"class", lang::OpClassName(m.site.op_class)},
    });
  }
  return Dump(Json{{"source", table.source_name()}, {"count", table.size()}, {"mutants", list}});
}

std::string PreprocessJson(const mutgen::MutantTable& table, const suite::TestSuite& suite,
                           const preprocess::PreprocessReport& report) {
  const mutgen::MutantSet candidates = preprocess::PotentiallyEquivalent(report);
  Json per_test = Json::array();
  for (const preprocess::TestCoverage& t : report.per_test) {
    per_test.push_back(Json{{"id", t.test_id}, {"covered", Ids(t.covered)},
                            {"infected", Ids(t.infected)}});
  }
  return Dump(Json{
      {"source", table.source_name()},
      {"suite", suite.name},
      {"tests", suite.tests.size()},
      {"original_runs", report.original_runs},
      {"counts", Json{{"mutants", report.all.size()},
                      {"covered", report.covered.size()},
                      {"infected", report.infected.size()},
                      {"covered_not_infected", candidates.size()},
                      {"probe_errors", report.probe_errors.size()}}},
      {"covered", Ids(report.covered)},
      {"infected", Ids(report.infected)},
      {"covered_not_infected", Ids(candidates)},
      {"probe_errors", Ids(report.probe_errors)},
      {"per_test", per_test},
  });
}

std::string AnalysisJson(const mutgen::MutantTable& table, const suite::TestSuite& suite,
                         const analysis::AnalysisReport& report) {
  Json per_mutant = Json::array();
  for (std::size_t id = 0; id < report.per_mutant.size(); ++id) {
    const analysis::MutantResult& r = report.per_mutant[id];
    Json entry{{"id", id},
               {"status", analysis::StatusName(r.status)},
               {"executions", r.executions}};
    if (!r.killing_tests.empty()) entry["killed_by"] = r.killing_tests.front();
    per_mutant.push_back(std::move(entry));
  }
  return Dump(Json{
      {"source", table.source_name()},
      {"suite", suite.name},
      {"tests", suite.tests.size()},
      {"filter", analysis::FilterName(report.filter)},
      {"mutants", table.size()},
      {"killed", report.killed.size()},
      {"mutation_score", Round(report.mutation_score)},
      {"executed_pairs", report.executed_pairs},
      {"executed_mutants", report.executed_mutants},
      {"per_mutant", per_mutant},
  });
}

std::string SavingsJson(const suite::TestSuite& suite, const analysis::SavingsReport& savings) {
  Json pairs = Json::object();
  Json mutants = Json::object();
  Json killed = Json::object();
  for (analysis::Filter f :
       {analysis::Filter::kNone, analysis::Filter::kCoverage, analysis::Filter::kInfection}) {
    const std::string name(analysis::FilterName(f));
    pairs[name] = savings.at(f).executed_pairs;
    mutants[name] = savings.at(f).executed_mutants;
    killed[name] = savings.at(f).killed.size();
  }
  return Dump(Json{
      {"suite", suite.name},
      {"executed_pairs", pairs},
      {"executed_mutants", mutants},
      {"killed", killed},
      {"killed_sets_equal", true},
      {"pair_reduction_infection_vs_coverage", Round(savings.pair_reduction_vs_coverage)},
      {"pair_reduction_coverage_vs_none", Round(savings.pair_reduction_vs_none)},
      {"mutant_reduction_infection_vs_coverage", Round(savings.mutant_reduction_vs_coverage)},
  });
}

VerdictCounts CountVerdicts(std::span<const EquivalenceVerdict> verdicts,
                            constraints::InfectionMode mode) {
  VerdictCounts c;
  c.mode = constraints::InfectionModeName(mode);
  c.candidates = verdicts.size();
  for (const EquivalenceVerdict& v : verdicts) {
    switch (v.status) {
      case Verdict::kEquivalentOverDomain:
        ++c.equivalent;
        break;
      case Verdict::kKillable:
        ++c.killable;
        break;
      case Verdict::kUnknown:
        ++c.unknown;
        break;
    }
  }
  return c;
}

std::string EquivalenceJson(const mutgen::MutantTable& table,
                            std::span<const EquivalenceVerdict> verdicts,
                            const EquivalenceOptions& options,
                            std::span<const OracleLabel> oracle) {
  const constraints::InfectionMode mode =
      verdicts.empty() ? constraints::InfectionMode::kLocal : verdicts.front().mode;
  const VerdictCounts counts = CountVerdicts(verdicts, mode);
  Json list = Json::array();
  Json false_equivalences = Json::array();
  for (const EquivalenceVerdict& v : verdicts) {
    Json paths = Json::array();
    for (const PathEvidence& p : v.paths) {
      paths.push_back(Json{{"steps", p.script.steps.size()},
                           {"formula", constraints::ToString(p.formula)},
                           {"result", ResultJson(p.result)}});
    }
    Json entry{{"id", v.mutant},
               {"descriptor", mutgen::MutantDescriptor(table, v.mutant)},
               {"status", VerdictName(v.status)}};
    if (v.status == Verdict::kUnknown) entry["reason"] = UnknownCauseName(v.reason);
    if (v.model) entry["model"] = ModelJson(*v.model);
    if (v.witness_path) entry["witness_path"] = *v.witness_path;
    entry["paths"] = paths;
    if (!oracle.empty()) {
      const OracleLabel& label = oracle[v.mutant];
      entry["oracle"] = label.equivalent ? "equivalent-over-domain" : "distinguished";
      if (label.witness) {
        Json w = Json::array();
        for (const interp::Value& x : *label.witness) w.push_back(ValueJson(x));
        entry["oracle_witness"] = w;
      }
      if (v.status == Verdict::kEquivalentOverDomain && !label.equivalent) {
        false_equivalences.push_back(v.mutant);
      }
    }
    list.push_back(std::move(entry));
  }
  Json out{
      {"source", table.source_name()},
      {"mode", counts.mode},
      {"domain", DomainJson(options)},
      {"scope", "equivalence verdicts hold for inputs inside the domain only"},
      {"path_bound", options.path_bound},
      {"budget", options.budget},
      {"candidates", counts.candidates},
      {"counts", Json{{"equivalent-over-domain", counts.equivalent},
                      {"killable", counts.killable},
                      {"unknown", counts.unknown}}},
  };
  if (!oracle.empty()) {
    out["oracle"] = Json{{"checked", true}, {"false_equivalences", false_equivalences}};
  }
  out["verdicts"] = list;
  return Dump(out);
}

std::string SolveJson(const solver::Formula& formula, const solver::Domain& domain,
                      const solver::SolveResult& result) {
  Json vars = Json::array();
  for (const solver::DomainVar& v : domain.vars) {
    vars.push_back(Json{{"name", v.name}, {"sort", lang::TypeName(v.sort)},
                        {"lo", v.lo}, {"hi", v.hi}});
  }
  return Dump(Json{{"formula", constraints::ToString(formula)},
                   {"domain", vars},
                   {"result", ResultJson(result)}});
}

std::string SummaryJson(const std::string& program, std::size_t mutants,
                        const EquivalenceOptions& options, std::span<const SuiteRow> rows,
                        std::span<const VerdictCounts> verdicts, bool oracle_checked) {
  Json suites = Json::array();
  for (const SuiteRow& r : rows) {
    suites.push_back(Json{{"name", r.name},
                          {"tests", r.tests},
                          {"covered", r.covered},
                          {"infected", r.infected},
                          {"killed", r.killed},
                          {"mutation_score", Round(r.mutation_score)}});
  }
  Json equivalence = Json::array();
  for (const VerdictCounts& c : verdicts) {
    equivalence.push_back(Json{{"mode", c.mode},
                               {"candidates", c.candidates},
                               {"equivalent-over-domain", c.equivalent},
                               {"killable", c.killable},
                               {"unknown", c.unknown}});
  }
  return Dump(Json{{"source", program},
                   {"mutants", mutants},
                   {"domain", DomainJson(options)},
                   {"oracle_checked", oracle_checked},
                   {"suites", suites},
                   {"equivalence", equivalence}});
}

}  // namespace infectest::driver
