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

#include <filesystem>
#include <memory>
#include <string>

#include <unistd.h>

#include <gtest/gtest.h>
#include <json.hpp>

#include "infectest/infectest.h"

namespace {

using nlohmann::json;

std::string Corpus(const char* name) { return std::string(INFECTEST_CORPUS_DIR) + "/" + name; }

// Takes ownership of a string returned by the library.
std::string Take(char* text) {
  std::string out = text != nullptr ? text : "";
  ift_free_string(text);
  return out;
}

struct ProgramDeleter {
  void operator()(ift_program* p) const { ift_program_free(p); }
};
struct SuiteDeleter {
  void operator()(ift_suite* s) const { ift_suite_free(s); }
};
using Program = std::unique_ptr<ift_program, ProgramDeleter>;
using Suite = std::unique_ptr<ift_suite, SuiteDeleter>;

Program Load(const char* name) {
  ift_program* p = nullptr;
  EXPECT_EQ(ift_program_load(Corpus(name).c_str(), &p), IFT_OK) << ift_last_error();
  return Program(p);
}

Suite LoadSuite(const ift_program* p, const char* name) {
  ift_suite* s = nullptr;
  EXPECT_EQ(ift_suite_load(p, Corpus(name).c_str(), "T1", nullptr, &s), IFT_OK)
      << ift_last_error();
  return Suite(s);
}

TEST(CApi, StatusStrings) {
  for (int s = IFT_OK; s <= IFT_INTERNAL; ++s) {
    EXPECT_NE(ift_status_string(static_cast<ift_status>(s)), nullptr);
  }
  EXPECT_STREQ(ift_status_string(IFT_OK), "ok");
}

TEST(CApi, OptionDefaults) {
  ift_options o;
  ift_options_init(&o);
  EXPECT_EQ(o.domain_lo, -8);
  EXPECT_EQ(o.domain_hi, 16);
  EXPECT_EQ(o.path_bound, 64u);
  EXPECT_EQ(o.budget, 10000000u);
  EXPECT_EQ(o.threads, 1);
}

TEST(CApi, ParseErrorsCarryLocations) {
  ift_program* p = nullptr;
  EXPECT_EQ(ift_program_parse("fn f( {", "bad.ml0", &p), IFT_SYNTAX);
  EXPECT_EQ(p, nullptr);
  EXPECT_NE(std::string(ift_last_error()).find("bad.ml0:1:"), std::string::npos)
      << ift_last_error();
  EXPECT_EQ(ift_program_parse("fn f(a:int)->int { return a > 1; }", "bad.ml0", &p), IFT_CHECK);
  EXPECT_EQ(ift_program_load(Corpus("absent.ml0").c_str(), &p), IFT_IO);
  EXPECT_EQ(ift_program_parse(nullptr, "x", &p), IFT_INVALID_ARGUMENT);
}

TEST(CApi, ProgramQueries) {
  const Program p = Load("triangle.ml0");
  size_t count = 0;
  ASSERT_EQ(ift_program_mutant_count(p.get(), &count), IFT_OK);
  char* text = nullptr;
  ASSERT_EQ(ift_program_mutants_json(p.get(), &text), IFT_OK);
  const json mutants = json::parse(Take(text));
  EXPECT_EQ(mutants["count"], count);
  EXPECT_EQ(mutants["mutants"].size(), count);
  EXPECT_EQ(mutants["mutants"][0]["id"], 0);

  ASSERT_EQ(ift_program_print(p.get(), &text), IFT_OK);
  const std::string printed = Take(text);
  ift_program* again = nullptr;
  ASSERT_EQ(ift_program_parse(printed.c_str(), "printed.ml0", &again), IFT_OK);
  ASSERT_EQ(ift_program_print(again, &text), IFT_OK);
  EXPECT_EQ(Take(text), printed);
  ift_program_free(again);
}

TEST(CApi, RunRendersOutcomes) {
  const Program p = Load("triangle.ml0");
  const char* args[] = {"2", "2", "3"};
  char* out = nullptr;
  ASSERT_EQ(ift_program_run(p.get(), "classify", args, 3, nullptr, &out), IFT_OK);
  EXPECT_EQ(Take(out), "2");
  EXPECT_EQ(ift_program_run(p.get(), "classify", args, 2, nullptr, &out), IFT_INVALID_ARGUMENT);
  EXPECT_EQ(ift_program_run(p.get(), "nope", args, 3, nullptr, &out), IFT_INVALID_ARGUMENT);

  ift_program* div = nullptr;
  ASSERT_EQ(ift_program_parse("fn f(a:int)->int { return 1 / a; }", "d.ml0", &div), IFT_OK);
  const char* zero[] = {"0"};
  ASSERT_EQ(ift_program_run(div, "f", zero, 1, nullptr, &out), IFT_OK);
  EXPECT_EQ(Take(out), "error:div-by-zero");
  ift_program_free(div);
}

TEST(CApi, SuiteErrors) {
  const Program p = Load("triangle.ml0");
  ift_suite* s = nullptr;
  EXPECT_EQ(ift_suite_parse(p.get(), "t1 classify(1, 2)\n", "bad", nullptr, &s), IFT_SUITE);
  EXPECT_EQ(ift_suite_parse(p.get(), "t1 classify(1, 2, 3\n", "bad", nullptr, &s), IFT_SUITE);
  EXPECT_EQ(ift_suite_load(p.get(), Corpus("absent.tests").c_str(), "x", nullptr, &s), IFT_IO);
  ASSERT_EQ(ift_suite_parse(p.get(), "t1 classify(1, 2, 3)\n", "ok", nullptr, &s), IFT_OK);
  EXPECT_EQ(ift_suite_size(s), 1u);
  char* text = nullptr;
  ASSERT_EQ(ift_suite_text(s, &text), IFT_OK);
  EXPECT_NE(Take(text).find("t1 classify(1, 2, 3)"), std::string::npos);
  ift_suite_free(s);
}

TEST(CApi, AnalysisReports) {
  const Program p = Load("triangle.ml0");
  const Suite s = LoadSuite(p.get(), "t1.tests");
  char* text = nullptr;
  ASSERT_EQ(ift_preprocess(p.get(), s.get(), nullptr, &text), IFT_OK);
  const json pre = json::parse(Take(text));
  ASSERT_EQ(ift_analyze(p.get(), s.get(), IFT_FILTER_INFECTION, nullptr, &text), IFT_OK);
  const json infection = json::parse(Take(text));
  EXPECT_EQ(infection["filter"], "infection");
  ASSERT_EQ(ift_compare_filters(p.get(), s.get(), nullptr, &text), IFT_OK);
  EXPECT_TRUE(json::parse(Take(text)).is_object());
  EXPECT_EQ(pre["counts"]["covered"], pre["counts"]["mutants"]);
}

TEST(CApi, EquivalenceAndAugment) {
  const Program p = Load("triangle.ml0");
  const Suite s = LoadSuite(p.get(), "t1.tests");
  ift_options o;
  ift_options_init(&o);
  o.domain_lo = -5;
  o.domain_hi = 10;
  char* text = nullptr;
  ASSERT_EQ(ift_equivalence(p.get(), s.get(), IFT_MODE_LOCAL, 1, &o, &text), IFT_OK)
      << ift_last_error();
  const json eq = json::parse(Take(text));
  EXPECT_EQ(eq["mode"], "local");
  EXPECT_TRUE(eq["oracle"]["false_equivalences"].empty());
  EXPECT_GE(eq["counts"]["equivalent-over-domain"].get<int>(), 1);

  ift_suite* t2 = nullptr;
  ASSERT_EQ(ift_augment(p.get(), s.get(), IFT_MODE_LOCAL, "T2", &o, &t2), IFT_OK);
  EXPECT_GT(ift_suite_size(t2), ift_suite_size(s.get()));
  ift_suite_free(t2);

  o.domain_lo = 3;
  o.domain_hi = 2;
  EXPECT_EQ(ift_equivalence(p.get(), s.get(), IFT_MODE_LOCAL, 0, &o, &text), IFT_DOMAIN);
}

TEST(CApi, Solve) {
  ift_options o;
  ift_options_init(&o);
  o.domain_lo = -5;
  o.domain_hi = 10;
  char* text = nullptr;
  ASSERT_EQ(ift_solve("(and (!= (== a c) (<= a c)) (== a b) (not (or (<= a 0) (<= b 0) (<= c 0))))",
                      &o, &text),
            IFT_OK);
  const json sat = json::parse(Take(text));
  EXPECT_EQ(sat["result"]["status"], "sat");
  ASSERT_EQ(ift_solve("(and (< a 0) (> a 0))", &o, &text), IFT_OK);
  EXPECT_EQ(json::parse(Take(text))["result"]["status"], "unsat-over-domain");
  EXPECT_EQ(ift_solve("(and (< a 0)", &o, &text), IFT_SYNTAX);
}

TEST(CApi, Pipeline) {
  const std::filesystem::path out = std::filesystem::temp_directory_path() /
                                    ("infectest-capi-" + std::to_string(::getpid()));
  std::filesystem::remove_all(out);
  char* summary = nullptr;
  ASSERT_EQ(ift_pipeline(Corpus("triangle.ml0").c_str(), Corpus("t1.tests").c_str(),
                         out.string().c_str(), 1, 0, nullptr, &summary),
            IFT_OK)
      << ift_last_error();
  const json s = json::parse(Take(summary));
  EXPECT_EQ(s["suites"].size(), 3u);
  EXPECT_TRUE(std::filesystem::exists(out / "summary.json"));
  EXPECT_EQ(ift_pipeline(Corpus("absent.ml0").c_str(), Corpus("t1.tests").c_str(),
                         out.string().c_str(), 1, 0, nullptr, &summary),
            IFT_IO);
  EXPECT_EQ(summary, nullptr);
  std::filesystem::remove_all(out);
}

}  // namespace
