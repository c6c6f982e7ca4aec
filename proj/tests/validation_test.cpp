// Copyright 2026 The dgsem Authors
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

#include <gtest/gtest.h>

#include "dgsem/random_models.hpp"
#include "dgsem/validation.hpp"
#include "support.hpp"

namespace dgsem {
namespace {

using testing::data_path;

EquivDungModel chain() { return EquivDungModel(load_graph(data_path("equiv_chain.json"))); }

TEST(ParseFamily, Names) {
  EXPECT_EQ(parse_family("CF").kind, Family::Kind::cf);
  EXPECT_EQ(parse_family("WDF").kind, Family::Kind::wdf);
  Family adm = parse_family("WADM");
  EXPECT_EQ(adm.kind, Family::Kind::extension);
  EXPECT_EQ(adm.spec, parse_spec("wide:defence:admissible"));
  EXPECT_EQ(parse_family("E-CMP").spec, parse_spec("simple:equivalence:complete"));
  EXPECT_EQ(parse_family("item8").spec, item_spec(8));
  EXPECT_EQ(parse_family("wide:defence:stable").spec, parse_spec("wide:defence:stable"));
  EXPECT_EQ(parse_family("CMPS").kind, Family::Kind::cmps);
  EXPECT_THROW(parse_family("item13"), ParseError);
  EXPECT_THROW(parse_family("nope"), ParseError);
}

TEST(ParseFamily, Groups) {
  EXPECT_EQ(parse_families("core").size(), 5u);
  EXPECT_EQ(parse_families("items").size(), 12u);
  EXPECT_EQ(parse_families("CF,DF").size(), 2u);
  std::size_t all = parse_families("all").size();
  EXPECT_GT(all, 17u);
  EXPECT_THROW(parse_families("CF,,DF"), ParseError);
}

TEST(CrossValidate, CoreFamiliesOnChain) {
  EquivDungModel m = chain();
  for (const auto& f : parse_families("core")) {
    ValidationReport r = cross_validate(m, f);
    EXPECT_TRUE(r.passed()) << f.name;
    EXPECT_GT(r.cases, 0u) << f.name;
  }
}

TEST(CrossValidate, CaseCounts) {
  EquivDungModel m = chain();
  // Every subset of the five nodes once.
  EXPECT_EQ(cross_validate(m, parse_family("CF")).cases, 32u);
  ValidateOptions small;
  small.max_k = 1;
  EXPECT_EQ(cross_validate(m, parse_family("CF"), small).cases, 6u);
}

TEST(CrossValidate, GroundingAgrees) {
  EquivDungModel m = chain();
  ValidateOptions opts;
  opts.check_grounding = true;
  opts.max_k = 2;
  for (const char* name : {"CF", "WCF", "ADM", "W-D-CMP"}) {
    ValidationReport r = cross_validate(m, parse_family(name), opts);
    EXPECT_TRUE(r.passed()) << name;
    EXPECT_EQ(r.grounded, r.cases) << name;
  }
}

TEST(CrossValidate, MutationIsCaught) {
  EquivDungModel m = chain();
  ValidateOptions opts;
  opts.mutate_cf = true;
  ValidationReport r = cross_validate(m, parse_family("CF"), opts);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.mismatches.front().kind, "formula");
  EXPECT_NE(r.mismatches.front().expected, r.mismatches.front().actual);
}

TEST(CrossValidate, RandomModels) {
  RandomModelOptions gen;
  gen.max_nodes = 4;
  auto families = parse_families("CF,CL,WDF,DISTINCT,item1,item10");
  for (std::size_t i = 0; i < 10; ++i) {
    EquivDungModel m(random_equiv_dung(7, i, gen));
    for (const auto& f : families) EXPECT_TRUE(cross_validate(m, f).passed()) << f.name << " model " << i;
  }
}

TEST(CrossValidate, BoundExceeded) {
  RandomModelOptions gen;
  gen.min_nodes = 6;
  gen.max_nodes = 6;
  EquivDungModel m(random_equiv_dung(1, 0, gen));
  ValidateOptions opts;
  opts.bound = 5;
  EXPECT_THROW(cross_validate(m, parse_family("CF"), opts), BoundExceeded);
}

TEST(CrossValidate, ReportJson) {
  EquivDungModel m = chain();
  ValidateOptions opts;
  opts.mutate_cf = true;
  json j = to_json(cross_validate(m, parse_family("CF"), opts));
  EXPECT_EQ(j["family"], "CF");
  EXPECT_EQ(j["passed"], false);
  EXPECT_FALSE(j["mismatches"].empty());
}

}  // namespace
}  // namespace dgsem
