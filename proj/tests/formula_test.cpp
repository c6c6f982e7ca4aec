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

#include "dgsem/characterisation.hpp"
#include "dgsem/formula.hpp"
#include "dgsem/parser.hpp"

namespace dgsem {
namespace {

Term c(const std::string& name) { return Term::constant(name); }
Term v(const std::string& name) { return Term::var(name); }

TEST(Parser, NegationBindsTighterThanConjunction) {
  auto f = parse_formula("~p(a) & q(b)");
  auto expected = Formula::conjunction(Formula::negation(Formula::atom("p", {c("a")})), Formula::atom("q", {c("b")}));
  EXPECT_EQ(f, expected);
}

TEST(Parser, ImplicationIsWeakerThanQuantifiers) {
  auto f = parse_formula("forall x. p(x) -> q(x)");
  ASSERT_EQ(f.kind(), FormulaKind::implication);
  EXPECT_EQ(f.child(0), Formula::forall("x", Formula::atom("p", {v("x")})));
  // The consequent is outside the quantifier, so its x is free.
  EXPECT_EQ(f.child(1), Formula::atom("q", {v("x")}));
  EXPECT_EQ(free_vars(f), (std::set<std::string>{"x"}));
}

TEST(Parser, QuantifierScopesOverBinaryConnectives) {
  auto f = parse_formula("exists x. p(x) & q(x)");
  ASSERT_EQ(f.kind(), FormulaKind::exists);
  EXPECT_EQ(f.child(0).kind(), FormulaKind::conjunction);
  EXPECT_TRUE(free_vars(f).empty());
}

TEST(Parser, ImplicationIsRightAssociative) {
  auto f = parse_formula("a -> b -> c");
  ASSERT_EQ(f.kind(), FormulaKind::implication);
  EXPECT_EQ(f.child(0), Formula::atom("a", {}));
  EXPECT_EQ(f.child(1).kind(), FormulaKind::implication);
}

TEST(Parser, NestedExists) {
  auto f = parse_formula("exists x1. exists x2. p(x1, x2)");
  auto expected = Formula::exists("x1", Formula::exists("x2", Formula::atom("p", {v("x1"), v("x2")})));
  EXPECT_EQ(f, expected);
}

TEST(Parser, BracketsAndParenthesesAreInterchangeable) {
  EXPECT_EQ(parse_formula("[p(a) | q] & r"), parse_formula("(p(a) | q) & r"));
}

TEST(Parser, EqualityAndFunctions) {
  auto f = parse_formula("f(c, x) = d");
  ASSERT_EQ(f.kind(), FormulaKind::equal);
  EXPECT_EQ(f.lhs_term(), Term::apply("f", {c("c"), v("x")}));
  EXPECT_EQ(f.rhs_term(), c("d"));
}

TEST(Parser, BoundIdentifiersAreVariables) {
  auto f = parse_formula("forall a. p(a)");
  EXPECT_EQ(f.child(0).args()[0], v("a"));
  EXPECT_EQ(parse_formula("p(a)").args()[0], c("a"));
  EXPECT_EQ(parse_formula("p(y_3)").args()[0], v("y_3"));
}

TEST(Parser, ErrorsCarryPosition) {
  try {
    parse_formula("p(a) & ");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 7u);
    EXPECT_FALSE(e.expected().empty());
  }
  EXPECT_THROW(parse_formula("(p"), ParseError);
  EXPECT_THROW(parse_formula("forall . p"), ParseError);
  EXPECT_THROW(parse_formula("p(a,)"), ParseError);
  EXPECT_THROW(parse_formula(""), ParseError);
}

TEST(FreeVars, Examples) {
  EXPECT_EQ(free_vars(parse_formula("p(x)")), (std::set<std::string>{"x"}));
  EXPECT_TRUE(free_vars(parse_formula("forall x. p(x)")).empty());
  EXPECT_EQ(free_vars(parse_formula("forall x. p(x, y)")), (std::set<std::string>{"y"}));
}

TEST(WellFormed, Examples) {
  EXPECT_TRUE(is_well_formed(parse_formula("true")));
  EXPECT_FALSE(is_well_formed(parse_formula("p(x)")));
  for (std::size_t k = 0; k <= 5; ++k) {
    auto names = constants(k);
    std::vector<std::string> consts;
    for (const auto& t : names) consts.push_back(t.name);
    EXPECT_TRUE(is_well_formed(f_k_cf(k, consts))) << k;
  }
}

TEST(GraphLiteral, PlaceholdersAndTerms) {
  auto g = parse_graph_literal(R"({"nodes":[{"id":"*1","anno":[]},{"id":"c2","anno":[]}],
                                  "edges":[{"from":"*1","to":"c2","anno":["*2"]}]})");
  EXPECT_EQ(degree_of(g), 2u);
  EXPECT_TRUE(g.has_node(TypedItem{c("c2")}));
  EXPECT_TRUE(g.has_edge(TypedItem{Placeholder{1}}, TypedItem{c("c2")}));
  EXPECT_EQ(degree_of(parse_graph_literal("{}")), 0u);
  EXPECT_THROW(degree_of(parse_graph_literal(R"({"nodes":[{"id":"*3","anno":[]}]})")), DegreeGapError);
}

TEST(GraphLiteral, AsAtom) {
  auto f = parse_formula(R"(exists x. {"nodes":[{"id":"*1","anno":["claim"]}]}(x))");
  ASSERT_EQ(f.kind(), FormulaKind::exists);
  const Formula& atom = f.child(0);
  ASSERT_NE(atom.literal(), nullptr);
  EXPECT_EQ(atom.args(), std::vector<Term>{v("x")});
  EXPECT_EQ(parse_formula(to_text(f)), f);
}

TEST(Printer, RoundTripsHandWrittenFormulas) {
  for (const char* text : {"true", "false", "~~p", "p & q | r", "p & (q | r)", "(p -> q) -> r", "p -> q -> r",
                           "~(forall x. p(x))", "forall x. exists y. (p(x, y) -> x = y)", "(exists x. p(x)) & q",
                           "f(g(a), b) = c", "~a = b"}) {
    auto f = parse_formula(text);
    EXPECT_EQ(parse_formula(to_text(f)), f) << text << " printed as " << to_text(f);
  }
}

TEST(Printer, RoundTripsGeneratedFormulas) {
  FormulaBuilder b;
  auto t = constants(3);
  std::vector<Formula> all = {b.cf(t), b.cl(2, t), b.wcf(t, 4), b.df(c("c"), t), b.wdf(c("c"), t, 4), b.adm(t),
                              b.wadm(t, 4), b.cmp(CmpVariant::wide_defence, t, 4), b.distinct(1, t),
                              b.cmps({1, 2}, t, 3)};
  for (int item = 1; item <= 12; ++item) all.push_back(b.item(item, t, 4));
  for (const auto& f : all) {
    EXPECT_TRUE(is_well_formed(f));
    EXPECT_EQ(parse_formula(to_text(f)), f) << to_text(f);
  }
}

TEST(Symbols, ArityOverloading) {
  auto f = parse_formula("p_D(a) & p_D(a, b) & f(a) = g(a, b)");
  EXPECT_EQ(predicate_symbols(f), (std::set<SymbolRef>{{"p_D", 1}, {"p_D", 2}}));
  EXPECT_EQ(function_symbols(f), (std::set<SymbolRef>{{"a", 0}, {"b", 0}, {"f", 1}, {"g", 2}}));
}

}  // namespace
}  // namespace dgsem
