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
#include "dgsem/graph_json.hpp"
#include "dgsem/model_check.hpp"
#include "dgsem/parser.hpp"
#include "dgsem/random_models.hpp"
#include "support.hpp"

namespace dgsem {
namespace {

using testing::data_path;

/// Checks f on m with constants ci bound to nodes[i-1] and "c" to `target`.
class Checker {
 public:
  explicit Checker(const std::string& file) : graph_(load_graph(data_path(file))), model_(graph_) {}

  bool operator()(const Formula& f, const std::vector<std::string>& nodes, const std::string& target = "") const {
    Interpretation i = standard_environment(std::max<std::size_t>(graph_.node_count(), 2));
    for (std::size_t j = 0; j < nodes.size(); ++j) i.set_constant("c" + std::to_string(j + 1), nodes[j]);
    if (!target.empty()) i.set_constant("c", target);
    return satisfies_closed(model_, i, f);
  }

  std::size_t n() const { return graph_.node_count(); }
  const AnnotatedGraph& graph() const { return graph_; }

 private:
  AnnotatedGraph graph_;
  Model model_;
};

std::vector<std::string> names(std::size_t k) {
  std::vector<std::string> out;
  for (const auto& t : constants(k)) out.push_back(t.name);
  return out;
}

TEST(StandardEnvironment, Bindings) {
  Interpretation i = standard_environment(3);
  const SkeletonGraph* pa2 = i.predicate(kPA, 2);
  ASSERT_NE(pa2, nullptr);
  EXPECT_TRUE(pa2->has_edge(Placeholder{1}, Placeholder{2}));
  EXPECT_EQ(pa2->edge_anno(Placeholder{1}, Placeholder{2}), (SkeletonGraph::AnnoSet{std::string(kAttacks)}));
  const SkeletonGraph* pa1 = i.predicate(kPA, 1);
  ASSERT_NE(pa1, nullptr);
  EXPECT_TRUE(pa1->has_edge(Placeholder{1}, Placeholder{1}));
  for (std::size_t n = 0; n <= 3; ++n) {
    const SkeletonGraph* pd = i.predicate(kPD, n);
    ASSERT_NE(pd, nullptr);
    EXPECT_EQ(pd->node_count(), n);
    EXPECT_TRUE(pd->edges().empty());
  }
  EXPECT_EQ(i.predicate(kPD, 4), nullptr);
  const SkeletonGraph* eq = i.predicate(kPAnnoEq, 3);
  ASSERT_NE(eq, nullptr);
  EXPECT_EQ(eq->node_anno(Placeholder{1}), (SkeletonGraph::AnnoSet{Placeholder{3}}));
}

TEST(ConflictFree, Schema) {
  EXPECT_EQ(f_k_cf(0, {}), Formula::top());
  Formula one = f_k_cf(1, {"c1"});
  ASSERT_EQ(one.kind(), FormulaKind::conjunction);
  EXPECT_EQ(one.child(0), parse_formula("p_D(c1)"));
  EXPECT_EQ(one.child(1).kind(), FormulaKind::forall);
  EXPECT_THROW(f_k_cf(2, {"c1"}), ArityMismatch);
  Checker top("equiv_chain.json");
  EXPECT_TRUE(top(f_k_cf(2, names(2)), {"u1", "u4"}));
  EXPECT_FALSE(top(f_k_cf(2, names(2)), {"u2", "u3"}));
  // A repeated node is not a set.
  EXPECT_FALSE(top(f_k_cf(2, names(2)), {"u1", "u1"}));
}

TEST(Closure, Schema) {
  EXPECT_EQ(f_kl_cl(0, 0, {}), Formula::top());
  EXPECT_EQ(f_kl_cl(0, 2, names(2)), Formula::bottom());
  EXPECT_THROW(f_kl_cl(1, 2, names(1)), ArityMismatch);
  Checker top("equiv_chain.json");
  EXPECT_TRUE(top(f_kl_cl(1, 2, names(2)), {"u3", "u5"}));
  EXPECT_FALSE(top(f_kl_cl(1, 1, names(1)), {"u3"}));
  EXPECT_TRUE(top(f_kl_cl(1, 1, names(1)), {"u1"}));
}

TEST(WideConflictFree, Schema) {
  EXPECT_EQ(f_kn_wcf(0, 3, {}), Formula::top());
  Checker top("equiv_chain.json");
  EXPECT_FALSE(top(f_kn_wcf(2, 5, names(2)), {"u3", "u4"}));
  EXPECT_TRUE(top(f_kn_wcf(2, 5, names(2)), {"u1", "u4"}));
  EXPECT_THROW(f_kn_wcf(3, 2, names(3)), ArityMismatch);
  EXPECT_THROW(f_kn_wcf(1, 9, names(1)), BoundExceeded);
}

TEST(WideConflictFree, FullLengthAgreesWithSimple) {
  for (std::size_t i = 0; i < 40; ++i) {
    RandomModelOptions opts;
    opts.max_nodes = 4;
    AnnotatedGraph g = random_equiv_dung(61, i, opts);
    Model m(g);
    std::vector<std::string> nodes;
    for (const auto& [n, anno] : g.nodes()) nodes.push_back(n);
    for (std::size_t k = 1; k <= nodes.size(); ++k) {
      Interpretation env = standard_environment(4);
      for (std::size_t j = 0; j < k; ++j) env.set_constant("c" + std::to_string(j + 1), nodes[j]);
      EXPECT_EQ(satisfies_closed(m, env, f_kn_wcf(k, k, names(k))), satisfies_closed(m, env, f_k_cf(k, names(k))));
    }
  }
}

TEST(Defence, Schema) {
  Checker top("equiv_chain.json");
  EXPECT_TRUE(top(f_k_df(1, "c", names(1)), {"u1"}, "u3"));
  EXPECT_FALSE(top(f_k_df(1, "c", names(1)), {"u1"}, "u5"));
  EXPECT_TRUE(top(f_k_df(0, "c", {}), {}, "u1"));
  EXPECT_FALSE(top(f_k_df(0, "c", {}), {}, "u2"));
}

TEST(WideDefence, Schema) {
  Checker top("equiv_chain.json");
  EXPECT_FALSE(top(f_kn_wdf(1, 5, "c", names(1)), {"u1"}, "u3"));
  EXPECT_TRUE(top(f_kn_wdf(0, 5, "c", {}), {}, "u1"));
  Checker bottom("equiv_mutual.json");
  EquivDungModel m(bottom.graph());
  bool expected = m.defends(m.set_of({"u4"}), m.index_of("u1"), Sigma::wide);
  EXPECT_EQ(bottom(f_kn_wdf(1, 6, "c", names(1)), {"u4"}, "u1"), expected);
}

TEST(Admissible, Schema) {
  Checker top("equiv_chain.json");
  EXPECT_TRUE(top(f_adm(Sigma::simple, 0, 5, {}), {}));
  EXPECT_TRUE(top(f_adm(Sigma::wide, 0, 5, {}), {}));
  EXPECT_TRUE(top(f_adm(Sigma::simple, 2, 5, names(2)), {"u1", "u3"}));
  EXPECT_FALSE(top(f_adm(Sigma::wide, 2, 5, names(2)), {"u1", "u3"}));
}

TEST(Complete, Schema) {
  Checker top("equiv_chain.json");
  EXPECT_TRUE(top(f_cmp(CmpVariant::defence, 3, 5, names(3)), {"u1", "u3", "u4"}));
  EXPECT_TRUE(top(f_cmp(CmpVariant::wide_defence, 2, 5, names(2)), {"u1", "u4"}));
  EXPECT_FALSE(top(f_cmp(CmpVariant::wide_defence, 1, 5, names(1)), {"u1"}));
  Checker bottom("equiv_mutual.json");
  EXPECT_TRUE(bottom(f_cmp(CmpVariant::equivalence, 1, 6, names(1)), {"u5"}));
  EXPECT_FALSE(bottom(f_cmp(CmpVariant::equivalence, 1, 6, names(1)), {"u1"}));
}

TEST(Extension, ItemSpecs) {
  EXPECT_EQ(item_spec(1), parse_spec("simple:defence:complete"));
  EXPECT_EQ(item_spec(2), parse_spec("wide:defence:complete"));
  EXPECT_EQ(item_spec(3), parse_spec("simple:equivalence:complete"));
  EXPECT_EQ(item_spec(5), parse_spec("wide:defence:preferred"));
  EXPECT_EQ(item_spec(8), parse_spec("wide:defence:grounded"));
  EXPECT_EQ(item_spec(10), parse_spec("simple:defence:stable"));
  EXPECT_EQ(item_spec(12), parse_spec("simple:equivalence:stable"));
  EXPECT_THROW(item_spec(13), ArityMismatch);
}

TEST(Extension, Schema) {
  Checker top("equiv_chain.json");
  EXPECT_TRUE(top(f_extension(5, 2, 5, names(2)), {"u1", "u4"}));
  EXPECT_FALSE(top(f_extension(5, 1, 5, names(1)), {"u1"}));
  Checker bottom("equiv_mutual.json");
  EXPECT_TRUE(bottom(f_extension(8, 0, 6, {}), {}));
  EquivDungModel m(top.graph());
  bool stable = is_extension(m, m.set_of({"u1", "u3", "u4"}), item_spec(10));
  EXPECT_EQ(top(f_extension(10, 3, 5, names(3)), {"u1", "u3", "u4"}), stable);
  EXPECT_THROW(f_extension(4, 3, 2, names(3)), ArityMismatch);
}

TEST(Distinct, Schema) {
  EXPECT_EQ(f_distinct(0, 0, {}), Formula::bottom());
  EXPECT_EQ(f_distinct(0, 2, names(2)), parse_formula("p_D(c1, c2)"));
  Checker top("equiv_chain.json");
  EXPECT_TRUE(top(f_distinct(1, 1, names(2)), {"u1", "u2"}));
  EXPECT_FALSE(top(f_distinct(1, 1, names(2)), {"u1", "u1"}));
  // Tuples are compared as sets.
  EXPECT_FALSE(top(f_distinct(2, 2, names(4)), {"u1", "u2", "u2", "u1"}));
  EXPECT_TRUE(top(f_distinct(2, 1, names(3)), {"u1", "u2", "u1"}));
}

TEST(Cmps, Schema) {
  Checker top("equiv_chain.json");
  EXPECT_TRUE(top(f_cmps({2}, 5, names(2)), {"u1", "u4"}));
  EXPECT_FALSE(top(f_cmps({2, 1}, 5, names(3)), {"u1", "u4", "u1"}));
  EXPECT_FALSE(top(f_cmps({}, 5, {}), {}));
  Checker bottom("equiv_mutual.json");
  // The wide defence-complete family of this model is {}, {u5}, {u1,u3,u4,u6}.
  EXPECT_TRUE(bottom(f_cmps({0, 1, 4}, 6, names(5)), {"u5", "u1", "u3", "u4", "u6"}));
  EXPECT_FALSE(bottom(f_cmps({0, 1, 1, 4}, 6, names(6)), {"u4", "u5", "u1", "u3", "u4", "u6"}));
  EXPECT_FALSE(bottom(f_cmps({0, 1}, 6, names(1)), {"u5"}));
  EXPECT_THROW(f_cmps({2}, 5, names(3)), ArityMismatch);
  EXPECT_THROW(f_cmps({6}, 5, names(6)), ArityMismatch);
}

TEST(Builder, FreshVariablesAvoidCapture) {
  FormulaBuilder b;
  std::vector<Term> t = {Term::var("y_1"), Term::var("y_2")};
  Formula f = b.cf(t);
  EXPECT_EQ(free_vars(f), (std::set<std::string>{"y_1", "y_2"}));
}

TEST(Builder, MutationChangesConflictFreeness) {
  FormulaBuilder b;
  b.set_mutate_cf(true);
  Formula bad = b.cf(constants(2));
  Checker top("equiv_chain.json");
  EXPECT_NE(top(bad, {"u1", "u4"}), top(f_k_cf(2, names(2)), {"u1", "u4"}));
}

}  // namespace
}  // namespace dgsem
