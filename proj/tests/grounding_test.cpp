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

#include <sstream>

#include "dgsem/characterisation.hpp"
#include "dgsem/graph_json.hpp"
#include "dgsem/grounding.hpp"
#include "dgsem/parser.hpp"
#include "dgsem/random_models.hpp"
#include "formula_gen.hpp"
#include "support.hpp"

namespace dgsem {
namespace {

using testing::data_path;
using testing::FormulaGen;
using testing::make_graph;

using Clause = std::vector<int>;

struct Cnf {
  int num_vars = 0;
  std::vector<Clause> clauses;
};

Cnf parse_cnf(const std::string& text) {
  Cnf cnf;
  std::istringstream in(text);
  std::string line;
  std::size_t declared = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      ls >> p >> fmt >> cnf.num_vars >> declared;
      continue;
    }
    Clause c;
    for (int lit; ls >> lit && lit != 0;) c.push_back(lit);
    cnf.clauses.push_back(c);
  }
  EXPECT_EQ(cnf.clauses.size(), declared);
  return cnf;
}

// Plain DPLL with unit propagation. assignment[v] is 0 (free), 1 or -1.
bool dpll(const std::vector<Clause>& clauses, std::vector<int> assignment) {
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& c : clauses) {
      int free_lit = 0;
      std::size_t free_count = 0;
      bool sat = false;
      for (int lit : c) {
        int val = assignment[std::abs(lit)] * (lit > 0 ? 1 : -1);
        if (val > 0) sat = true;
        if (val == 0) {
          ++free_count;
          free_lit = lit;
        }
      }
      if (sat) continue;
      if (free_count == 0) return false;
      if (free_count == 1) {
        assignment[std::abs(free_lit)] = free_lit > 0 ? 1 : -1;
        changed = true;
      }
    }
  }
  for (std::size_t v = 1; v < assignment.size(); ++v) {
    if (assignment[v] != 0) continue;
    for (int value : {1, -1}) {
      auto next = assignment;
      next[v] = value;
      if (dpll(clauses, next)) return true;
    }
    return false;
  }
  return true;
}

bool cnf_satisfiable(const Dimacs& d, const Valuation& assume = {}) {
  Cnf cnf = parse_cnf(d.cnf);
  std::vector<int> assignment(static_cast<std::size_t>(cnf.num_vars) + 1, 0);
  for (const auto& [name, value] : assume) assignment[static_cast<std::size_t>(d.variables.at(name))] = value ? 1 : -1;
  return dpll(cnf.clauses, assignment);
}

bool brute_satisfiable(const PropFormula& p) {
  const std::set<std::string> names = p.vars();
  std::vector<std::string> vars(names.begin(), names.end());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vars.size()); ++mask) {
    Valuation v;
    for (std::size_t i = 0; i < vars.size(); ++i) v[vars[i]] = ((mask >> i) & 1) != 0;
    if (eval_prop(p, v)) return true;
  }
  return false;
}

Model chain() { return Model(load_graph(data_path("equiv_chain.json"))); }

TEST(Ground, TruthConstants) {
  Model m = chain();
  EXPECT_EQ(ground(m, {}, Formula::top()).kind(), PropKind::top);
  EXPECT_EQ(ground(m, {}, Formula::bottom()).kind(), PropKind::bottom);
  EXPECT_EQ(ground(m, {}, parse_formula("forall x. x = x")).kind(), PropKind::top);
  EXPECT_EQ(ground(m, {}, parse_formula("exists x. ~x = x")).kind(), PropKind::bottom);
}

TEST(Ground, AtomsBecomeVariables) {
  Model m = chain();
  Interpretation i = standard_environment(2);
  i.set_constant("a", "u1");
  i.set_constant("b", "u2");
  PropFormula p = ground(m, i, parse_formula("p_A(a, b) & ~p_A(b, a)"));
  EXPECT_EQ(p.vars(), (std::set<std::string>{"p_A/2(u1,u2)", "p_A/2(u2,u1)"}));
  EXPECT_TRUE(eval_prop(p, induced_valuation(m, i, p)));
}

TEST(Ground, QuantifierFreeFormulaKeepsItsAtoms) {
  Model m = chain();
  Interpretation i = standard_environment(2);
  i.set_constant("a", "u3");
  PropFormula p = ground(m, i, parse_formula("p_A(a) -> p_D(a, a)"));
  EXPECT_EQ(p.vars(), (std::set<std::string>{"p_A/1(u3)", "p_D/2(u3,u3)"}));
}

TEST(Ground, Folding) {
  Model m = chain();
  Interpretation i = standard_environment(2);
  GroundOptions fold;
  fold.fold_predicates = {{kPD, 1}, {kPD, 2}};
  Formula f = parse_formula("forall x. forall y. (p_D(x, y) -> ~x = y)");
  EXPECT_GT(ground(m, i, f).vars().size(), 0u);
  EXPECT_EQ(ground(m, i, f, fold).kind(), PropKind::top);
}

TEST(Ground, HashConsingSharesSubformulas) {
  Model m = chain();
  Interpretation i = standard_environment(2);
  i.set_constant("a", "u1");
  PropFormula p = ground(m, i, parse_formula("(p_A(a) & p_D(a)) | ~(p_A(a) & p_D(a))"));
  // Two variables, one conjunction, its negation and the disjunction.
  EXPECT_EQ(p.size(), 5u);
}

TEST(Ground, ConflictFreeOnChain) {
  Model m = chain();
  Interpretation i = standard_environment(2);
  i.set_constant("c1", "u1");
  i.set_constant("c2", "u4");
  Formula f = f_k_cf(2, {"c1", "c2"});
  PropFormula p = ground(m, i, f);
  EXPECT_EQ(eval_prop(p, induced_valuation(m, i, p)), satisfies_closed(m, i, f));
  EXPECT_TRUE(eval_prop(p, induced_valuation(m, i, p)));
}

TEST(Ground, NotClosed) {
  Model m = chain();
  EXPECT_THROW(ground(m, {}, parse_formula("p(x)")), NotClosedError);
}

TEST(InducedValuation, Examples) {
  Model m = chain();
  Interpretation i = standard_environment(2);
  Valuation v = induced_valuation(m, i, {"p_A/2(u1,u2)", "p_A/2(u1,u3)", "p_D/1(u1)", "p_D/2(u1,u1)"});
  EXPECT_TRUE(v.at("p_A/2(u1,u2)"));
  EXPECT_FALSE(v.at("p_A/2(u1,u3)"));
  EXPECT_TRUE(v.at("p_D/1(u1)"));
  EXPECT_FALSE(v.at("p_D/2(u1,u1)"));
}

TEST(InducedValuation, DecodeErrors) {
  Model m = chain();
  Interpretation i = standard_environment(2);
  for (const char* bad : {"p_A", "p_A/2(u1)", "p_A/x(u1)", "q/1(u1)", "p_A/2(u1,u2", "p_A/1(nowhere)"}) {
    EXPECT_THROW(induced_valuation(m, i, {bad}), DecodeError) << bad;
  }
}

TEST(AtomName, Escaping) {
  EXPECT_EQ(atom_name("p", {"a", "b"}), "p/2(a,b)");
  EXPECT_EQ(atom_name("p", {}), "p/0()");
  EXPECT_EQ(atom_name("p", {"a,b"}), "p/1(a\\,b)");
  EXPECT_EQ(atom_name("p/q", {"(x)"}), "p\\/q/1(\\(x\\))");
  AnnotatedGraph g = make_graph({{"a,b", {}}, {"c)", {}}}, {{"a,b", "c)", {std::string(kAttacks)}}});
  Model m(g);
  Interpretation i = standard_environment(2);
  Valuation v = induced_valuation(m, i, {atom_name(kPA, {"a,b", "c)"}), atom_name(kPA, {"c)", "a,b"})});
  EXPECT_TRUE(v.at(atom_name(kPA, {"a,b", "c)"})));
  EXPECT_FALSE(v.at(atom_name(kPA, {"c)", "a,b"})));
}

TEST(EvalProp, Basics) {
  auto arena = std::make_shared<PropArena>();
  auto a = arena->var("a");
  PropFormula contradiction(arena, arena->conjunction(a, arena->negation(a)));
  PropFormula top(arena, arena->top());
  EXPECT_TRUE(eval_prop(top, {}));
  EXPECT_FALSE(eval_prop(contradiction, {{"a", true}}));
  EXPECT_FALSE(eval_prop(contradiction, {{"a", false}}));
  EXPECT_THROW(eval_prop(contradiction, {}), MissingVar);
  PropFormula imp(arena, arena->implication(a, arena->var("b")));
  EXPECT_FALSE(eval_prop(imp, {{"a", true}, {"b", false}}));
  EXPECT_TRUE(eval_prop(imp, {{"a", false}, {"b", false}}));
}

TEST(Dimacs, Constants) {
  auto arena = std::make_shared<PropArena>();
  Dimacs t = to_dimacs(PropFormula(arena, arena->top()));
  EXPECT_NE(t.cnf.find("p cnf 0 0"), std::string::npos);
  EXPECT_TRUE(cnf_satisfiable(t));
  Dimacs f = to_dimacs(PropFormula(arena, arena->bottom()));
  EXPECT_NE(f.cnf.find("p cnf 0 1"), std::string::npos);
  EXPECT_FALSE(cnf_satisfiable(f));
}

TEST(Dimacs, SidecarListsSourceVariables) {
  auto arena = std::make_shared<PropArena>();
  PropFormula p(arena, arena->disjunction(arena->var("x"), arena->negation(arena->var("y"))));
  Dimacs d = to_dimacs(p);
  EXPECT_EQ(d.variables, (std::map<std::string, int>{{"x", 1}, {"y", 2}}));
  json side = dimacs_sidecar(d);
  EXPECT_EQ(side["num_vars"], d.num_vars);
  EXPECT_EQ(side["num_clauses"], d.num_clauses);
  EXPECT_EQ(side["variables"]["x"], 1);
}

// Grounding agrees with model checking, and the CNF agrees with the ground
// formula both on satisfiability and under unit assumptions.
TEST(Ground, RandomFormulasAgreeWithModelChecking) {
  FormulaGen gen(8);
  Interpretation env = standard_environment(3);
  RandomModelOptions opts;
  opts.max_nodes = 3;
  for (std::size_t n = 0; n < 150; ++n) {
    Model m(random_equiv_dung(404, n, opts));
    Formula f = gen.closed(3);
    PropFormula p = ground(m, env, f);
    Valuation induced = induced_valuation(m, env, p);
    bool truth = satisfies_closed(m, env, f);
    ASSERT_EQ(eval_prop(p, induced), truth) << to_text(f);
    Dimacs d = to_dimacs(p);
    EXPECT_EQ(cnf_satisfiable(d, induced), truth) << to_text(f);
    if (p.vars().size() <= 10) {
      EXPECT_EQ(cnf_satisfiable(d), brute_satisfiable(p)) << to_text(f);
    }
  }
}

TEST(Ground, GeneratedFamiliesAgreeWithModelChecking) {
  RandomModelOptions opts;
  opts.max_nodes = 3;
  for (std::size_t n = 0; n < 20; ++n) {
    Model m(random_equiv_dung(505, n, opts));
    const auto& dom = m.domain();
    Interpretation env = standard_environment(3);
    env.set_constant("c1", dom.front());
    env.set_constant("c2", dom.back());
    env.set_constant("c", dom[dom.size() / 2]);
    std::vector<Formula> fs = {f_k_cf(2, {"c1", "c2"}), f_kl_cl(1, 2, {"c1", "c2"}), f_kn_wcf(2, 3, {"c1", "c2"}),
                               f_k_df(2, "c", {"c1", "c2"}), f_kn_wdf(1, 3, "c", {"c1"}),
                               f_adm(Sigma::wide, 2, 3, {"c1", "c2"}), f_extension(8, 1, 3, {"c1"})};
    for (const auto& f : fs) {
      PropFormula p = ground(m, env, f);
      EXPECT_EQ(eval_prop(p, induced_valuation(m, env, p)), satisfies_closed(m, env, f)) << to_text(f);
    }
  }
}

TEST(Ground, GraphLiteralAtoms) {
  Model m(load_graph(data_path("toulmin.json")));
  Interpretation i;
  i.set_constant("rebuttal", "rebuttal");
  i.set_constant("claim", "claim");
  Formula f = parse_formula(R"(exists x. exists y. {"nodes":[{"id":"*1","anno":["rebuttal"]},{"id":"*2","anno":["claim"]}],
                                                    "edges":[{"from":"*1","to":"*2","anno":[]}]}(x, y))");
  PropFormula p = ground(m, i, f);
  EXPECT_TRUE(eval_prop(p, induced_valuation(m, i, p)));
  Formula query = parse_formula(to_text(f));
  EXPECT_EQ(ground(m, i, query).size(), p.size());
}

}  // namespace
}  // namespace dgsem
