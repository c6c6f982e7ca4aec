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

#include "dgsem/characterisation.hpp"

#include <numeric>
#include <string>

#include "dgsem/errors.hpp"

namespace dgsem {

namespace {

using Terms = std::vector<Term>;

SkelItem ph(std::size_t i) { return Placeholder{i}; }

Formula eq(const Term& a, const Term& b) { return Formula::equal(a, b); }
Formula neq(const Term& a, const Term& b) { return Formula::negation(eq(a, b)); }
Formula neg(Formula f) { return Formula::negation(std::move(f)); }
Formula conj(Formula a, Formula b) { return Formula::conjunction(std::move(a), std::move(b)); }
Formula disj(Formula a, Formula b) { return Formula::disjunction(std::move(a), std::move(b)); }
Formula impl(Formula a, Formula b) { return Formula::implication(std::move(a), std::move(b)); }

Formula pd(const Terms& t) { return Formula::atom(kPD, t); }
Formula pa(const Term& a, const Term& b) { return Formula::atom(kPA, {a, b}); }
Formula pa(const Term& a) { return Formula::atom(kPA, {a}); }
Formula anno_eq(const Term& a, const Term& b, const Term& c) { return Formula::atom(kPAnnoEq, {a, b, c}); }

/// x attacks y, where x may be y itself.
Formula attacks(const Term& x, const Term& y) { return disj(conj(neq(x, y), pa(x, y)), conj(eq(x, y), pa(x))); }

/// x equals one of t[from, to).
Formula one_of(const Term& x, const Terms& t, std::size_t from, std::size_t to) {
  std::vector<Formula> fs;
  for (std::size_t i = from; i < to; ++i) fs.push_back(eq(x, t[i]));
  return big_or(fs);
}
Formula one_of(const Term& x, const Terms& t) { return one_of(x, t, 0, t.size()); }

Formula forall(const Terms& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = Formula::forall(it->name, std::move(body));
  return body;
}
Formula exists(const Terms& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = Formula::exists(it->name, std::move(body));
  return body;
}

Terms concat(const Terms& a, const Terms& b) {
  Terms out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Terms slice(const Terms& t, std::size_t from, std::size_t to) { return {t.begin() + from, t.begin() + to}; }

Terms to_terms(const std::vector<std::string>& names) {
  Terms out;
  for (const auto& n : names) out.push_back(Term::constant(n));
  return out;
}

void expect_size(const std::vector<std::string>& consts, std::size_t n, const char* what) {
  if (consts.size() != n) {
    throw ArityMismatch(std::string(what) + " expects " + std::to_string(n) + " constants, got " + std::to_string(consts.size()));
  }
}

void expect_bound(std::size_t k, std::size_t n, const char* what) {
  if (k > n) throw ArityMismatch(std::string(what) + ": k = " + std::to_string(k) + " exceeds N = " + std::to_string(n));
  if (n > kMaxGenerateN) throw BoundExceeded("N = " + std::to_string(n) + " exceeds the limit " + std::to_string(kMaxGenerateN));
}

}  // namespace

Interpretation standard_environment(std::size_t max_arity) {
  Interpretation interp;
  SkeletonGraph attack;
  attack.add_node(ph(1));
  attack.add_node(ph(2));
  attack.add_edge(ph(1), ph(2), {std::string(kAttacks)});
  interp.set_predicate(kPA, 2, attack);

  SkeletonGraph self;
  self.add_node(ph(1));
  self.add_edge(ph(1), ph(1), {std::string(kAttacks)});
  interp.set_predicate(kPA, 1, self);

  SkeletonGraph nodes;
  interp.set_predicate(kPD, 0, nodes);
  for (std::size_t n = 1; n <= max_arity; ++n) {
    nodes.add_node(ph(n));
    interp.set_predicate(kPD, n, nodes);
  }

  SkeletonGraph same_id;
  same_id.add_node(ph(1), {ph(3)});
  same_id.add_node(ph(2), {ph(3)});
  interp.set_predicate(kPAnnoEq, 3, same_id);
  return interp;
}

ExtensionSpec item_spec(int index) {
  if (index < 1 || index > 12) throw ArityMismatch("item index must be in 1..12, got " + std::to_string(index));
  static constexpr Mu kMu[] = {Mu::complete, Mu::preferred, Mu::grounded, Mu::stable};
  static constexpr ExtensionSpec kBase[] = {
      {Sigma::simple, Tau::defence, Mu::complete},
      {Sigma::wide, Tau::defence, Mu::complete},
      {Sigma::simple, Tau::equivalence, Mu::complete},
  };
  ExtensionSpec spec = kBase[(index - 1) % 3];
  spec.mu = kMu[(index - 1) / 3];
  return spec;
}

std::vector<Term> constants(std::size_t k, std::size_t first) {
  Terms out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(Term::constant("c" + std::to_string(first + i)));
  return out;
}

std::string FormulaBuilder::fresh(char letter) { return std::string(1, letter) + "_" + std::to_string(++counter_); }

void FormulaBuilder::check_n(std::size_t k, std::size_t n) const {
  if (n > max_n_) throw BoundExceeded("N = " + std::to_string(n) + " exceeds the limit " + std::to_string(max_n_));
  if (k > n) throw ArityMismatch("k = " + std::to_string(k) + " exceeds N = " + std::to_string(n));
}

Formula FormulaBuilder::cf(const Terms& t) {
  if (t.empty()) return Formula::top();
  Term y1 = var('y');
  Term y2 = var('y');
  Formula forward = mutate_cf_ ? pa(y1, y2) : neg(pa(y1, y2));
  Formula apart = conj(conj(neq(y1, y2), forward), neg(pa(y2, y1)));
  Formula same = conj(eq(y1, y2), neg(pa(y1)));
  Formula premise = conj(conj(conj(pd({y1}), pd({y2})), one_of(y1, t)), one_of(y2, t));
  return conj(pd(t), forall({y1, y2}, impl(premise, disj(apart, same))));
}

Formula FormulaBuilder::cl(std::size_t k, const Terms& t) {
  std::size_t l = t.size();
  if (k == 0 && l == 0) return Formula::top();
  if (k == 0 || l < k) return Formula::bottom();
  Term z1 = var('z');
  Term z2 = var('z');
  Term z3 = var('z');
  Formula inward = forall(
      {z1, z2}, impl(conj(conj(pd({z1, z2}), one_of(z1, t, 0, k)), Formula::exists(z3.name, anno_eq(z1, z2, z3))),
                     one_of(z2, t)));
  Term w1 = var('z');
  Term w2 = var('z');
  Term w3 = var('z');
  Formula needed = Formula::forall(
      w1.name, impl(conj(pd({w1}), one_of(w1, t, k, l)),
                    exists({w2, w3}, conj(one_of(w2, t, 0, k), anno_eq(w1, w2, w3)))));
  return conj(conj(pd(t), inward), needed);
}

Formula FormulaBuilder::wcf(const Terms& t, std::size_t n) {
  if (t.empty()) return Formula::top();
  std::vector<Formula> parts{cf(t)};
  for (std::size_t i = t.size() + 1; i <= n; ++i) {
    Terms ys;
    for (std::size_t j = t.size(); j < i; ++j) ys.push_back(var('y'));
    Terms all = concat(t, ys);
    parts.push_back(forall(ys, impl(cl(t.size(), all), cf(all))));
  }
  return big_and(parts);
}

Formula FormulaBuilder::df(const Term& c, const Terms& t) {
  Term y = var('y');
  if (t.empty()) {
    Formula safe = disj(conj(neq(y, c), neg(pa(y, c))), conj(eq(y, c), neg(pa(y))));
    return conj(pd({c}), Formula::forall(y.name, impl(pd({y}), safe)));
  }
  Term x = var('x');
  Formula threat = conj(pd({y}), attacks(y, c));
  Formula answer = conj(conj(pd({x}), one_of(x, t)), attacks(x, y));
  return conj(conj(pd({c}), pd(t)), Formula::forall(y.name, Formula::exists(x.name, impl(threat, answer))));
}

Formula FormulaBuilder::wdf(const Term& c, const Terms& t, std::size_t n) {
  Formula head = pd({c});
  if (!t.empty()) head = conj(head, pd(t));
  std::vector<Formula> parts{head};
  for (std::size_t i = 1; i <= n; ++i) {
    Terms ys;
    for (std::size_t j = 2; j <= i; ++j) ys.push_back(var('y'));
    Term member = var('y');
    Formula in_class = conj(pd({member}), disj(eq(member, c), one_of(member, ys)));
    Formula body = impl(cl(1, concat({c}, ys)), Formula::forall(member.name, impl(in_class, df(member, t))));
    parts.push_back(forall(ys, body));
  }
  return big_and(parts);
}

Formula FormulaBuilder::adm(const Terms& t) {
  std::vector<Formula> parts{cf(t)};
  for (const auto& tj : t) parts.push_back(df(tj, t));
  return big_and(parts);
}

Formula FormulaBuilder::wadm(const Terms& t, std::size_t n) {
  std::vector<Formula> parts{wcf(t, n)};
  for (const auto& tj : t) parts.push_back(wdf(tj, t, n));
  return big_and(parts);
}

Formula FormulaBuilder::cmp(CmpVariant v, const Terms& t, std::size_t n) {
  check_n(t.size(), n);
  if (v == CmpVariant::equivalence) return conj(adm(t), cl(t.size(), t));
  Term x = var('x');
  bool wide = v == CmpVariant::wide_defence;
  Formula base = wide ? wadm(t, n) : adm(t);
  Formula defended = wide ? wdf(x, t, n) : df(x, t);
  return conj(base, Formula::forall(x.name, impl(defended, one_of(x, t))));
}

Formula FormulaBuilder::complete_base(const ExtensionSpec& spec, const Terms& t, std::size_t n) {
  CmpVariant defence = spec.sigma == Sigma::simple ? CmpVariant::defence : CmpVariant::wide_defence;
  switch (spec.tau) {
    case Tau::defence:
      return cmp(defence, t, n);
    case Tau::equivalence:
      return cmp(CmpVariant::equivalence, t, n);
    case Tau::both:
      return conj(cmp(defence, t, n), cl(t.size(), t));
  }
  return Formula::bottom();
}

Formula FormulaBuilder::preferred(const ExtensionSpec& spec, const Terms& t, std::size_t n) {
  std::vector<Formula> parts{complete_base(spec, t, n)};
  for (std::size_t m = t.size() + 1; m <= n; ++m) {
    Terms xs;
    for (std::size_t j = m; j <= n; ++j) xs.push_back(var('x'));
    parts.push_back(neg(exists(xs, complete_base(spec, concat(t, xs), n))));
  }
  return big_and(parts);
}

Formula FormulaBuilder::grounded(const ExtensionSpec& spec, const Terms& t, std::size_t n) {
  std::vector<Formula> parts{complete_base(spec, t, n)};
  for (std::size_t m = 0; m < t.size(); ++m) {
    Terms xs;
    for (std::size_t j = 0; j < m; ++j) xs.push_back(var('x'));
    std::vector<Formula> inside;
    for (const auto& x : xs) inside.push_back(one_of(x, t));
    parts.push_back(neg(exists(xs, conj(big_and(inside), complete_base(spec, xs, n)))));
  }
  return big_and(parts);
}

Formula FormulaBuilder::stable(const ExtensionSpec& spec, const Terms& t, std::size_t n) {
  Term z = var('z');
  Term x = var('x');
  std::vector<Formula> outside{pd({z})};
  for (const auto& tj : t) outside.push_back(neq(z, tj));
  Formula hit = Formula::exists(x.name, conj(one_of(x, t), pa(x, z)));
  return conj(complete_base(spec, t, n), Formula::forall(z.name, impl(big_and(outside), hit)));
}

Formula FormulaBuilder::extension(const ExtensionSpec& spec, const Terms& t, std::size_t n) {
  check_n(t.size(), n);
  switch (spec.mu) {
    case Mu::admissible:
      return spec.sigma == Sigma::simple ? adm(t) : wadm(t, n);
    case Mu::complete:
      return complete_base(spec, t, n);
    case Mu::preferred:
      return preferred(spec, t, n);
    case Mu::grounded:
      return grounded(spec, t, n);
    case Mu::stable:
      return stable(spec, t, n);
  }
  return Formula::bottom();
}

Formula FormulaBuilder::item(int index, const Terms& t, std::size_t n) { return extension(item_spec(index), t, n); }

Formula FormulaBuilder::distinct(std::size_t k1, const Terms& t) {
  if (k1 > t.size()) throw ArityMismatch("first block longer than the argument list");
  std::size_t k2 = t.size() - k1;
  if (k1 == 0 && k2 == 0) return Formula::bottom();
  if (k1 == 0 || k2 == 0) return pd(t);
  Terms first = slice(t, 0, k1);
  Terms second = slice(t, k1, t.size());
  Term w1 = var('w');
  auto escapes = [&](const Terms& from, const Terms& other) {
    Term w2 = var('w');
    Formula nowhere = Formula::forall(w2.name, impl(conj(pd({w2}), one_of(w2, other)), neq(w1, w2)));
    return conj(one_of(w1, from), nowhere);
  };
  Formula witness = Formula::exists(w1.name, conj(pd({w1}), disj(escapes(first, second), escapes(second, first))));
  return conj(conj(pd(first), pd(second)), witness);
}

Formula FormulaBuilder::cmps(const std::vector<std::size_t>& ks, const Terms& t, std::size_t n) {
  std::size_t total = std::accumulate(ks.begin(), ks.end(), std::size_t{0});
  if (total != t.size()) throw ArityMismatch("block sizes sum to " + std::to_string(total) + ", got " + std::to_string(t.size()) + " terms");
  if (n > max_n_) throw BoundExceeded("N = " + std::to_string(n) + " exceeds the limit " + std::to_string(max_n_));
  std::vector<Terms> blocks;
  std::size_t at = 0;
  for (auto k : ks) {
    check_n(k, n);
    blocks.push_back(slice(t, at, at + k));
    at += k;
  }
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) parts.push_back(distinct(ks[i], concat(blocks[i], blocks[j])));
  }
  for (const auto& b : blocks) parts.push_back(cmp(CmpVariant::wide_defence, b, n));
  for (std::size_t j = 0; j <= n; ++j) {
    Terms vs;
    for (std::size_t i = 0; i < j; ++i) vs.push_back(var('v'));
    std::vector<Formula> equal_to_some;
    for (const auto& b : blocks) equal_to_some.push_back(neg(distinct(j, concat(vs, b))));
    parts.push_back(forall(vs, impl(cmp(CmpVariant::wide_defence, vs, n), big_or(equal_to_some))));
  }
  return big_and(parts);
}

// ---------------------------------------------------------------------------

Formula f_k_cf(std::size_t k, const std::vector<std::string>& consts) {
  expect_size(consts, k, "k-CF");
  return FormulaBuilder().cf(to_terms(consts));
}

Formula f_kl_cl(std::size_t k, std::size_t l, const std::vector<std::string>& consts) {
  expect_size(consts, l, "kl-CL");
  return FormulaBuilder().cl(k, to_terms(consts));
}

Formula f_kn_wcf(std::size_t k, std::size_t n, const std::vector<std::string>& consts) {
  expect_size(consts, k, "kN-WCF");
  expect_bound(k, n, "kN-WCF");
  return FormulaBuilder().wcf(to_terms(consts), n);
}

Formula f_k_df(std::size_t k, const std::string& c, const std::vector<std::string>& consts) {
  expect_size(consts, k, "k-DF");
  return FormulaBuilder().df(Term::constant(c), to_terms(consts));
}

Formula f_kn_wdf(std::size_t k, std::size_t n, const std::string& c, const std::vector<std::string>& consts) {
  expect_size(consts, k, "kN-WDF");
  expect_bound(k, n, "kN-WDF");
  return FormulaBuilder().wdf(Term::constant(c), to_terms(consts), n);
}

Formula f_adm(Sigma sigma, std::size_t k, std::size_t n, const std::vector<std::string>& consts) {
  expect_size(consts, k, "admissibility");
  if (sigma == Sigma::wide) expect_bound(k, n, "admissibility");
  return FormulaBuilder().extension({sigma, Tau::defence, Mu::admissible}, to_terms(consts), n);
}

Formula f_cmp(CmpVariant v, std::size_t k, std::size_t n, const std::vector<std::string>& consts) {
  expect_size(consts, k, "completeness");
  if (v == CmpVariant::wide_defence) expect_bound(k, n, "completeness");
  return FormulaBuilder().cmp(v, to_terms(consts), n);
}

Formula f_extension(int item, std::size_t k, std::size_t n, const std::vector<std::string>& consts) {
  expect_size(consts, k, "extension");
  expect_bound(k, n, "extension");
  return FormulaBuilder().item(item, to_terms(consts), n);
}

Formula f_distinct(std::size_t k1, std::size_t k2, const std::vector<std::string>& consts) {
  expect_size(consts, k1 + k2, "DISTINCT");
  return FormulaBuilder().distinct(k1, to_terms(consts));
}

Formula f_cmps(const std::vector<std::size_t>& ks, std::size_t n, const std::vector<std::string>& consts) {
  for (std::size_t k : ks) expect_bound(k, n, "CMPS");
  return FormulaBuilder().cmps(ks, to_terms(consts), n);
}

}  // namespace dgsem
