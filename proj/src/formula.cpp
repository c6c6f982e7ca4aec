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

#include "dgsem/formula.hpp"

#include <algorithm>
#include <unordered_map>

#include "dgsem/graph_json.hpp"

namespace dgsem {

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.name <=> b.name; c != 0) return c;
  return std::lexicographical_compare_three_way(a.args.begin(), a.args.end(), b.args.begin(), b.args.end());
}

std::size_t degree_of(const TypedDiscussionGraph& g) {
  std::set<std::size_t> seen;
  auto note = [&](const TypedItem& item) {
    if (const auto* p = std::get_if<Placeholder>(&item)) seen.insert(p->index);
  };
  for (const auto& [node, anno] : g.nodes()) {
    note(node);
    for (const auto& a : anno) note(a);
  }
  for (const auto& [edge, anno] : g.edges()) {
    for (const auto& a : anno) note(a);
  }
  if (seen.empty()) return 0;
  std::size_t n = *seen.rbegin();
  for (std::size_t j = 1; j <= n; ++j) {
    if (!seen.contains(j)) throw DegreeGapError("placeholder *" + std::to_string(j) + " is missing below *" + std::to_string(n));
  }
  return n;
}

// ---------------------------------------------------------------------------

Formula Formula::make(Node node) { return Formula(std::make_shared<const Node>(std::move(node))); }

Formula Formula::top() {
  static const Formula f = make({FormulaKind::top, {}, {}, {}, {}});
  return f;
}

Formula Formula::bottom() {
  static const Formula f = make({FormulaKind::bottom, {}, {}, {}, {}});
  return f;
}

Formula Formula::atom(std::string predicate, std::vector<Term> args) {
  if (predicate.empty()) throw Error("predicate name must not be empty");
  return make({FormulaKind::atom, std::move(predicate), nullptr, std::move(args), {}});
}

Formula Formula::graph_atom(TypedDiscussionGraph literal, std::vector<Term> args) {
  std::size_t n = degree_of(literal);
  if (n != args.size()) {
    throw ArityMismatch("graph literal of degree " + std::to_string(n) + " applied to " + std::to_string(args.size()) +
                        " arguments");
  }
  return make({FormulaKind::atom, {}, std::make_shared<const TypedDiscussionGraph>(std::move(literal)), std::move(args), {}});
}

Formula Formula::equal(Term lhs, Term rhs) {
  return make({FormulaKind::equal, {}, nullptr, {std::move(lhs), std::move(rhs)}, {}});
}

Formula Formula::negation(Formula f) { return make({FormulaKind::negation, {}, nullptr, {}, {std::move(f)}}); }

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return make({FormulaKind::conjunction, {}, nullptr, {}, {std::move(lhs), std::move(rhs)}});
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return make({FormulaKind::disjunction, {}, nullptr, {}, {std::move(lhs), std::move(rhs)}});
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return make({FormulaKind::implication, {}, nullptr, {}, {std::move(lhs), std::move(rhs)}});
}

Formula Formula::forall(std::string var, Formula body) {
  return make({FormulaKind::forall, std::move(var), nullptr, {}, {std::move(body)}});
}

Formula Formula::exists(std::string var, Formula body) {
  return make({FormulaKind::exists, std::move(var), nullptr, {}, {std::move(body)}});
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.name != y.name || x.terms != y.terms || x.children != y.children) return false;
  if (x.literal == y.literal) return true;
  if (!x.literal || !y.literal) return false;
  return *x.literal == *y.literal;
}

Formula big_and(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::top();
  Formula out = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) out = Formula::conjunction(out, fs[i]);
  return out;
}

Formula big_or(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::bottom();
  Formula out = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) out = Formula::disjunction(out, fs[i]);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.is_variable()) {
    out.insert(t.name);
    return;
  }
  for (const auto& a : t.args) collect_vars(a, out);
}

void collect_vars(const TypedDiscussionGraph& g, std::set<std::string>& out) {
  auto visit = [&](const TypedItem& item) {
    if (const auto* t = std::get_if<Term>(&item)) collect_vars(*t, out);
  };
  for (const auto& [node, anno] : g.nodes()) {
    visit(node);
    for (const auto& a : anno) visit(a);
  }
  for (const auto& [edge, anno] : g.edges()) {
    for (const auto& a : anno) visit(a);
  }
}

// Free variables are memoized per shared node; generated formulas reuse
// subtrees heavily.
using VarCache = std::unordered_map<const void*, std::set<std::string>>;

const std::set<std::string>& free_vars_cached(const Formula& f, VarCache& cache) {
  if (auto it = cache.find(f.id()); it != cache.end()) return it->second;
  std::set<std::string> out;
  switch (f.kind()) {
    case FormulaKind::atom:
      for (const auto& a : f.args()) collect_vars(a, out);
      if (f.literal() != nullptr) collect_vars(*f.literal(), out);
      break;
    case FormulaKind::equal:
      collect_vars(f.lhs_term(), out);
      collect_vars(f.rhs_term(), out);
      break;
    case FormulaKind::top:
    case FormulaKind::bottom:
      break;
    case FormulaKind::negation:
    case FormulaKind::conjunction:
    case FormulaKind::disjunction:
    case FormulaKind::implication:
      for (std::size_t i = 0; i < f.child_count(); ++i) {
        const auto& sub = free_vars_cached(f.child(i), cache);
        out.insert(sub.begin(), sub.end());
      }
      break;
    case FormulaKind::forall:
    case FormulaKind::exists:
      out = free_vars_cached(f.child(0), cache);
      out.erase(f.var());
      break;
  }
  return cache.emplace(f.id(), std::move(out)).first->second;
}

template <class Visit>
void visit_unique(const Formula& f, std::unordered_map<const void*, bool>& seen, Visit& visit) {
  if (!seen.emplace(f.id(), true).second) return;
  visit(f);
  for (std::size_t i = 0; i < f.child_count(); ++i) visit_unique(f.child(i), seen, visit);
}

void collect_functions(const Term& t, std::set<SymbolRef>& out) {
  if (t.is_variable()) return;
  out.insert({t.name, t.args.size()});
  for (const auto& a : t.args) collect_functions(a, out);
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  collect_vars(t, out);
  return out;
}

std::set<std::string> free_vars(const Formula& f) {
  VarCache cache;
  return free_vars_cached(f, cache);
}

bool is_well_formed(const Formula& f) { return free_vars(f).empty(); }

std::set<SymbolRef> predicate_symbols(const Formula& f) {
  std::set<SymbolRef> out;
  std::unordered_map<const void*, bool> seen;
  auto visit = [&](const Formula& g) {
    if (g.kind() == FormulaKind::atom && g.literal() == nullptr) out.insert(g.symbol());
  };
  visit_unique(f, seen, visit);
  return out;
}

std::set<SymbolRef> function_symbols(const Formula& f) {
  std::set<SymbolRef> out;
  std::unordered_map<const void*, bool> seen;
  auto visit = [&](const Formula& g) {
    if (g.kind() != FormulaKind::atom && g.kind() != FormulaKind::equal) return;
    for (const auto& t : g.args()) collect_functions(t, out);
    if (const auto* lit = g.literal()) {
      auto item = [&](const TypedItem& i) {
        if (const auto* t = std::get_if<Term>(&i)) collect_functions(*t, out);
      };
      for (const auto& [node, anno] : lit->nodes()) {
        item(node);
        for (const auto& a : anno) item(a);
      }
      for (const auto& [edge, anno] : lit->edges()) {
        for (const auto& a : anno) item(a);
      }
    }
  };
  visit_unique(f, seen, visit);
  return out;
}

std::size_t formula_size(const Formula& f) {
  std::unordered_map<const void*, std::size_t> memo;
  auto size = [&](auto& self, const Formula& g) -> std::size_t {
    if (auto it = memo.find(g.id()); it != memo.end()) return it->second;
    std::size_t n = 1;
    for (std::size_t i = 0; i < g.child_count(); ++i) n += self(self, g.child(i));
    memo.emplace(g.id(), n);
    return n;
  };
  return size(size, f);
}

// ---------------------------------------------------------------------------
// Printing. Levels, weakest first: implication, quantifier, binary, unary.

namespace {

enum Level { kImpl = 0, kQuant = 1, kBin = 2, kUnary = 3 };

void print_term(const Term& t, std::string& out) {
  out += t.name;
  if (t.is_variable() || t.args.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (i > 0) out += ", ";
    print_term(t.args[i], out);
  }
  out += ')';
}

void print_args(const std::vector<Term>& args, std::string& out) {
  out += '(';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += ", ";
    print_term(args[i], out);
  }
  out += ')';
}

std::string literal_text(const TypedDiscussionGraph& g) {
  auto list = [](const std::set<TypedItem>& annos) {
    json out = json::array();
    for (const auto& a : annos) out.push_back(to_text(a));
    return out;
  };
  json nodes = json::array();
  for (const auto& [node, anno] : g.nodes()) nodes.push_back({{"id", to_text(node)}, {"anno", list(anno)}});
  json edges = json::array();
  for (const auto& [edge, anno] : g.edges()) {
    edges.push_back({{"from", to_text(edge.first)}, {"to", to_text(edge.second)}, {"anno", list(anno)}});
  }
  return json{{"nodes", nodes}, {"edges", edges}}.dump();
}

void print(const Formula& f, Level ctx, std::string& out) {
  auto open = [&](Level own) {
    if (ctx > own) out += '(';
  };
  auto close = [&](Level own) {
    if (ctx > own) out += ')';
  };
  switch (f.kind()) {
    case FormulaKind::top:
      out += "true";
      return;
    case FormulaKind::bottom:
      out += "false";
      return;
    case FormulaKind::atom:
      if (const auto* lit = f.literal()) {
        out += literal_text(*lit);
        if (!f.args().empty()) print_args(f.args(), out);
      } else {
        out += f.predicate();
        if (!f.args().empty()) print_args(f.args(), out);
      }
      return;
    case FormulaKind::equal:
      print_term(f.lhs_term(), out);
      out += " = ";
      print_term(f.rhs_term(), out);
      return;
    case FormulaKind::negation:
      out += '~';
      print(f.child(0), kUnary, out);
      return;
    case FormulaKind::conjunction:
    case FormulaKind::disjunction:
      open(kBin);
      print(f.child(0), kBin, out);
      out += f.kind() == FormulaKind::conjunction ? " & " : " | ";
      print(f.child(1), kUnary, out);
      close(kBin);
      return;
    case FormulaKind::implication:
      open(kImpl);
      print(f.child(0), kQuant, out);
      out += " -> ";
      print(f.child(1), kImpl, out);
      close(kImpl);
      return;
    case FormulaKind::forall:
    case FormulaKind::exists:
      open(kQuant);
      out += f.kind() == FormulaKind::forall ? "forall " : "exists ";
      out += f.var();
      out += ". ";
      print(f.child(0), kQuant, out);
      close(kQuant);
      return;
  }
}

}  // namespace

std::string to_text(const Term& t) {
  std::string out;
  print_term(t, out);
  return out;
}

std::string to_text(const TypedItem& item) {
  if (const auto* p = std::get_if<Placeholder>(&item)) return "*" + std::to_string(p->index);
  return to_text(std::get<Term>(item));
}

std::string to_text(const Formula& f) {
  std::string out;
  print(f, kImpl, out);
  return out;
}

}  // namespace dgsem
