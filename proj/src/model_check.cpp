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

#include "dgsem/model_check.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <unordered_map>

namespace dgsem {

Model::Model(AnnotatedGraph graph)
    : graph_(std::move(graph)), domain_(domain_of(graph_)), index_(graph_, domain_) {}

namespace {

std::string check_in_domain(const Model& m, const std::string& value, const std::string& what) {
  if (!m.contains(value)) throw DomainError(what + " denotes '" + value + "', which is not in the domain");
  return value;
}

}  // namespace

std::string eval_term(const Model& m, const Interpretation& interp, const Assignment& assign, const Term& t) {
  if (t.is_variable()) {
    auto it = assign.find(t.name);
    if (it == assign.end()) throw UnboundVariable("variable '" + t.name + "' is not assigned");
    return check_in_domain(m, it->second, "variable '" + t.name + "'");
  }
  if (t.args.empty()) {
    const std::string* value = interp.constant(t.name);
    if (value == nullptr) throw UnknownSymbol("constant '" + t.name + "' is not interpreted");
    return check_in_domain(m, *value, "constant '" + t.name + "'");
  }
  const FunctionTable* table = interp.function(t.name, t.args.size());
  if (table == nullptr) {
    throw UnknownSymbol("function " + t.name + "/" + std::to_string(t.args.size()) + " is not interpreted");
  }
  std::vector<std::string> args;
  for (const auto& a : t.args) args.push_back(eval_term(m, interp, assign, a));
  auto it = table->find(args);
  if (it == table->end()) throw TableMiss("no table entry for " + to_text(t));
  return check_in_domain(m, it->second, "function '" + t.name + "'");
}

namespace {

struct CTerm {
  enum class Kind : std::uint8_t { slot, value, apply };
  Kind kind = Kind::value;
  std::uint32_t ref = 0;
  std::vector<CTerm> args;
  std::string name;
};

struct CTable {
  std::string name;
  std::map<std::vector<std::uint32_t>, std::uint32_t> rows;
};

struct CNode {
  FormulaKind kind;
  std::uint32_t kids[2] = {0, 0};
  std::uint32_t skeleton = 0;
  std::vector<CTerm> terms;
  std::uint32_t slot = 0;
  std::vector<std::uint32_t> free_slots;
  bool memo_ok = false;
  std::unordered_map<std::uint64_t, bool> memo;
};

class Checker {
 public:
  Checker(const Model& m, const Interpretation& interp, const Assignment& assign, const Formula& f, EvalOptions options)
      : model_(m), interp_(interp), options_(options), domain_size_(static_cast<std::uint32_t>(m.domain().size())) {
    bits_ = std::max<unsigned>(1, static_cast<unsigned>(std::bit_width(domain_size_)));
    for (const auto& name : free_vars(f)) {
      auto it = assign.find(name);
      if (it == assign.end()) throw UnboundVariable("variable '" + name + "' is not assigned");
      std::uint32_t slot = new_slot();
      env_[slot] = intern(it->second, "variable '" + name + "'");
      scope_[name].push_back(slot);
    }
    root_ = compile(f);
  }

  bool run() { return full(root_); }

  std::optional<Witness> witness() {
    std::vector<std::uint32_t> prefix;
    std::uint32_t n = root_;
    while (nodes_[n].kind == FormulaKind::exists) {
      prefix.push_back(n);
      n = nodes_[n].kids[0];
    }
    if (!search(prefix, 0, n)) return std::nullopt;
    Witness w;
    for (std::uint32_t q : prefix) {
      w.vars.push_back(slot_names_[nodes_[q].slot]);
      w.values.push_back(model_.domain()[env_[nodes_[q].slot]]);
    }
    return w;
  }

 private:
  std::uint32_t new_slot(const std::string& name = {}) {
    env_.push_back(kUnbound);
    slot_names_.push_back(name);
    return static_cast<std::uint32_t>(env_.size() - 1);
  }

  std::uint32_t intern(const std::string& value, const std::string& what) {
    std::uint32_t id = model_.index().find(value);
    if (id == kAbsent) throw DomainError(what + " denotes '" + value + "', which is not in the domain");
    return id;
  }

  CTerm compile_term(const Term& t, std::vector<std::uint32_t>& used) {
    CTerm out;
    out.name = t.name;
    if (t.is_variable()) {
      auto it = scope_.find(t.name);
      if (it == scope_.end() || it->second.empty()) throw UnboundVariable("variable '" + t.name + "' is not assigned");
      out.kind = CTerm::Kind::slot;
      out.ref = it->second.back();
      used.push_back(out.ref);
      return out;
    }
    if (t.args.empty()) {
      const std::string* value = interp_.constant(t.name);
      if (value == nullptr) throw UnknownSymbol("constant '" + t.name + "' is not interpreted");
      out.kind = CTerm::Kind::value;
      out.ref = intern(*value, "constant '" + t.name + "'");
      return out;
    }
    out.kind = CTerm::Kind::apply;
    out.ref = table_for(t.name, t.args.size());
    for (const auto& a : t.args) out.args.push_back(compile_term(a, used));
    return out;
  }

  std::uint32_t table_for(const std::string& name, std::size_t arity) {
    SymbolRef key{name, arity};
    if (auto it = table_ids_.find(key); it != table_ids_.end()) return it->second;
    const FunctionTable* table = interp_.function(name, arity);
    if (table == nullptr) throw UnknownSymbol("function " + name + "/" + std::to_string(arity) + " is not interpreted");
    CTable ct{name, {}};
    for (const auto& [args, value] : *table) {
      std::uint32_t v = intern(value, "function '" + name + "'");
      std::vector<std::uint32_t> key_ids;
      bool reachable = true;
      for (const auto& a : args) {
        std::uint32_t id = model_.index().find(a);
        if (id == kAbsent) reachable = false;
        key_ids.push_back(id);
      }
      if (reachable) ct.rows.emplace(std::move(key_ids), v);
    }
    tables_.push_back(std::move(ct));
    auto id = static_cast<std::uint32_t>(tables_.size() - 1);
    table_ids_.emplace(key, id);
    return id;
  }

  std::uint32_t skeleton_for(const SymbolRef& sym) {
    if (auto it = skeleton_ids_.find(sym); it != skeleton_ids_.end()) return it->second;
    const SkeletonGraph* s = interp_.predicate(sym.name, sym.arity);
    if (s == nullptr) throw UnknownSymbol("predicate " + sym.name + "/" + std::to_string(sym.arity) + " is not interpreted");
    skeletons_.emplace_back(*s, model_.index());
    auto id = static_cast<std::uint32_t>(skeletons_.size() - 1);
    skeleton_ids_.emplace(sym, id);
    return id;
  }

  // A graph literal becomes a skeleton whose terms are extra placeholders
  // numbered after the literal's degree; their values are appended to the
  // atom's arguments at evaluation time.
  void compile_literal(const TypedDiscussionGraph& lit, CNode& node, std::vector<std::uint32_t>& used) {
    std::size_t degree = degree_of(lit);
    std::map<Term, std::size_t> extra;
    std::vector<const Term*> order;
    auto item = [&](const TypedItem& i) -> SkelItem {
      if (const auto* p = std::get_if<Placeholder>(&i)) return *p;
      const Term& t = std::get<Term>(i);
      auto [it, fresh] = extra.emplace(t, degree + extra.size() + 1);
      if (fresh) order.push_back(&it->first);
      return Placeholder{it->second};
    };
    SkeletonGraph s;
    for (const auto& [n, anno] : lit.nodes()) {
      std::set<SkelItem> a;
      for (const auto& x : anno) a.insert(item(x));
      s.add_node(item(n), a);
    }
    for (const auto& [e, anno] : lit.edges()) {
      std::set<SkelItem> a;
      for (const auto& x : anno) a.insert(item(x));
      s.add_edge(item(e.first), item(e.second), a);
    }
    skeletons_.emplace_back(s, model_.index());
    node.skeleton = static_cast<std::uint32_t>(skeletons_.size() - 1);
    for (const Term* t : order) node.terms.push_back(compile_term(*t, used));
  }

  std::uint32_t compile(const Formula& f) {
    std::vector<std::uint32_t> used;
    return compile(f, used);
  }

  // `used` receives the free slots of f.
  std::uint32_t compile(const Formula& f, std::vector<std::uint32_t>& used) {
    CNode node;
    node.kind = f.kind();
    std::vector<std::uint32_t> mine;
    switch (f.kind()) {
      case FormulaKind::atom:
        for (const auto& a : f.args()) node.terms.push_back(compile_term(a, mine));
        if (const auto* lit = f.literal()) {
          compile_literal(*lit, node, mine);
        } else {
          node.skeleton = skeleton_for(f.symbol());
        }
        break;
      case FormulaKind::equal:
        node.terms.push_back(compile_term(f.lhs_term(), mine));
        node.terms.push_back(compile_term(f.rhs_term(), mine));
        break;
      case FormulaKind::top:
      case FormulaKind::bottom:
        break;
      case FormulaKind::negation:
        node.kids[0] = compile(f.child(0), mine);
        break;
      case FormulaKind::conjunction:
      case FormulaKind::disjunction:
      case FormulaKind::implication:
        node.kids[0] = compile(f.child(0), mine);
        node.kids[1] = compile(f.child(1), mine);
        break;
      case FormulaKind::forall:
      case FormulaKind::exists: {
        node.slot = new_slot(f.var());
        scope_[f.var()].push_back(node.slot);
        std::vector<std::uint32_t> body;
        node.kids[0] = compile(f.child(0), body);
        scope_[f.var()].pop_back();
        std::sort(body.begin(), body.end());
        body.erase(std::unique(body.begin(), body.end()), body.end());
        std::erase(body, node.slot);
        node.free_slots = body;
        node.memo_ok = options_.memoize && body.size() * bits_ <= 64;
        mine.insert(mine.end(), body.begin(), body.end());
        break;
      }
    }
    std::sort(mine.begin(), mine.end());
    mine.erase(std::unique(mine.begin(), mine.end()), mine.end());
    used.insert(used.end(), mine.begin(), mine.end());
    nodes_.push_back(std::move(node));
    return static_cast<std::uint32_t>(nodes_.size() - 1);
  }

  // --- evaluation -----------------------------------------------------------

  std::uint32_t term_full(const CTerm& t) {
    switch (t.kind) {
      case CTerm::Kind::value:
        return t.ref;
      case CTerm::Kind::slot: {
        std::uint32_t v = env_[t.ref];
        if (v == kUnbound) throw UnboundVariable("variable '" + t.name + "' is not assigned");
        return v;
      }
      case CTerm::Kind::apply: {
        std::vector<std::uint32_t> args;
        args.reserve(t.args.size());
        for (const auto& a : t.args) args.push_back(term_full(a));
        const auto& rows = tables_[t.ref].rows;
        auto it = rows.find(args);
        if (it == rows.end()) throw TableMiss("no table entry for function '" + t.name + "'");
        return it->second;
      }
    }
    return kUnbound;
  }

  std::uint32_t term_partial(const CTerm& t) {
    switch (t.kind) {
      case CTerm::Kind::value:
        return t.ref;
      case CTerm::Kind::slot:
        return env_[t.ref];
      case CTerm::Kind::apply: {
        std::vector<std::uint32_t> args;
        for (const auto& a : t.args) {
          std::uint32_t v = term_partial(a);
          if (v == kUnbound) return kUnbound;
          args.push_back(v);
        }
        const auto& rows = tables_[t.ref].rows;
        auto it = rows.find(args);
        return it == rows.end() ? kUnbound : it->second;
      }
    }
    return kUnbound;
  }

  bool memo_key(const CNode& n, std::uint64_t& key) const {
    key = 0;
    for (std::uint32_t s : n.free_slots) {
      std::uint32_t v = env_[s];
      if (v == kUnbound) return false;
      key = (key << bits_) | v;
    }
    return true;
  }

  bool full(std::uint32_t i) {
    CNode& n = nodes_[i];
    switch (n.kind) {
      case FormulaKind::atom: {
        std::array<std::uint32_t, 16> small{};
        std::vector<std::uint32_t> large;
        std::uint32_t* vals = small.data();
        if (n.terms.size() > small.size()) {
          large.resize(n.terms.size());
          vals = large.data();
        }
        for (std::size_t k = 0; k < n.terms.size(); ++k) vals[k] = term_full(n.terms[k]);
        return skeletons_[n.skeleton].check({vals, n.terms.size()}) == Tri::yes;
      }
      case FormulaKind::equal:
        return term_full(n.terms[0]) == term_full(n.terms[1]);
      case FormulaKind::top:
        return true;
      case FormulaKind::bottom:
        return false;
      case FormulaKind::negation:
        return !full(n.kids[0]);
      case FormulaKind::conjunction:
        return full(n.kids[0]) && full(n.kids[1]);
      case FormulaKind::disjunction:
        return full(n.kids[0]) || full(n.kids[1]);
      case FormulaKind::implication:
        return !full(n.kids[0]) || full(n.kids[1]);
      case FormulaKind::forall:
      case FormulaKind::exists:
        return quantifier(i);
    }
    return false;
  }

  bool quantifier(std::uint32_t i) {
    const bool universal = nodes_[i].kind == FormulaKind::forall;
    if (domain_size_ == 0) return universal;
    std::uint64_t key = 0;
    bool keyed = nodes_[i].memo_ok && memo_key(nodes_[i], key);
    if (keyed) {
      auto it = nodes_[i].memo.find(key);
      if (it != nodes_[i].memo.end()) return it->second;
    }
    const std::uint32_t slot = nodes_[i].slot;
    const std::uint32_t body = nodes_[i].kids[0];
    bool result = universal;
    env_[slot] = kUnbound;
    Tri early = options_.prune ? partial(body) : Tri::unknown;
    if (early != Tri::unknown) {
      result = early == Tri::yes;
    } else {
      for (std::uint32_t d = 0; d < domain_size_; ++d) {
        env_[slot] = d;
        if (full(body) != universal) {
          result = !universal;
          break;
        }
      }
    }
    env_[slot] = kUnbound;
    if (keyed) nodes_[i].memo.emplace(key, result);
    return result;
  }

  Tri partial(std::uint32_t i) {
    CNode& n = nodes_[i];
    switch (n.kind) {
      case FormulaKind::atom: {
        std::array<std::uint32_t, 16> small{};
        std::vector<std::uint32_t> large;
        std::uint32_t* vals = small.data();
        if (n.terms.size() > small.size()) {
          large.resize(n.terms.size());
          vals = large.data();
        }
        for (std::size_t k = 0; k < n.terms.size(); ++k) vals[k] = term_partial(n.terms[k]);
        return skeletons_[n.skeleton].check({vals, n.terms.size()});
      }
      case FormulaKind::equal: {
        std::uint32_t a = term_partial(n.terms[0]);
        std::uint32_t b = term_partial(n.terms[1]);
        if (a == kUnbound || b == kUnbound) return Tri::unknown;
        return a == b ? Tri::yes : Tri::no;
      }
      case FormulaKind::top:
        return Tri::yes;
      case FormulaKind::bottom:
        return Tri::no;
      case FormulaKind::negation: {
        Tri r = partial(n.kids[0]);
        return r == Tri::unknown ? r : (r == Tri::yes ? Tri::no : Tri::yes);
      }
      case FormulaKind::conjunction: {
        Tri a = partial(n.kids[0]);
        if (a == Tri::no) return Tri::no;
        Tri b = partial(n.kids[1]);
        if (b == Tri::no) return Tri::no;
        return a == Tri::yes && b == Tri::yes ? Tri::yes : Tri::unknown;
      }
      case FormulaKind::disjunction: {
        Tri a = partial(n.kids[0]);
        if (a == Tri::yes) return Tri::yes;
        Tri b = partial(n.kids[1]);
        if (b == Tri::yes) return Tri::yes;
        return a == Tri::no && b == Tri::no ? Tri::no : Tri::unknown;
      }
      case FormulaKind::implication: {
        Tri a = partial(n.kids[0]);
        if (a == Tri::no) return Tri::yes;
        Tri b = partial(n.kids[1]);
        if (b == Tri::yes) return Tri::yes;
        return a == Tri::yes && b == Tri::no ? Tri::no : Tri::unknown;
      }
      case FormulaKind::forall:
      case FormulaKind::exists: {
        if (domain_size_ == 0) return n.kind == FormulaKind::forall ? Tri::yes : Tri::no;
        std::uint64_t key = 0;
        if (n.memo_ok && memo_key(n, key)) {
          auto it = n.memo.find(key);
          if (it != n.memo.end()) return it->second ? Tri::yes : Tri::no;
        }
        std::uint32_t slot = n.slot;
        std::uint32_t saved = env_[slot];
        env_[slot] = kUnbound;
        Tri r = partial(n.kids[0]);
        env_[slot] = saved;
        return r;
      }
    }
    return Tri::unknown;
  }

  bool search(const std::vector<std::uint32_t>& prefix, std::size_t depth, std::uint32_t body) {
    if (depth == prefix.size()) return full(body);
    const std::uint32_t slot = nodes_[prefix[depth]].slot;
    for (std::uint32_t d = 0; d < domain_size_; ++d) {
      env_[slot] = d;
      if (options_.prune && depth + 1 < prefix.size() && partial(prefix[depth + 1]) == Tri::no) continue;
      if (search(prefix, depth + 1, body)) return true;
    }
    env_[slot] = kUnbound;
    return false;
  }

  const Model& model_;
  const Interpretation& interp_;
  EvalOptions options_;
  std::uint32_t domain_size_;
  unsigned bits_ = 1;
  std::vector<std::uint32_t> env_;
  std::vector<std::string> slot_names_;
  std::map<std::string, std::vector<std::uint32_t>> scope_;
  std::vector<CNode> nodes_;
  std::vector<CompiledSkeleton> skeletons_;
  std::map<SymbolRef, std::uint32_t> skeleton_ids_;
  std::vector<CTable> tables_;
  std::map<SymbolRef, std::uint32_t> table_ids_;
  std::uint32_t root_ = 0;
};

}  // namespace

bool satisfies(const Model& m, const Interpretation& interp, const Assignment& assign, const Formula& f,
               EvalOptions options) {
  return Checker(m, interp, assign, f, options).run();
}

bool satisfies_closed(const Model& m, const Interpretation& interp, const Formula& f, EvalOptions options) {
  auto fv = free_vars(f);
  if (!fv.empty()) throw NotClosedError("formula has free variable '" + *fv.begin() + "'");
  return Checker(m, interp, {}, f, options).run();
}

std::optional<Witness> find_witness(const Model& m, const Interpretation& interp, const Assignment& assign,
                                    const Formula& f, EvalOptions options) {
  return Checker(m, interp, assign, f, options).witness();
}

}  // namespace dgsem
