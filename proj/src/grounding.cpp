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

#include "dgsem/grounding.hpp"

#include <array>
#include <bit>
#include <functional>
#include <span>
#include <optional>
#include <unordered_map>

#include "dgsem/errors.hpp"

namespace dgsem {

using Ref = PropArena::Ref;

PropArena::PropArena() {
  nodes_.push_back({PropKind::top, 0, 0});
  nodes_.push_back({PropKind::bottom, 0, 0});
}

Ref PropArena::intern(PropKind kind, Ref a, Ref b) {
  if (nodes_.size() >= (Ref{1} << 29)) throw BoundExceeded("propositional formula has too many nodes");
  std::uint64_t key = (std::uint64_t{static_cast<std::uint8_t>(kind)} << 58) | (std::uint64_t{a} << 29) | b;
  auto [it, inserted] = table_.try_emplace(key, static_cast<Ref>(nodes_.size()));
  if (inserted) nodes_.push_back({kind, a, b});
  return it->second;
}

Ref PropArena::var(const std::string& name) {
  auto [it, inserted] = var_ids_.try_emplace(name, static_cast<Ref>(vars_.size()));
  if (inserted) vars_.push_back(name);
  return intern(PropKind::var, it->second, 0);
}

Ref PropArena::negation(Ref a) {
  if (a == top()) return bottom();
  if (a == bottom()) return top();
  return intern(PropKind::negation, a, 0);
}

Ref PropArena::conjunction(Ref a, Ref b) {
  if (a == bottom() || b == bottom()) return bottom();
  if (a == top()) return b;
  if (b == top()) return a;
  return intern(PropKind::conjunction, a, b);
}

Ref PropArena::disjunction(Ref a, Ref b) {
  if (a == top() || b == top()) return top();
  if (a == bottom()) return b;
  if (b == bottom()) return a;
  return intern(PropKind::disjunction, a, b);
}

Ref PropArena::implication(Ref a, Ref b) {
  if (a == bottom() || b == top()) return top();
  if (a == top()) return b;
  if (b == bottom()) return negation(a);
  return intern(PropKind::implication, a, b);
}

PropKind PropFormula::kind() const { return arena_->kind(root_); }

const std::string& PropFormula::var_name() const {
  if (kind() != PropKind::var) throw Error("not a propositional variable");
  return arena_->var_name(root_);
}

std::size_t PropFormula::child_count() const {
  switch (kind()) {
    case PropKind::negation:
      return 1;
    case PropKind::conjunction:
    case PropKind::disjunction:
    case PropKind::implication:
      return 2;
    default:
      return 0;
  }
}

PropFormula PropFormula::child(std::size_t i) const {
  if (i >= child_count()) throw Error("child index out of range");
  return {arena_, i == 0 ? arena_->lhs(root_) : arena_->rhs(root_)};
}

namespace {

/// Visits each node reachable from root once, children before parents.
void post_order(const PropArena& a, Ref root, const std::function<void(Ref)>& visit) {
  std::vector<bool> seen(a.node_count(), false);
  std::vector<std::pair<Ref, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [r, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      visit(r);
      continue;
    }
    if (seen[r]) continue;
    seen[r] = true;
    stack.push_back({r, true});
    switch (a.kind(r)) {
      case PropKind::conjunction:
      case PropKind::disjunction:
      case PropKind::implication:
        stack.push_back({a.rhs(r), false});
        [[fallthrough]];
      case PropKind::negation:
        stack.push_back({a.lhs(r), false});
        break;
      default:
        break;
    }
  }
}

}  // namespace

std::size_t PropFormula::size() const {
  std::size_t n = 0;
  post_order(*arena_, root_, [&](Ref) { ++n; });
  return n;
}

std::set<std::string> PropFormula::vars() const {
  std::set<std::string> out;
  post_order(*arena_, root_, [&](Ref r) {
    if (arena_->kind(r) == PropKind::var) out.insert(arena_->var_name(r));
  });
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool needs_escape(char c) { return c == '\\' || c == '/' || c == ',' || c == '(' || c == ')'; }

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (needs_escape(c)) out += '\\';
    out += c;
  }
  return out;
}

std::string args_suffix(const std::vector<std::string>& values) {
  std::string out = "/" + std::to_string(values.size()) + "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += escape(values[i]);
  }
  return out + ")";
}

struct DecodedAtom {
  std::optional<std::string> predicate;
  std::optional<SkeletonGraph> literal;
  std::vector<std::string> values;
};

DecodedAtom decode(const std::string& name) {
  auto fail = [&](const std::string& why) -> DecodeError { return DecodeError("cannot decode '" + name + "': " + why); };
  DecodedAtom out;
  std::size_t i = 0;
  if (!name.empty() && name[0] == '[') {
    int depth = 0;
    bool in_string = false;
    for (; i < name.size(); ++i) {
      char c = name[i];
      if (in_string) {
        if (c == '\\') ++i;
        else if (c == '"') in_string = false;
      } else if (c == '"') {
        in_string = true;
      } else if (c == '[' || c == '{') {
        ++depth;
      } else if (c == ']' || c == '}') {
        if (--depth == 0) break;
      }
    }
    if (i >= name.size()) throw fail("unterminated graph literal");
    try {
      out.literal = skeleton_from_json(json::parse(name.substr(1, i - 1)));
    } catch (const std::exception& e) {
      throw fail(e.what());
    }
    ++i;
  } else {
    std::string pred;
    for (; i < name.size() && name[i] != '/'; ++i) {
      if (name[i] == '\\' && i + 1 < name.size()) ++i;
      pred += name[i];
    }
    if (pred.empty()) throw fail("missing predicate name");
    out.predicate = pred;
  }
  if (i >= name.size() || name[i] != '/') throw fail("expected '/'");
  ++i;
  std::size_t start = i;
  while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) ++i;
  if (i == start || i >= name.size() || name[i] != '(') throw fail("expected arity and '('");
  std::size_t arity = std::stoul(name.substr(start, i - start));
  ++i;
  std::string current;
  bool closed = false;
  for (; i < name.size(); ++i) {
    char c = name[i];
    if (c == '\\' && i + 1 < name.size()) {
      current += name[++i];
    } else if (c == ',') {
      out.values.push_back(std::move(current));
      current.clear();
    } else if (c == ')') {
      closed = true;
      ++i;
      break;
    } else {
      current += c;
    }
  }
  if (!closed || i != name.size()) throw fail("expected ')' at the end");
  if (arity > 0) out.values.push_back(std::move(current));
  else if (!current.empty()) throw fail("arity 0 with arguments");
  if (out.values.size() != arity) throw fail("arity does not match the argument count");
  return out;
}

/// Cache keyed by a formula node and a tuple of domain indices. Tuples that
/// fit are packed into one word.
class TupleMemo {
 public:
  explicit TupleMemo(std::size_t domain_size)
      : bits_(std::max<unsigned>(1, static_cast<unsigned>(std::bit_width(domain_size)))) {}

  const Ref* find(const void* node, std::span<const std::uint32_t> values) const {
    if (packable(values)) {
      auto it = small_.find({node, pack(values)});
      return it == small_.end() ? nullptr : &it->second;
    }
    auto it = large_.find({node, {values.begin(), values.end()}});
    return it == large_.end() ? nullptr : &it->second;
  }

  void put(const void* node, std::span<const std::uint32_t> values, Ref r) {
    if (packable(values)) small_.emplace(std::make_pair(node, pack(values)), r);
    else large_.emplace(std::make_pair(node, std::vector<std::uint32_t>(values.begin(), values.end())), r);
  }

 private:
  struct Hash {
    std::size_t operator()(const std::pair<const void*, std::uint64_t>& k) const {
      return std::hash<const void*>()(k.first) * 1000003u ^ std::hash<std::uint64_t>()(k.second);
    }
    std::size_t operator()(const std::pair<const void*, std::vector<std::uint32_t>>& k) const {
      std::size_t h = std::hash<const void*>()(k.first);
      for (auto v : k.second) h = h * 1000003u ^ v;
      return h;
    }
  };

  bool packable(std::span<const std::uint32_t> values) const { return values.size() * bits_ <= 64; }

  std::uint64_t pack(std::span<const std::uint32_t> values) const {
    std::uint64_t out = 0;
    for (auto v : values) out = (out << bits_) | v;
    return out;
  }

  unsigned bits_;
  std::unordered_map<std::pair<const void*, std::uint64_t>, Ref, Hash> small_;
  std::unordered_map<std::pair<const void*, std::vector<std::uint32_t>>, Ref, Hash> large_;
};

/// Tuple of domain indices, on the stack when short.
class Values {
 public:
  void push_back(std::uint32_t v) {
    if (size_ < small_.size()) {
      small_[size_++] = v;
      return;
    }
    if (large_.empty()) large_.assign(small_.begin(), small_.end());
    large_.push_back(v);
    ++size_;
  }
  std::span<const std::uint32_t> span() const {
    return size_ <= small_.size() ? std::span<const std::uint32_t>(small_.data(), size_) : std::span<const std::uint32_t>(large_);
  }

 private:
  std::array<std::uint32_t, 16> small_{};
  std::vector<std::uint32_t> large_;
  std::size_t size_ = 0;
};

/// Expands quantifiers over domain indices. Atoms, their compiled skeletons
/// and quantified subformulas are cached by node and argument values.
class Grounder {
 public:
  Grounder(const Model& m, const Interpretation& interp, const GroundOptions& options)
      : m_(m), interp_(interp), options_(options), arena_(std::make_shared<PropArena>()) {}

  PropFormula run(const Formula& f) { return {arena_, go(f)}; }

 private:
  struct CArg {
    const Term* term;
    bool is_var;
    std::uint32_t var;
  };

  /// Per-node data derived once: bound variable id, free variable ids and,
  /// for atoms and equalities, compiled arguments.
  struct Info {
    std::uint32_t var = 0;
    std::vector<std::uint32_t> free;
    std::vector<CArg> args;
    const SkeletonGraph* skeleton = nullptr;
    std::optional<CompiledSkeleton> folded;
  };

  std::uint32_t var_id(const std::string& name) {
    auto [it, inserted] = var_ids_.try_emplace(name, static_cast<std::uint32_t>(env_.size()));
    if (inserted) env_.push_back(kUnbound);
    return it->second;
  }

  std::uint32_t value(const Term& t) {
    if (t.is_variable()) {
      std::uint32_t v = env_[var_id(t.name)];
      if (v == kUnbound) throw UnboundVariable("variable '" + t.name + "' is not assigned");
      return v;
    }
    if (t.args.empty()) {
      auto it = constants_.find(t.name);
      if (it != constants_.end()) return it->second;
    }
    std::uint32_t v = m_.index().find(eval_term(m_, interp_, current_assignment(t), t));
    if (t.args.empty()) constants_.emplace(t.name, v);
    return v;
  }

  /// String assignment for the variables of t, for function application.
  Assignment current_assignment(const Term& t) {
    Assignment a;
    for (const auto& name : free_vars(t)) {
      std::uint32_t v = env_[var_id(name)];
      if (v != kUnbound) a[name] = m_.domain()[v];
    }
    return a;
  }

  std::uint32_t value(const CArg& a) {
    if (!a.is_var) return value(*a.term);
    std::uint32_t v = env_[a.var];
    if (v == kUnbound) throw UnboundVariable("variable '" + a.term->name + "' is not assigned");
    return v;
  }

  /// Whether every variable of the argument has a value.
  bool bound(const CArg& a) {
    if (a.is_var) return env_[a.var] != kUnbound;
    for (const auto& v : free_vars(*a.term)) {
      if (env_[var_id(v)] == kUnbound) return false;
    }
    return true;
  }

  Info& info(const Formula& f) {
    auto it = info_.find(f.id());
    if (it != info_.end()) return it->second;
    Info in;
    std::vector<std::uint32_t>& ids = in.free;
    switch (f.kind()) {
      case FormulaKind::atom:
      case FormulaKind::equal:
        for (const auto& v : free_vars(f)) ids.push_back(var_id(v));
        for (const auto& t : f.args()) in.args.push_back({&t, t.is_variable(), t.is_variable() ? var_id(t.name) : 0});
        if (f.kind() == FormulaKind::atom && f.literal() == nullptr) {
          in.skeleton = interp_.predicate(f.predicate(), f.args().size());
          if (in.skeleton == nullptr) {
            throw UnknownSymbol("predicate " + f.predicate() + "/" + std::to_string(f.args().size()) + " is not interpreted");
          }
          if (options_.fold_predicates.contains(f.symbol())) in.folded.emplace(*in.skeleton, m_.index());
        }
        break;
      case FormulaKind::forall:
      case FormulaKind::exists: {
        in.var = var_id(f.var());
        for (auto id : info(f.child(0)).free) {
          if (id != in.var) ids.push_back(id);
        }
        break;
      }
      default:
        for (std::size_t i = 0; i < f.child_count(); ++i) {
          const auto& sub = info(f.child(i)).free;
          ids.insert(ids.end(), sub.begin(), sub.end());
        }
        break;
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return info_.emplace(f.id(), std::move(in)).first->second;
  }

  Ref literal_atom(const Formula& f, std::span<const std::uint32_t> values) {
    const auto& domain = m_.domain();
    SkeletonGraph skel;
    auto resolve = [&](const TypedItem& item) -> SkelItem {
      if (const auto* p = std::get_if<Placeholder>(&item)) return *p;
      return domain[value(std::get<Term>(item))];
    };
    for (const auto& [node, anno] : f.literal()->nodes()) {
      SkeletonGraph::AnnoSet mapped;
      for (const auto& a : anno) mapped.insert(resolve(a));
      SkelItem n = resolve(node);
      // Two literal nodes denoting the same statement can never match.
      if (skel.has_node(n)) return arena_->bottom();
      skel.add_node(n, mapped);
    }
    for (const auto& [edge, anno] : f.literal()->edges()) {
      SkeletonGraph::AnnoSet mapped;
      for (const auto& a : anno) mapped.insert(resolve(a));
      skel.add_edge(resolve(edge.first), resolve(edge.second), mapped);
    }
    std::vector<std::string> names;
    for (auto v : values) names.push_back(domain[v]);
    return arena_->var(literal_atom_name(skel, names));
  }

  Ref atom(const Formula& f) {
    Info& in = info(f);
    Values values;
    for (const auto& a : in.args) values.push_back(value(a));
    if (f.literal() != nullptr) return literal_atom(f, values.span());
    if (const Ref* hit = atom_memo_.find(f.id(), values.span())) return *hit;
    Ref out;
    if (in.folded) {
      out = in.folded->check(values.span()) == Tri::yes ? arena_->top() : arena_->bottom();
    } else {
      std::vector<std::string> names;
      for (auto v : values.span()) names.push_back(m_.domain()[v]);
      out = arena_->var(atom_name(f.predicate(), names));
    }
    atom_memo_.put(f.id(), values.span(), out);
    return out;
  }

  Ref quantifier(const Formula& f) {
    bool all = f.kind() == FormulaKind::forall;
    const Info& in = info(f);
    Values free;
    for (auto id : in.free) free.push_back(env_[id]);
    if (const Ref* hit = memo_.find(f.id(), free.span())) return *hit;

    std::uint32_t x = in.var;
    std::uint32_t saved = env_[x];
    if (!m_.domain().empty()) {
      // A body already decided by the folded atoms, whatever x and the
      // remaining atoms are, is that constant for every value of x.
      env_[x] = kUnbound;
      Tri t = partial(f.child(0));
      env_[x] = saved;
      if (t != Tri::unknown) {
        Ref out = t == Tri::yes ? arena_->top() : arena_->bottom();
        memo_.put(f.id(), free.span(), out);
        return out;
      }
    }
    Ref stop = all ? arena_->bottom() : arena_->top();
    Ref acc = all ? arena_->top() : arena_->bottom();
    for (std::uint32_t d = 0; d < m_.domain().size(); ++d) {
      env_[x] = d;
      Ref r = go(f.child(0));
      acc = all ? arena_->conjunction(acc, r) : arena_->disjunction(acc, r);
      if (acc == stop) break;
    }
    env_[x] = saved;
    memo_.put(f.id(), free.span(), acc);
    return acc;
  }

  static Tri tri_not(Tri a) { return a == Tri::unknown ? a : (a == Tri::yes ? Tri::no : Tri::yes); }

  /// Kleene value of f with unbound variables and unfolded atoms unknown.
  Tri partial(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::top:
        return Tri::yes;
      case FormulaKind::bottom:
        return Tri::no;
      case FormulaKind::atom: {
        if (f.literal() != nullptr) return Tri::unknown;
        Info& c = info(f);
        if (!c.folded) return Tri::unknown;
        Values values;
        for (const auto& a : c.args) {
          if (!bound(a)) {
            if (!a.is_var) return Tri::unknown;
            values.push_back(kUnbound);
          } else {
            values.push_back(value(a));
          }
        }
        return c.folded->check(values.span());
      }
      case FormulaKind::equal: {
        const Info& c = info(f);
        if (!bound(c.args[0]) || !bound(c.args[1])) return Tri::unknown;
        return value(c.args[0]) == value(c.args[1]) ? Tri::yes : Tri::no;
      }
      case FormulaKind::negation:
        return tri_not(partial(f.child(0)));
      case FormulaKind::conjunction: {
        Tri a = partial(f.child(0));
        if (a == Tri::no) return a;
        Tri b = partial(f.child(1));
        if (b == Tri::no) return b;
        return a == Tri::yes && b == Tri::yes ? Tri::yes : Tri::unknown;
      }
      case FormulaKind::disjunction: {
        Tri a = partial(f.child(0));
        if (a == Tri::yes) return a;
        Tri b = partial(f.child(1));
        if (b == Tri::yes) return b;
        return a == Tri::no && b == Tri::no ? Tri::no : Tri::unknown;
      }
      case FormulaKind::implication: {
        Tri a = partial(f.child(0));
        if (a == Tri::no) return Tri::yes;
        Tri b = partial(f.child(1));
        if (b == Tri::yes) return b;
        return a == Tri::yes && b == Tri::no ? Tri::no : Tri::unknown;
      }
      case FormulaKind::forall:
      case FormulaKind::exists: {
        std::uint32_t x = info(f).var;
        std::uint32_t saved = env_[x];
        env_[x] = kUnbound;
        Tri t = partial(f.child(0));
        env_[x] = saved;
        return t;
      }
    }
    return Tri::unknown;
  }

  Ref go(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::top:
        return arena_->top();
      case FormulaKind::bottom:
        return arena_->bottom();
      case FormulaKind::atom:
        return atom(f);
      case FormulaKind::equal: {
        const Info& c = info(f);
        return value(c.args[0]) == value(c.args[1]) ? arena_->top() : arena_->bottom();
      }
      case FormulaKind::negation:
        return arena_->negation(go(f.child(0)));
      case FormulaKind::conjunction: {
        Ref a = go(f.child(0));
        if (a == arena_->bottom()) return a;
        return arena_->conjunction(a, go(f.child(1)));
      }
      case FormulaKind::disjunction: {
        Ref a = go(f.child(0));
        if (a == arena_->top()) return a;
        return arena_->disjunction(a, go(f.child(1)));
      }
      case FormulaKind::implication: {
        Ref a = go(f.child(0));
        if (a == arena_->bottom()) return arena_->top();
        return arena_->implication(a, go(f.child(1)));
      }
      case FormulaKind::forall:
      case FormulaKind::exists:
        return quantifier(f);
    }
    return arena_->bottom();
  }

  const Model& m_;
  const Interpretation& interp_;
  const GroundOptions& options_;
  std::shared_ptr<PropArena> arena_;
  std::unordered_map<std::string, std::uint32_t> var_ids_;
  std::vector<std::uint32_t> env_;
  std::unordered_map<std::string, std::uint32_t> constants_;
  std::unordered_map<const void*, Info> info_;
  TupleMemo atom_memo_{m_.domain().size()};
  TupleMemo memo_{m_.domain().size()};
};

}  // namespace

std::string atom_name(const std::string& predicate, const std::vector<std::string>& values) {
  return escape(predicate) + args_suffix(values);
}

std::string literal_atom_name(const SkeletonGraph& literal, const std::vector<std::string>& values) {
  return "[" + to_json(literal).dump() + "]" + args_suffix(values);
}

PropFormula ground(const Model& m, const Interpretation& interp, const Formula& f, const GroundOptions& options) {
  if (!free_vars(f).empty()) throw NotClosedError("cannot ground a formula with free variables");
  return Grounder(m, interp, options).run(f);
}

Valuation induced_valuation(const Model& m, const Interpretation& interp, const std::set<std::string>& vars) {
  Valuation out;
  for (const auto& name : vars) {
    DecodedAtom atom = decode(name);
    for (const auto& v : atom.values) {
      if (!m.contains(v)) throw DecodeError("'" + name + "' mentions '" + v + "', which is not in the domain");
    }
    const SkeletonGraph* skel = nullptr;
    if (atom.literal) {
      skel = &*atom.literal;
      if (degree_of(*skel) != atom.values.size()) throw DecodeError("'" + name + "': literal degree does not match");
    } else {
      skel = interp.predicate(*atom.predicate, atom.values.size());
      if (skel == nullptr) throw DecodeError("'" + name + "' refers to an uninterpreted predicate");
    }
    out[name] = instantiates(atom.values, *skel, m.graph());
  }
  return out;
}

Valuation induced_valuation(const Model& m, const Interpretation& interp, const PropFormula& p) {
  return induced_valuation(m, interp, p.vars());
}

bool eval_prop(const PropFormula& p, const Valuation& v) {
  const PropArena& a = p.arena();
  std::unordered_map<Ref, bool> value;
  post_order(a, p.root(), [&](Ref r) {
    bool out = false;
    switch (a.kind(r)) {
      case PropKind::top:
        out = true;
        break;
      case PropKind::bottom:
        out = false;
        break;
      case PropKind::var: {
        auto it = v.find(a.var_name(r));
        if (it == v.end()) throw MissingVar("no value for '" + a.var_name(r) + "'");
        out = it->second;
        break;
      }
      case PropKind::negation:
        out = !value.at(a.lhs(r));
        break;
      case PropKind::conjunction:
        out = value.at(a.lhs(r)) && value.at(a.rhs(r));
        break;
      case PropKind::disjunction:
        out = value.at(a.lhs(r)) || value.at(a.rhs(r));
        break;
      case PropKind::implication:
        out = !value.at(a.lhs(r)) || value.at(a.rhs(r));
        break;
    }
    value[r] = out;
  });
  return value.at(p.root());
}

namespace {

void print(const PropArena& a, Ref r, std::string& out) {
  auto binary = [&](const char* op) {
    out += '(';
    print(a, a.lhs(r), out);
    out += op;
    print(a, a.rhs(r), out);
    out += ')';
  };
  switch (a.kind(r)) {
    case PropKind::top:
      out += "true";
      break;
    case PropKind::bottom:
      out += "false";
      break;
    case PropKind::var:
      out += a.var_name(r);
      break;
    case PropKind::negation:
      out += '~';
      print(a, a.lhs(r), out);
      break;
    case PropKind::conjunction:
      binary(" & ");
      break;
    case PropKind::disjunction:
      binary(" | ");
      break;
    case PropKind::implication:
      binary(" -> ");
      break;
  }
}

}  // namespace

std::string to_text(const PropFormula& p) {
  std::string out;
  print(p.arena(), p.root(), out);
  return out;
}

Dimacs to_dimacs(const PropFormula& p) {
  const PropArena& a = p.arena();
  Dimacs d;
  if (p.kind() == PropKind::top || p.kind() == PropKind::bottom) {
    bool sat = p.kind() == PropKind::top;
    d.num_clauses = sat ? 0 : 1;
    d.cnf = sat ? "c constant true\np cnf 0 0\n" : "c constant false\np cnf 0 1\n0\n";
    return d;
  }
  for (const auto& name : p.vars()) d.variables.emplace(name, ++d.num_vars);
  int first_aux = d.num_vars + 1;

  std::unordered_map<Ref, int> lit;
  std::vector<std::vector<int>> clauses;
  post_order(a, p.root(), [&](Ref r) {
    switch (a.kind(r)) {
      case PropKind::var:
        lit[r] = d.variables.at(a.var_name(r));
        return;
      case PropKind::negation:
        lit[r] = -lit.at(a.lhs(r));
        return;
      case PropKind::top:
      case PropKind::bottom:
        // Folding keeps constants out of compound formulas.
        throw Error("constant inside a compound propositional formula");
      default:
        break;
    }
    int x = ++d.num_vars;
    int l = lit.at(a.lhs(r));
    int rr = lit.at(a.rhs(r));
    switch (a.kind(r)) {
      case PropKind::conjunction:
        clauses.push_back({-x, l});
        clauses.push_back({-x, rr});
        clauses.push_back({x, -l, -rr});
        break;
      case PropKind::disjunction:
        clauses.push_back({-x, l, rr});
        clauses.push_back({x, -l});
        clauses.push_back({x, -rr});
        break;
      default:
        clauses.push_back({-x, -l, rr});
        clauses.push_back({x, l});
        clauses.push_back({x, -rr});
        break;
    }
    lit[r] = x;
  });
  clauses.push_back({lit.at(p.root())});
  d.num_clauses = clauses.size();

  std::string out;
  for (const auto& [name, index] : d.variables) out += "c var " + std::to_string(index) + " " + name + "\n";
  if (first_aux <= d.num_vars) out += "c aux " + std::to_string(first_aux) + ".." + std::to_string(d.num_vars) + "\n";
  out += "p cnf " + std::to_string(d.num_vars) + " " + std::to_string(d.num_clauses) + "\n";
  for (const auto& c : clauses) {
    for (int v : c) out += std::to_string(v) + " ";
    out += "0\n";
  }
  d.cnf = std::move(out);
  return d;
}

json dimacs_sidecar(const Dimacs& d) {
  json vars = json::object();
  for (const auto& [name, index] : d.variables) vars[name] = index;
  return {{"variables", vars}, {"num_vars", d.num_vars}, {"num_clauses", d.num_clauses}};
}

}  // namespace dgsem
