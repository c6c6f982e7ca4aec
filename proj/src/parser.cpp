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

#include "dgsem/parser.hpp"

#include <cctype>
#include <optional>

#include "dgsem/graph_json.hpp"

namespace dgsem {

bool is_variable_name(std::string_view name) {
  if (name.empty() || std::string_view("vwxyz").find(name[0]) == std::string_view::npos) return false;
  for (std::size_t i = 1; i < name.size(); ++i) {
    char c = name[i];
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  }
  return true;
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class Parser {
 public:
  Parser(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

  Formula formula() {
    Formula f = impl();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected input", {"end of input", "'->'", "'&'", "'|'"});
    return f;
  }

  Term whole_term() {
    Term t = term();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected input after term", {"end of input"});
    return t;
  }

  TypedDiscussionGraph graph(const json& j) {
    if (!j.is_object()) fail("graph literal must be a JSON object", {"'{'"});
    TypedDiscussionGraph g;
    auto item = [&](const json& v) -> TypedItem {
      if (!v.is_string()) fail("graph literal entries must be strings", {"string"});
      std::string s = v.get<std::string>();
      if (looks_like_placeholder(s)) {
        SkelItem p = parse_skel_item(s);
        return std::get<Placeholder>(p);
      }
      Parser sub(s, base_ + pos_);
      sub.scope_ = scope_;
      return sub.whole_term();
    };
    auto annos = [&](const json& obj) {
      std::set<TypedItem> out;
      if (obj.contains("anno")) {
        if (!obj.at("anno").is_array()) fail("\"anno\" must be an array", {"'['"});
        for (const auto& a : obj.at("anno")) out.insert(item(a));
      }
      return out;
    };
    if (j.contains("nodes")) {
      for (const auto& n : j.at("nodes")) {
        if (!n.is_object() || !n.contains("id")) fail("graph literal node needs an \"id\"", {"\"id\""});
        TypedItem id = item(n.at("id"));
        if (g.has_node(id)) fail("duplicate node in graph literal", {});
        g.add_node(id, annos(n));
      }
    }
    if (j.contains("edges")) {
      for (const auto& e : j.at("edges")) {
        if (!e.is_object() || !e.contains("from") || !e.contains("to")) {
          fail("graph literal edge needs \"from\" and \"to\"", {"\"from\"", "\"to\""});
        }
        TypedItem from = item(e.at("from"));
        TypedItem to = item(e.at("to"));
        if (!g.has_node(from) || !g.has_node(to)) fail("graph literal edge endpoint is not a node", {});
        g.add_edge(from, to, annos(e));
      }
    }
    degree_of(g);
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected) const {
    throw ParseError(message, base_ + pos_, std::move(expected));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(std::string_view tok) {
    skip_ws();
    return text_.substr(pos_, tok.size()) == tok;
  }

  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("missing token", {"'" + std::string(tok) + "'"});
  }

  std::optional<std::string> peek_ident() {
    skip_ws();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) return std::nullopt;
    std::size_t end = pos_ + 1;
    while (end < text_.size() && ident_char(text_[end])) ++end;
    return std::string(text_.substr(pos_, end - pos_));
  }

  std::string ident() {
    auto id = peek_ident();
    if (!id) fail("expected an identifier", {"identifier"});
    pos_ += id->size();
    return *id;
  }

  bool accept_keyword(std::string_view kw) {
    auto id = peek_ident();
    if (!id || *id != kw) return false;
    pos_ += kw.size();
    return true;
  }

  bool is_bound(const std::string& name) const {
    return std::find(scope_.begin(), scope_.end(), name) != scope_.end();
  }

  Formula impl() {
    Formula lhs = quant();
    if (accept("->")) return Formula::implication(lhs, impl());
    return lhs;
  }

  std::optional<Formula> quantifier() {
    bool is_forall = accept_keyword("forall");
    if (!is_forall && !accept_keyword("exists")) return std::nullopt;
    std::string var = ident();
    if (var == "forall" || var == "exists" || var == "true" || var == "false") fail("keyword used as a variable", {"identifier"});
    expect(".");
    scope_.push_back(var);
    Formula body = quant();
    scope_.pop_back();
    return is_forall ? Formula::forall(var, body) : Formula::exists(var, body);
  }

  Formula quant() {
    if (auto q = quantifier()) return *q;
    return binary();
  }

  Formula binary() {
    Formula lhs = unary();
    for (;;) {
      if (accept("&")) {
        lhs = Formula::conjunction(lhs, unary());
      } else if (peek("|")) {
        ++pos_;
        lhs = Formula::disjunction(lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  Formula unary() {
    if (accept("~")) return Formula::negation(unary());
    if (auto q = quantifier()) return *q;
    return primary();
  }

  std::vector<Term> arg_list() {
    std::vector<Term> args;
    expect("(");
    if (accept(")")) return args;
    do {
      args.push_back(term());
    } while (accept(","));
    if (!accept(")")) fail("unterminated argument list", {"','", "')'"});
    return args;
  }

  Term term() {
    std::string name = ident();
    if (name == "forall" || name == "exists" || name == "true" || name == "false") {
      pos_ -= name.size();
      fail("keyword where a term was expected", {"identifier"});
    }
    if (peek("(")) return Term::apply(name, arg_list());
    if (is_bound(name) || is_variable_name(name)) return Term::var(name);
    return Term::constant(name);
  }

  Formula graph_atom() {
    skip_ws();
    std::size_t start = pos_;
    int depth = 0;
    bool in_string = false;
    for (; pos_ < text_.size(); ++pos_) {
      char c = text_[pos_];
      if (in_string) {
        if (c == '\\') {
          ++pos_;
        } else if (c == '"') {
          in_string = false;
        }
        continue;
      }
      if (c == '"') {
        in_string = true;
      } else if (c == '{') {
        ++depth;
      } else if (c == '}' && --depth == 0) {
        ++pos_;
        break;
      }
    }
    if (depth != 0) fail("unterminated graph literal", {"'}'"});
    json j;
    try {
      j = json::parse(text_.substr(start, pos_ - start));
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("bad graph literal: ") + e.what(), base_ + start + (e.byte == 0 ? 0 : e.byte - 1), {});
    }
    std::size_t after = pos_;
    pos_ = start;
    TypedDiscussionGraph g = graph(j);
    pos_ = after;
    std::vector<Term> args;
    if (peek("(")) args = arg_list();
    std::size_t n = degree_of(g);
    if (n != args.size()) {
      fail("graph literal of degree " + std::to_string(n) + " given " + std::to_string(args.size()) + " arguments", {});
    }
    return Formula::graph_atom(std::move(g), std::move(args));
  }

  Formula primary() {
    if (accept("(")) {
      Formula f = impl();
      if (!accept(")")) fail("unbalanced parenthesis", {"')'", "'->'", "'&'", "'|'"});
      return f;
    }
    if (accept("[")) {
      Formula f = impl();
      if (!accept("]")) fail("unbalanced bracket", {"']'", "'->'", "'&'", "'|'"});
      return f;
    }
    if (peek("{")) return graph_atom();
    auto id = peek_ident();
    if (!id) fail("expected a formula", {"'~'", "'('", "'['", "'{'", "'forall'", "'exists'", "'true'", "'false'", "identifier"});
    if (accept_keyword("true")) return Formula::top();
    if (accept_keyword("false")) return Formula::bottom();
    std::size_t start = pos_;
    Term lhs = term();
    if (accept("=")) return Formula::equal(lhs, term());
    if (lhs.is_variable()) {
      pos_ = start + lhs.name.size();
      fail("variable '" + lhs.name + "' used as a formula", {"'='"});
    }
    return Formula::atom(lhs.name, lhs.args);
  }

  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).formula(); }

Term parse_term(std::string_view text) { return Parser(text).whole_term(); }

TypedDiscussionGraph parse_graph_literal(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("bad graph literal: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1, {});
  }
  return Parser(text).graph(j);
}

}  // namespace dgsem
