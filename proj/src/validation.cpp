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

#include "dgsem/validation.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <set>
#include <thread>

#include "dgsem/errors.hpp"
#include "dgsem/grounding.hpp"

namespace dgsem {

namespace {

struct NamedFamily {
  const char* name;
  Family::Kind kind;
  ExtensionSpec spec;
};

constexpr NamedFamily kNamed[] = {
    {"CF", Family::Kind::cf, {}},
    {"CL", Family::Kind::cl, {}},
    {"WCF", Family::Kind::wcf, {}},
    {"DF", Family::Kind::df, {}},
    {"WDF", Family::Kind::wdf, {}},
    {"ADM", Family::Kind::extension, {Sigma::simple, Tau::defence, Mu::admissible}},
    {"WADM", Family::Kind::extension, {Sigma::wide, Tau::defence, Mu::admissible}},
    {"D-CMP", Family::Kind::extension, {Sigma::simple, Tau::defence, Mu::complete}},
    {"W-D-CMP", Family::Kind::extension, {Sigma::wide, Tau::defence, Mu::complete}},
    {"E-CMP", Family::Kind::extension, {Sigma::simple, Tau::equivalence, Mu::complete}},
    {"DISTINCT", Family::Kind::distinct, {}},
    {"CMPS", Family::Kind::cmps, {}},
};

std::vector<std::string> group(std::string_view name) {
  if (name == "core") return {"CF", "CL", "WCF", "DF", "WDF"};
  if (name == "completeness") return {"ADM", "WADM", "D-CMP", "W-D-CMP", "E-CMP"};
  std::vector<std::string> out;
  if (name == "items" || name == "all") {
    for (int i = 1; i <= 12; ++i) out.push_back("item" + std::to_string(i));
  }
  if (name == "both" || name == "all") {
    for (const char* sigma : {"simple", "wide"}) {
      for (const char* mu : {"complete", "preferred", "grounded", "stable"}) {
        out.push_back(std::string(sigma) + ":both:" + mu);
      }
    }
  }
  if (name == "all") {
    std::vector<std::string> head = {"CF", "CL", "WCF", "DF", "WDF", "ADM", "WADM", "D-CMP", "W-D-CMP", "E-CMP"};
    out.insert(out.begin(), head.begin(), head.end());
    out.push_back("DISTINCT");
    out.push_back("CMPS");
  }
  return out;
}

std::vector<NodeSet> subsets(const EquivDungModel& m, std::size_t max_k) {
  std::vector<NodeSet> out;
  for (NodeSet s = 0;; ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) <= max_k) out.push_back(s);
    if (s == m.all()) break;
  }
  sort_sets(out);
  return out;
}

struct Case {
  Formula formula;
  std::vector<std::pair<std::string, std::string>> constants;
  Mismatch expect;
};

class Runner {
 public:
  Runner(const EquivDungModel& m, const ValidateOptions& options)
      : m_(m), model_(m.graph()), options_(options), n_(m.size()), base_(standard_environment(std::max<std::size_t>(n_, 2))) {
    for (const auto& [symbol, skeleton] : base_.predicates()) {
      if (std::find(options.fold.begin(), options.fold.end(), symbol.name) != options.fold.end()) {
        fold_.fold_predicates.insert(symbol);
      }
    }
  }

  std::size_t n() const { return n_; }

  FormulaBuilder builder() const {
    FormulaBuilder b;
    b.set_mutate_cf(options_.mutate_cf);
    return b;
  }

  /// c1..ck bound to the members of each set in order.
  static void bind(Case& c, const std::vector<std::string>& values, std::size_t first = 1) {
    for (std::size_t i = 0; i < values.size(); ++i) c.constants.emplace_back("c" + std::to_string(first + i), values[i]);
  }

  void add(Case c) { cases_.push_back(std::move(c)); }

  void run(ValidationReport& report) {
    std::vector<std::vector<Mismatch>> found(cases_.size());
    std::vector<std::exception_ptr> errors(cases_.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i = next++; i < cases_.size(); i = next++) {
        try {
          found[i] = check(cases_[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
    threads = std::min(threads, std::max<std::size_t>(cases_.size(), 1));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    report.cases = cases_.size();
    if (options_.check_grounding) report.grounded = cases_.size();
    for (auto& f : found) {
      for (auto& mm : f) report.mismatches.push_back(std::move(mm));
    }
  }

 private:
  std::vector<Mismatch> check(const Case& c) const {
    Interpretation interp = base_;
    for (const auto& [name, value] : c.constants) interp.set_constant(name, value);
    std::vector<Mismatch> out;
    bool actual = satisfies_closed(model_, interp, c.formula, options_.eval);
    if (actual != c.expect.expected) {
      Mismatch mm = c.expect;
      mm.kind = "formula";
      mm.actual = actual;
      out.push_back(std::move(mm));
    }
    if (options_.check_grounding) {
      PropFormula p = ground(model_, interp, c.formula, fold_);
      bool prop = eval_prop(p, induced_valuation(model_, interp, p));
      if (prop != actual) {
        Mismatch mm = c.expect;
        mm.kind = "grounding";
        mm.expected = actual;
        mm.actual = prop;
        out.push_back(std::move(mm));
      }
    }
    return out;
  }

  const EquivDungModel& m_;
  Model model_;
  const ValidateOptions& options_;
  std::size_t n_;
  Interpretation base_;
  GroundOptions fold_;
  std::vector<Case> cases_;
};

void subset_cases(const EquivDungModel& m, Runner& r, const ValidateOptions& options,
                  const std::function<Formula(FormulaBuilder&, const std::vector<Term>&)>& make,
                  const std::function<bool(NodeSet)>& oracle) {
  for (NodeSet s : subsets(m, options.max_k)) {
    auto names = m.names_of(s);
    FormulaBuilder b = r.builder();
    Case c{make(b, constants(names.size())), {}, {}};
    Runner::bind(c, names);
    c.expect.set = names;
    c.expect.expected = oracle(s);
    r.add(std::move(c));
  }
}

void closure_cases(const EquivDungModel& m, Runner& r, const ValidateOptions& options) {
  for (NodeSet p : subsets(m, options.max_k)) {
    NodeSet rest = m.all() & ~p;
    // Every L ⊇ P, as P plus a subset of the remaining nodes.
    for (NodeSet extra = rest;; extra = (extra - 1) & rest) {
      auto head = m.names_of(p);
      auto tail = m.names_of(extra);
      std::vector<std::string> all = head;
      all.insert(all.end(), tail.begin(), tail.end());
      FormulaBuilder b = r.builder();
      Case c{b.cl(head.size(), constants(all.size())), {}, {}};
      Runner::bind(c, all);
      c.expect.set = head;
      c.expect.other = {all};
      c.expect.expected = m.closure(p) == (p | extra);
      r.add(std::move(c));
      if (extra == 0) break;
    }
  }
}

void defence_cases(const EquivDungModel& m, Runner& r, const ValidateOptions& options, Sigma sigma) {
  for (NodeSet s : subsets(m, options.max_k)) {
    auto names = m.names_of(s);
    for (std::size_t u = 0; u < m.size(); ++u) {
      FormulaBuilder b = r.builder();
      Term target = Term::constant("c");
      auto ts = constants(names.size());
      Case c{sigma == Sigma::simple ? b.df(target, ts) : b.wdf(target, ts, r.n()), {}, {}};
      Runner::bind(c, names);
      c.constants.emplace_back("c", m.names()[u]);
      c.expect.set = names;
      c.expect.node = m.names()[u];
      c.expect.expected = m.defends(s, u, sigma);
      r.add(std::move(c));
    }
  }
}

void distinct_cases(const EquivDungModel& m, Runner& r, const ValidateOptions& options) {
  auto all = subsets(m, options.max_k);
  for (NodeSet a : all) {
    for (NodeSet b : all) {
      auto first = m.names_of(a);
      auto second = m.names_of(b);
      std::vector<std::string> values = first;
      values.insert(values.end(), second.begin(), second.end());
      FormulaBuilder fb = r.builder();
      Case c{fb.distinct(first.size(), constants(values.size())), {}, {}};
      Runner::bind(c, values);
      c.expect.set = first;
      c.expect.other = {second};
      c.expect.expected = a != b;
      r.add(std::move(c));
    }
  }
}

/// The true listing of wide defence-complete sets, then perturbations of it.
void cmps_cases(const EquivDungModel& m, Runner& r, const ValidateOptions& options) {
  auto complete = enumerate_extensions(m, {Sigma::wide, Tau::defence, Mu::complete}, options.bound);
  std::set<NodeSet> truth(complete.begin(), complete.end());
  std::vector<std::vector<NodeSet>> lists{complete};
  if (complete.size() > 1) lists.emplace_back(complete.rbegin(), complete.rend());
  for (std::size_t i = 0; i < complete.size(); ++i) {
    auto fewer = complete;
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
    lists.push_back(fewer);
  }
  if (!complete.empty()) {
    auto twice = complete;
    twice.push_back(complete.front());
    lists.push_back(twice);
  }
  for (NodeSet s : subsets(m, options.max_k)) {
    if (truth.contains(s)) continue;
    auto more = complete;
    more.push_back(s);
    lists.push_back(more);
  }
  for (const auto& list : lists) {
    std::vector<std::size_t> ks;
    std::vector<std::string> values;
    std::vector<std::vector<std::string>> blocks;
    for (NodeSet s : list) {
      blocks.push_back(m.names_of(s));
      ks.push_back(blocks.back().size());
      values.insert(values.end(), blocks.back().begin(), blocks.back().end());
    }
    FormulaBuilder b = r.builder();
    Case c{b.cmps(ks, constants(values.size()), r.n()), {}, {}};
    Runner::bind(c, values);
    c.expect.other = blocks;
    std::set<NodeSet> listed(list.begin(), list.end());
    c.expect.expected = listed.size() == list.size() && listed == truth;
    r.add(std::move(c));
  }
}

}  // namespace

Family parse_family(std::string_view name) {
  for (const auto& f : kNamed) {
    if (name == f.name) return {f.kind, f.spec, f.name};
  }
  if (name.starts_with("item")) {
    std::string digits(name.substr(4));
    if (!digits.empty() && digits.size() <= 2 && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      int i = std::stoi(digits);
      if (i >= 1 && i <= 12) return {Family::Kind::extension, item_spec(i), std::string(name)};
    }
  }
  if (name.find(':') != std::string_view::npos) {
    ExtensionSpec spec = parse_spec(name);
    return {Family::Kind::extension, spec, to_string(spec)};
  }
  std::vector<std::string> expected;
  for (const auto& f : kNamed) expected.emplace_back(f.name);
  expected.insert(expected.end(), {"item1..item12", "sigma:tau:mu"});
  throw ParseError("unknown family '" + std::string(name) + "'", 0, expected);
}

std::vector<Family> parse_families(std::string_view list) {
  std::vector<Family> out;
  std::set<std::string> seen;
  auto push = [&](const Family& f) {
    if (seen.insert(f.name).second) out.push_back(f);
  };
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t comma = list.find(',', start);
    std::string_view part = list.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (part.empty()) throw ParseError("empty family name", start, {"family name"});
    auto members = group(part);
    if (members.empty()) push(parse_family(part));
    for (const auto& name : members) push(parse_family(name));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

ValidationReport cross_validate(const EquivDungModel& m, const Family& family, const ValidateOptions& options) {
  if (m.size() > options.bound) {
    throw BoundExceeded("model has " + std::to_string(m.size()) + " nodes, bound is " + std::to_string(options.bound));
  }
  ValidationReport report;
  report.family = family.name;
  Runner r(m, options);
  std::size_t n = m.size();
  switch (family.kind) {
    case Family::Kind::cf:
      subset_cases(m, r, options, [](FormulaBuilder& b, const auto& t) { return b.cf(t); },
                   [&](NodeSet s) { return m.conflict_free(s, Sigma::simple); });
      break;
    case Family::Kind::wcf:
      subset_cases(m, r, options, [n](FormulaBuilder& b, const auto& t) { return b.wcf(t, n); },
                   [&](NodeSet s) { return m.conflict_free(s, Sigma::wide); });
      break;
    case Family::Kind::cl:
      closure_cases(m, r, options);
      break;
    case Family::Kind::df:
      defence_cases(m, r, options, Sigma::simple);
      break;
    case Family::Kind::wdf:
      defence_cases(m, r, options, Sigma::wide);
      break;
    case Family::Kind::extension: {
      auto all = enumerate_extensions(m, family.spec, options.bound);
      std::set<NodeSet> members(all.begin(), all.end());
      subset_cases(m, r, options, [&](FormulaBuilder& b, const auto& t) { return b.extension(family.spec, t, n); },
                   [&](NodeSet s) { return members.contains(s); });
      break;
    }
    case Family::Kind::distinct:
      distinct_cases(m, r, options);
      break;
    case Family::Kind::cmps:
      cmps_cases(m, r, options);
      break;
  }
  r.run(report);
  return report;
}

json to_json(const ValidationReport& r) {
  json mismatches = json::array();
  for (const auto& mm : r.mismatches) {
    json j = {{"kind", mm.kind}, {"set", mm.set}, {"expected", mm.expected}, {"actual", mm.actual}};
    if (!mm.other.empty()) j["other"] = mm.other;
    if (!mm.node.empty()) j["node"] = mm.node;
    mismatches.push_back(std::move(j));
  }
  return {{"family", r.family},
          {"cases", r.cases},
          {"grounded", r.grounded},
          {"passed", r.passed()},
          {"mismatches", std::move(mismatches)}};
}

}  // namespace dgsem
