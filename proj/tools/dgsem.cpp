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

// Command-line front end.
//
// Exit codes: 0 success, 1 validation failure, 2 parse or input error,
// 3 semantic error, 4 model invariant violation, 5 bound exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dgsem/argumentation.hpp"
#include "dgsem/characterisation.hpp"
#include "dgsem/environment.hpp"
#include "dgsem/errors.hpp"
#include "dgsem/graph.hpp"
#include "dgsem/graph_json.hpp"
#include "dgsem/grounding.hpp"
#include "dgsem/model_check.hpp"
#include "dgsem/parser.hpp"
#include "dgsem/random_models.hpp"
#include "dgsem/validation.hpp"

namespace {

using namespace dgsem;

enum Exit : int { kOk = 0, kFailed = 1, kParse = 2, kSemantic = 3, kInvariant = 4, kBound = 5 };

struct Config {
  std::string format = "text";
  std::string model;
  std::string env;
  std::string formula;
  std::string expr;
  std::string skeleton;
  std::string spec;
  std::string family;
  std::size_t k = 0;
  std::size_t l = 0;
  std::size_t n = 0;
  std::string c = "c";
  std::vector<std::string> consts;
  std::vector<std::size_t> blocks;
  std::vector<std::string> bind;
  std::string families = "all";
  std::size_t random = 0;
  std::size_t nodes = 4;
  std::uint64_t seed = 2026;
  std::size_t bound = 0;
  std::size_t max_k = 0;
  bool dung = false;
  bool mutate = false;
  bool ground = false;
  std::vector<std::string> fold;
  std::string sidecar;
};

bool as_json(const Config& cfg) { return cfg.format == "json"; }

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Formula load_formula(const Config& cfg) {
  if (!cfg.expr.empty()) return parse_formula(cfg.expr);
  if (cfg.formula.empty()) throw IoError("one of --formula or --expr is required");
  return parse_formula(read_text(cfg.formula));
}

Interpretation load_env(const Config& cfg) { return cfg.env.empty() ? Interpretation{} : load_interpretation(cfg.env); }

std::string braces(const std::vector<std::string>& items, const char* open = "{", const char* close = "}") {
  std::string out = open;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out + close;
}

int cmd_check(const Config& cfg) {
  Model m(load_graph(cfg.model));
  Interpretation interp = load_env(cfg);
  Formula f = load_formula(cfg);
  if (auto fv = free_vars(f); !fv.empty()) throw NotClosedError("formula has free variables: " + braces({fv.begin(), fv.end()}));
  auto w = find_witness(m, interp, {}, f);
  if (as_json(cfg)) {
    json j = {{"command", "check"}, {"result", w.has_value()}};
    if (w) {
      json binding = json::array();
      for (std::size_t i = 0; i < w->vars.size(); ++i) binding.push_back({{"var", w->vars[i]}, {"value", w->values[i]}});
      j["witness"] = std::move(binding);
    }
    print(j);
  } else {
    std::cout << (w ? "true" : "false") << "\n";
    if (w) {
      for (std::size_t i = 0; i < w->vars.size(); ++i) std::cout << w->vars[i] << " = " << w->values[i] << "\n";
    }
  }
  return kOk;
}

int cmd_extensions(const Config& cfg) {
  AnnotatedGraph g = load_graph(cfg.model);
  EquivDungModel m = cfg.dung ? EquivDungModel::from_dung(g) : EquivDungModel(g);
  ExtensionSpec spec = parse_spec(cfg.spec);
  auto sets = enumerate_extensions(m, spec, cfg.bound ? cfg.bound : kDefaultBound);
  if (as_json(cfg)) {
    json list = json::array();
    for (auto s : sets) list.push_back(m.names_of(s));
    print({{"command", "extensions"}, {"spec", to_string(spec)}, {"extensions", std::move(list)}});
  } else {
    for (auto s : sets) std::cout << braces(m.names_of(s)) << "\n";
  }
  return kOk;
}

int cmd_match(const Config& cfg) {
  AnnotatedGraph g = load_graph(cfg.model);
  SkeletonGraph s = load_skeleton(cfg.skeleton);
  auto tuples = instantiations(s, g);
  if (as_json(cfg)) {
    print({{"command", "match"}, {"degree", degree_of(s)}, {"tuples", tuples}});
  } else {
    for (const auto& t : tuples) std::cout << braces(t, "(", ")") << "\n";
  }
  return kOk;
}

std::vector<std::string> consts_or_default(const Config& cfg, std::size_t count) {
  if (!cfg.consts.empty()) return cfg.consts;
  std::vector<std::string> out;
  for (const auto& t : constants(count)) out.push_back(t.name);
  return out;
}

Formula generate(const Config& cfg) {
  Family fam = parse_family(cfg.family);
  switch (fam.kind) {
    case Family::Kind::cf:
      return f_k_cf(cfg.k, consts_or_default(cfg, cfg.k));
    case Family::Kind::cl:
      return f_kl_cl(cfg.k, cfg.l, consts_or_default(cfg, cfg.l));
    case Family::Kind::wcf:
      return f_kn_wcf(cfg.k, cfg.n, consts_or_default(cfg, cfg.k));
    case Family::Kind::df:
      return f_k_df(cfg.k, cfg.c, consts_or_default(cfg, cfg.k));
    case Family::Kind::wdf:
      return f_kn_wdf(cfg.k, cfg.n, cfg.c, consts_or_default(cfg, cfg.k));
    case Family::Kind::extension: {
      auto names = consts_or_default(cfg, cfg.k);
      if (names.size() != cfg.k) throw ArityMismatch("--k is " + std::to_string(cfg.k) + " but " + std::to_string(names.size()) + " constants given");
      std::vector<Term> t;
      for (const auto& name : names) t.push_back(Term::constant(name));
      FormulaBuilder b;
      b.set_mutate_cf(cfg.mutate);
      return b.extension(fam.spec, t, cfg.n);
    }
    case Family::Kind::distinct:
      return f_distinct(cfg.k, cfg.l, consts_or_default(cfg, cfg.k + cfg.l));
    case Family::Kind::cmps: {
      std::size_t total = std::accumulate(cfg.blocks.begin(), cfg.blocks.end(), std::size_t{0});
      return f_cmps(cfg.blocks, cfg.n, consts_or_default(cfg, total));
    }
  }
  throw Error("unhandled family");
}

int cmd_generate(const Config& cfg) {
  Formula f = generate(cfg);
  if (as_json(cfg)) {
    print({{"command", "generate"}, {"family", cfg.family}, {"size", formula_size(f)}, {"formula", to_text(f)}});
  } else {
    std::cout << to_text(f) << "\n";
  }
  return kOk;
}

int cmd_env(const Config& cfg) {
  Interpretation interp = standard_environment(std::max<std::size_t>(cfg.n, 2));
  for (const auto& b : cfg.bind) {
    auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("binding must read name=value: " + b, 0, {"name=value"});
    interp.set_constant(b.substr(0, eq), b.substr(eq + 1));
  }
  print(to_json(interp));
  return kOk;
}

int cmd_ground(const Config& cfg) {
  Model m(load_graph(cfg.model));
  Interpretation interp = load_env(cfg);
  Formula f = load_formula(cfg);
  GroundOptions opts;
  for (const auto& name : cfg.fold) {
    for (const auto& [sym, graph] : interp.predicates()) {
      if (sym.name == name) opts.fold_predicates.insert(sym);
    }
  }
  PropFormula p = ground(m, interp, f, opts);
  Dimacs d = to_dimacs(p);
  if (!cfg.sidecar.empty()) {
    std::ofstream out(cfg.sidecar);
    if (!out) throw IoError("cannot write " + cfg.sidecar);
    out << dimacs_sidecar(d).dump(2) << "\n";
  }
  if (cfg.format == "dimacs") {
    std::cout << d.cnf;
  } else if (as_json(cfg)) {
    print({{"command", "ground"},
           {"size", p.size()},
           {"variables", p.vars()},
           {"formula", to_text(p)},
           {"dimacs", dimacs_sidecar(d)}});
  } else {
    std::cout << to_text(p) << "\n";
  }
  return kOk;
}

int cmd_validate(const Config& cfg) {
  auto families = parse_families(cfg.families);
  ValidateOptions opts;
  if (cfg.bound) opts.bound = cfg.bound;
  if (cfg.max_k) opts.max_k = cfg.max_k;
  opts.check_grounding = cfg.ground;
  opts.mutate_cf = cfg.mutate;
  if (!cfg.fold.empty()) opts.fold = cfg.fold;

  struct Named {
    std::string name;
    AnnotatedGraph graph;
  };
  std::vector<Named> models;
  if (!cfg.model.empty()) models.push_back({cfg.model, load_graph(cfg.model)});
  RandomModelOptions ropts;
  ropts.max_nodes = cfg.nodes;
  for (std::size_t i = 0; i < cfg.random; ++i) {
    models.push_back({"random-" + std::to_string(i), random_equiv_dung(cfg.seed, i, ropts)});
  }
  if (models.empty()) throw IoError("one of --model or --random is required");

  bool passed = true;
  json jmodels = json::array();
  for (const auto& [name, graph] : models) {
    EquivDungModel m(graph);
    json reports = json::array();
    for (const auto& fam : families) {
      ValidationReport r = cross_validate(m, fam, opts);
      passed = passed && r.passed();
      if (as_json(cfg)) {
        reports.push_back(to_json(r));
        continue;
      }
      std::cout << (r.passed() ? "PASS " : "FAIL ") << name << " " << r.family << " (" << r.cases << " cases)\n";
      for (const auto& mm : r.mismatches) {
        std::cout << "  " << mm.kind << " mismatch on " << braces(mm.set);
        if (!mm.node.empty()) std::cout << " node " << mm.node;
        for (const auto& o : mm.other) std::cout << " " << braces(o);
        std::cout << ": expected " << mm.expected << ", got " << mm.actual << "\n";
      }
    }
    if (as_json(cfg)) jmodels.push_back({{"name", name}, {"graph", to_json(graph)}, {"reports", std::move(reports)}});
  }
  if (as_json(cfg)) {
    json names = json::array();
    for (const auto& f : families) names.push_back(f.name);
    print({{"command", "validate"}, {"seed", cfg.seed}, {"families", std::move(names)}, {"models", std::move(jmodels)}, {"passed", passed}});
  } else {
    std::cout << (passed ? "PASS" : "FAIL") << " seed=" << cfg.seed << "\n";
  }
  return passed ? kOk : kFailed;
}

int exit_code(const std::exception& e) {
  if (dynamic_cast<const ModelInvariantError*>(&e)) return kInvariant;
  if (dynamic_cast<const BoundExceeded*>(&e)) return kBound;
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const IoError*>(&e) || dynamic_cast<const GraphError*>(&e) ||
      dynamic_cast<const DegreeGapError*>(&e) || dynamic_cast<const json::exception*>(&e)) {
    return kParse;
  }
  return kSemantic;
}

}  // namespace

int main(int argc, char** argv) {
  std::cout << std::boolalpha;
  Config cfg;
  CLI::App app{"Discussion-graph semantics toolkit"};
  app.require_subcommand(1);
  auto format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(std::move(allowed)))->capture_default_str();
  };

  auto* check = app.add_subcommand("check", "Decide whether a model satisfies a closed formula");
  check->add_option("--model", cfg.model, "Object-level graph (JSON)")->required();
  check->add_option("--env", cfg.env, "Environment (JSON)");
  check->add_option("--formula", cfg.formula, "Formula file");
  check->add_option("--expr", cfg.expr, "Formula text");
  format(check, {"text", "json"});

  auto* ext = app.add_subcommand("extensions", "Enumerate the extensions of an equivalence-equipped Dung model");
  ext->add_option("--model", cfg.model, "Model graph (JSON)")->required();
  ext->add_option("--spec", cfg.spec, "sigma:tau:mu")->required();
  ext->add_option("--bound", cfg.bound, "Largest node count accepted");
  ext->add_flag("--dung", cfg.dung, "Read a plain Dung graph, one ID per node");
  format(ext, {"text", "json"});

  auto* match = app.add_subcommand("match", "List the tuples that instantiate a skeleton below a model");
  match->add_option("--model", cfg.model, "Object-level graph (JSON)")->required();
  match->add_option("--skeleton", cfg.skeleton, "Skeleton graph (JSON)")->required();
  format(match, {"text", "json"});

  auto* gen = app.add_subcommand("generate", "Print a characterisation formula");
  gen->add_option("--family", cfg.family, "CF, CL, WCF, DF, WDF, ADM, WADM, D-CMP, W-D-CMP, E-CMP, itemN, sigma:tau:mu, DISTINCT, CMPS")
      ->required();
  gen->add_option("--k", cfg.k, "Tuple length (DISTINCT: first block)");
  gen->add_option("--l", cfg.l, "CL: full tuple length; DISTINCT: second block");
  gen->add_option("--N", cfg.n, "Node count bound");
  gen->add_option("--c", cfg.c, "Defended constant for DF and WDF")->capture_default_str();
  gen->add_option("--consts", cfg.consts, "Constant names (default c1..ck)")->delimiter(',');
  gen->add_option("--blocks", cfg.blocks, "CMPS block sizes")->delimiter(',');
  gen->add_flag("--mutate", cfg.mutate, "Corrupt the conflict-freeness schema");
  format(gen, {"text", "json"});

  auto* env = app.add_subcommand("env", "Print the standard environment as JSON");
  env->add_option("--N", cfg.n, "Largest p_D arity");
  env->add_option("--bind", cfg.bind, "Constant bindings name=value")->delimiter(',');

  auto* grnd = app.add_subcommand("ground", "Ground a closed formula to propositional logic");
  grnd->add_option("--model", cfg.model, "Object-level graph (JSON)")->required();
  grnd->add_option("--env", cfg.env, "Environment (JSON)");
  grnd->add_option("--formula", cfg.formula, "Formula file");
  grnd->add_option("--expr", cfg.expr, "Formula text");
  grnd->add_option("--fold", cfg.fold, "Predicates evaluated in the model")->delimiter(',');
  grnd->add_option("--sidecar", cfg.sidecar, "Write the DIMACS variable map here");
  format(grnd, {"text", "json", "dimacs"});

  auto* val = app.add_subcommand("validate", "Cross-validate characterisation formulas against the semantics");
  val->add_option("--model", cfg.model, "Model graph (JSON)");
  val->add_option("--random", cfg.random, "Number of random models");
  val->add_option("--nodes", cfg.nodes, "Largest random model size")->check(CLI::Range(1, 20))->capture_default_str();
  val->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  val->add_option("--families", cfg.families, "Families and groups (core, completeness, items, both, all)")->capture_default_str();
  val->add_option("--bound", cfg.bound, "Largest node count accepted")->check(CLI::PositiveNumber);
  val->add_option("--max-k", cfg.max_k, "Largest subset size")->check(CLI::PositiveNumber);
  val->add_flag("--ground", cfg.ground, "Also compare against the grounded formula");
  val->add_option("--fold", cfg.fold, "Predicates evaluated in the model while grounding")->delimiter(',');
  val->add_flag("--mutate", cfg.mutate, "Corrupt the conflict-freeness schema");
  format(val, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*check) return cmd_check(cfg);
    if (*ext) return cmd_extensions(cfg);
    if (*match) return cmd_match(cfg);
    if (*gen) return cmd_generate(cfg);
    if (*env) return cmd_env(cfg);
    if (*grnd) return cmd_ground(cfg);
    if (*val) return cmd_validate(cfg);
  } catch (const ModelInvariantError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& v : e.violations()) std::cerr << "  " << v << "\n";
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  }
  return kOk;
}
