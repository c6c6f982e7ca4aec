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

#include "dgsem/environment.hpp"

namespace dgsem {

void Interpretation::set_constant(const std::string& name, const std::string& value) { constants_[name] = value; }

void Interpretation::set_function(const std::string& name, std::size_t arity, FunctionTable table) {
  if (arity == 0) throw ArityMismatch("function '" + name + "' of arity 0 must be bound as a constant");
  for (const auto& [args, value] : table) {
    if (args.size() != arity) {
      throw ArityMismatch("table row for '" + name + "' has " + std::to_string(args.size()) + " arguments, expected " +
                          std::to_string(arity));
    }
  }
  functions_[{name, arity}] = std::move(table);
}

void Interpretation::set_predicate(const std::string& name, std::size_t arity, SkeletonGraph graph) {
  std::size_t n = degree_of(graph);
  if (n != arity) {
    throw ArityMismatch("predicate " + name + "/" + std::to_string(arity) + " bound to a skeleton of degree " +
                        std::to_string(n));
  }
  predicates_[{name, arity}] = std::move(graph);
}

const std::string* Interpretation::constant(const std::string& name) const {
  auto it = constants_.find(name);
  return it == constants_.end() ? nullptr : &it->second;
}

const FunctionTable* Interpretation::function(const std::string& name, std::size_t arity) const {
  auto it = functions_.find({name, arity});
  return it == functions_.end() ? nullptr : &it->second;
}

const SkeletonGraph* Interpretation::predicate(const std::string& name, std::size_t arity) const {
  auto it = predicates_.find({name, arity});
  return it == predicates_.end() ? nullptr : &it->second;
}

namespace {

std::string str(const json& v, const char* what) {
  if (!v.is_string()) throw GraphError(std::string(what) + " must be a string");
  return v.get<std::string>();
}

std::size_t arity_of(const json& entry) {
  if (!entry.contains("arity") || !entry.at("arity").is_number_unsigned()) {
    throw GraphError("environment entry needs a non-negative integer \"arity\"");
  }
  return entry.at("arity").get<std::size_t>();
}

}  // namespace

Interpretation interpretation_from_json(const json& j) {
  if (!j.is_object()) throw GraphError("environment must be a JSON object");
  Interpretation interp;
  if (j.contains("constants")) {
    if (!j.at("constants").is_object()) throw GraphError("\"constants\" must be an object");
    for (const auto& [name, value] : j.at("constants").items()) interp.set_constant(name, str(value, "constant value"));
  }
  if (j.contains("functions")) {
    for (const auto& entry : j.at("functions")) {
      std::string name = str(entry.at("name"), "function name");
      FunctionTable table;
      for (const auto& row : entry.value("table", json::array())) {
        std::vector<std::string> args;
        for (const auto& a : row.at("args")) args.push_back(str(a, "table argument"));
        table[args] = str(row.at("value"), "table value");
      }
      interp.set_function(name, arity_of(entry), std::move(table));
    }
  }
  if (j.contains("predicates")) {
    for (const auto& entry : j.at("predicates")) {
      std::string name = str(entry.at("name"), "predicate name");
      interp.set_predicate(name, arity_of(entry), skeleton_from_json(entry.at("graph")));
    }
  }
  return interp;
}

json to_json(const Interpretation& interp) {
  json constants = json::object();
  for (const auto& [name, value] : interp.constants()) constants[name] = value;
  json functions = json::array();
  for (const auto& [sym, table] : interp.functions()) {
    json rows = json::array();
    for (const auto& [args, value] : table) rows.push_back({{"args", args}, {"value", value}});
    functions.push_back({{"name", sym.name}, {"arity", sym.arity}, {"table", rows}});
  }
  json predicates = json::array();
  for (const auto& [sym, graph] : interp.predicates()) {
    predicates.push_back({{"name", sym.name}, {"arity", sym.arity}, {"graph", to_json(graph)}});
  }
  return {{"constants", constants}, {"functions", functions}, {"predicates", predicates}};
}

Interpretation load_interpretation(const std::filesystem::path& path) {
  try {
    return interpretation_from_json(read_json_file(path));
  } catch (const json::exception& e) {
    throw GraphError(std::string("malformed environment: ") + e.what());
  }
}

}  // namespace dgsem
