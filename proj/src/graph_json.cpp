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

#include "dgsem/graph_json.hpp"

#include <fstream>
#include <sstream>

namespace dgsem {

namespace {

const json& field(const json& obj, const char* key, const char* what) {
  if (!obj.is_object() || !obj.contains(key)) throw GraphError(std::string(what) + " is missing \"" + key + "\"");
  return obj.at(key);
}

std::string string_of(const json& v, const char* what) {
  if (!v.is_string()) throw GraphError(std::string(what) + " must be a string");
  return v.get<std::string>();
}

template <class Item, class Convert>
BasicGraph<Item> read_graph(const json& j, Convert convert) {
  if (!j.is_object()) throw GraphError("graph must be a JSON object");
  BasicGraph<Item> g;
  auto annos = [&](const json& obj) {
    std::set<Item> out;
    if (!obj.contains("anno")) return out;
    const json& list = obj.at("anno");
    if (!list.is_array()) throw GraphError("\"anno\" must be an array");
    for (const auto& a : list) out.insert(convert(string_of(a, "annotation")));
    return out;
  };
  if (j.contains("nodes")) {
    const json& nodes = j.at("nodes");
    if (!nodes.is_array()) throw GraphError("\"nodes\" must be an array");
    for (const auto& n : nodes) {
      Item id = convert(string_of(field(n, "id", "node"), "node id"));
      if (g.has_node(id)) throw GraphError("duplicate node '" + string_of(n.at("id"), "node id") + "'");
      g.add_node(id, annos(n));
    }
  }
  if (j.contains("edges")) {
    const json& edges = j.at("edges");
    if (!edges.is_array()) throw GraphError("\"edges\" must be an array");
    for (const auto& e : edges) {
      Item from = convert(string_of(field(e, "from", "edge"), "edge source"));
      Item to = convert(string_of(field(e, "to", "edge"), "edge target"));
      if (!g.has_node(from) || !g.has_node(to)) {
        throw GraphError("edge " + e.at("from").get<std::string>() + " -> " + e.at("to").get<std::string>() +
                         " has an endpoint that is not a node");
      }
      if (g.has_edge(from, to)) {
        throw GraphError("duplicate edge " + e.at("from").get<std::string>() + " -> " + e.at("to").get<std::string>());
      }
      g.add_edge(from, to, annos(e));
    }
  }
  return g;
}

template <class Item>
json write_graph(const BasicGraph<Item>& g) {
  auto str = [](const Item& item) {
    if constexpr (std::is_same_v<Item, std::string>) {
      return item;
    } else {
      return to_string(item);
    }
  };
  auto list = [&](const std::set<Item>& annos) {
    json out = json::array();
    for (const auto& a : annos) out.push_back(str(a));
    return out;
  };
  json nodes = json::array();
  for (const auto& [node, anno] : g.nodes()) nodes.push_back({{"id", str(node)}, {"anno", list(anno)}});
  json edges = json::array();
  for (const auto& [edge, anno] : g.edges()) {
    edges.push_back({{"from", str(edge.first)}, {"to", str(edge.second)}, {"anno", list(anno)}});
  }
  return {{"nodes", nodes}, {"edges", edges}};
}

}  // namespace

bool looks_like_placeholder(const std::string& text) {
  if (text.size() < 2 || text[0] != '*') return false;
  return std::all_of(text.begin() + 1, text.end(), [](char c) { return c >= '0' && c <= '9'; });
}

SkelItem parse_skel_item(const std::string& text) {
  if (!looks_like_placeholder(text)) return text;
  if (text.size() > 10) throw GraphError("placeholder index too large: " + text);
  std::size_t index = std::stoul(text.substr(1));
  if (index == 0) throw GraphError("placeholder indices start at *1");
  return Placeholder{index};
}

std::string to_string(const SkelItem& item) {
  if (const auto* p = std::get_if<Placeholder>(&item)) return "*" + std::to_string(p->index);
  return std::get<std::string>(item);
}

AnnotatedGraph graph_from_json(const json& j) {
  return read_graph<std::string>(j, [](const std::string& s) {
    if (looks_like_placeholder(s)) throw GraphError("placeholder '" + s + "' in an object-level graph");
    return s;
  });
}

SkeletonGraph skeleton_from_json(const json& j) {
  SkeletonGraph s = read_graph<SkelItem>(j, parse_skel_item);
  degree_of(s);
  return s;
}

json to_json(const AnnotatedGraph& g) { return write_graph(g); }
json to_json(const SkeletonGraph& s) { return write_graph(s); }

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), e.byte == 0 ? 0 : e.byte - 1, {});
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

AnnotatedGraph load_graph(const std::filesystem::path& path) { return graph_from_json(read_json_file(path)); }
SkeletonGraph load_skeleton(const std::filesystem::path& path) { return skeleton_from_json(read_json_file(path)); }

}  // namespace dgsem
