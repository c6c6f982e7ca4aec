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

#pragma once

// JSON form of annotated graphs:
//   {"nodes": [{"id": s, "anno": [s...]}], "edges": [{"from": s, "to": s, "anno": [s...]}]}
// Placeholders are written "*1", "*2", ...

#include <filesystem>
#include <string>

#include <json.hpp>

#include "dgsem/graph.hpp"

namespace dgsem {

using json = nlohmann::json;

/// "*i" with i >= 1 becomes a placeholder, anything else stays a string.
SkelItem parse_skel_item(const std::string& text);
std::string to_string(const SkelItem& item);

/// True for strings of the form "*<digits>".
bool looks_like_placeholder(const std::string& text);

/// Object-level mode: placeholder strings are rejected with GraphError.
AnnotatedGraph graph_from_json(const json& j);
/// Skeleton mode. Checks the degree property.
SkeletonGraph skeleton_from_json(const json& j);

json to_json(const AnnotatedGraph& g);
json to_json(const SkeletonGraph& s);

/// Reads and parses a JSON file; syntax errors become ParseError.
json read_json_file(const std::filesystem::path& path);
json parse_json_text(const std::string& text);

AnnotatedGraph load_graph(const std::filesystem::path& path);
SkeletonGraph load_skeleton(const std::filesystem::path& path);

}  // namespace dgsem
