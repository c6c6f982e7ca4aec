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

// Recursive-descent parser for the ASCII formula grammar:
//
//   formula := impl
//   impl    := quant ('->' impl)?
//   quant   := ('forall' | 'exists') IDENT '.' quant | binary
//   binary  := unary (('&' | '|') unary)*
//   unary   := '~' unary | ('forall' | 'exists') IDENT '.' quant | primary
//   primary := 'true' | 'false' | '(' impl ')' | '[' impl ']'
//            | term '=' term | IDENT args? | GRAPH args?
//
// An identifier is a variable when an enclosing quantifier binds it or when
// it looks like one (v, w, x, y or z followed by digits, '_' or '\'').
// GRAPH is a JSON graph object whose strings are terms or placeholders.

#include <string>
#include <string_view>

#include "dgsem/formula.hpp"

namespace dgsem {

Formula parse_formula(std::string_view text);
Term parse_term(std::string_view text);
TypedDiscussionGraph parse_graph_literal(std::string_view text);

/// True for identifiers read as variables when unbound.
bool is_variable_name(std::string_view name);

}  // namespace dgsem
