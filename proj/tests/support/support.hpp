// Copyright 2026 The Subzero Authors
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

#include <initializer_list>
#include <string>

#include "subzero/automaton.hpp"
#include "subzero/calculus.hpp"
#include "subzero/formats.hpp"

namespace subzero::testing {

std::string fixture_path(const std::string& name);
std::string read_text(const std::string& path);
AutomatonFile load_fixture(const std::string& name);

StateId st(const SubzeroAutomaton& a, const std::string& name);
Transition tr(const SubzeroAutomaton& a, const std::string& src, const std::string& letter, const std::string& left,
              const std::string& right);
Multiset ms(const SubzeroAutomaton& a, std::initializer_list<const char*> names);
Profile prof(const SubzeroAutomaton& a, const std::string& root, const std::string& bound,
             std::initializer_list<const char*> ports);

/// Checks `text` against the DOT language grammar (graph, statements,
/// attribute lists, edge chains, subgraphs, quoted/numeral/HTML ids,
/// comments). On failure returns false and, if given, sets `error`.
bool is_valid_dot(const std::string& text, std::string* error = nullptr);

}  // namespace subzero::testing
