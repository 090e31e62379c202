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

// Text, JSON and DOT encodings. JSON and DOT documents carry
// format_version 1.

#include <optional>
#include <string>
#include <string_view>

#include "subzero/automaton.hpp"
#include "subzero/calculus.hpp"
#include "subzero/run_graph.hpp"

namespace subzero {

inline constexpr int kFormatVersion = 1;

struct AutomatonFile {
    SubzeroAutomaton automaton;
    std::optional<StateId> start;

    friend bool operator==(const AutomatonFile&, const AutomatonFile&) = default;
};

/// Directive lines `states`, `alphabet`, `all`, `zero`, `start`, `trans`;
/// `#` starts a comment. `states` and `alphabet` must come before any line
/// that mentions a state or letter. Throws ParseError with the line number.
/// With `validate` set, a document that parses but fails
/// validate_automaton (e.g. a repeated transition) is a ParseError too.
AutomatonFile parse_automaton(std::string_view text, const std::string& source = {}, bool validate = true);

std::string serialize_automaton(const AutomatonFile& file);
std::string serialize_automaton(const SubzeroAutomaton& a);

/// Node ids in the document are positions in `g.nodes`.
std::string run_graph_to_json(const SubzeroAutomaton& a, const RunGraph& g);

/// Accepts ids in any order as long as they are exactly 0..n-1. Throws
/// ParseError on schema errors and unknown names.
RunGraph run_graph_from_json(const SubzeroAutomaton& a, std::string_view text, const std::string& source = {});

/// Shared premises are written out once per occurrence.
std::string derivation_to_json(const SubzeroAutomaton& a, const Derivation& d);

/// Conclusions are read as written, not recomputed; run validate_derivation
/// on the result.
DerivationPtr derivation_from_json(const SubzeroAutomaton& a, std::string_view text, const std::string& source = {});

std::string run_graph_to_dot(const SubzeroAutomaton& a, const RunGraph& g);
std::string derivation_to_dot(const SubzeroAutomaton& a, const Derivation& d);

}  // namespace subzero
