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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace subzero {

/// Index of a state. The priority order on states is the numeric order of
/// indices: states are declared in ascending priority.
struct StateId {
    std::uint32_t index = 0;

    friend constexpr auto operator<=>(StateId, StateId) = default;
};

struct Letter {
    std::uint32_t index = 0;

    friend constexpr auto operator<=>(Letter, Letter) = default;
};

inline constexpr StateId max(StateId a, StateId b) { return a < b ? b : a; }

struct Transition {
    StateId source;
    Letter letter;
    StateId left;
    StateId right;

    friend constexpr auto operator<=>(const Transition&, const Transition&) = default;
};

/// A nondeterministic binary-tree automaton with two acceptance sets:
/// every branch must settle on a maximal state in `q_all`, and the branches
/// settling on a maximal state in `q_zero` must have probability zero.
///
/// The struct is a plain aggregate so that malformed automata can be
/// represented and reported by validate_automaton(). Operations that need a
/// well-formed automaton check it and throw UsageError otherwise.
struct SubzeroAutomaton {
    std::vector<std::string> state_names;  // ascending priority
    std::vector<std::string> alphabet_names;
    std::vector<Transition> transitions;
    std::vector<StateId> q_all;
    std::vector<StateId> q_zero;

    std::size_t state_count() const noexcept { return state_names.size(); }
    std::size_t letter_count() const noexcept { return alphabet_names.size(); }

    bool is_all(StateId q) const;
    bool is_zero(StateId q) const;
    bool has_transition(const Transition& t) const;

    std::optional<StateId> find_state(std::string_view name) const;
    std::optional<Letter> find_letter(std::string_view name) const;

    const std::string& name(StateId q) const { return state_names.at(q.index); }
    const std::string& name(Letter a) const { return alphabet_names.at(a.index); }

    friend bool operator==(const SubzeroAutomaton&, const SubzeroAutomaton&) = default;
};

struct Violation {
    std::string field;   // e.g. "q_zero", "transitions[3]"
    std::string message; // e.g. "unknown state 7"

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

ValidationReport validate_automaton(const SubzeroAutomaton& a);

/// Throws UsageError describing the first violation, if any.
void require_valid(const SubzeroAutomaton& a);

/// Identifiers accepted by the text format: [A-Za-z0-9_]+.
bool is_identifier(std::string_view s);

/// Sorts transitions and the acceptance sets into canonical order and drops
/// duplicates. Names are untouched.
SubzeroAutomaton canonicalize(SubzeroAutomaton a);

}  // namespace subzero
