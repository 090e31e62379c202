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

#include "subzero/automaton.hpp"

#include <algorithm>
#include <set>

#include "subzero/errors.hpp"

namespace subzero {

bool SubzeroAutomaton::is_all(StateId q) const {
    return std::find(q_all.begin(), q_all.end(), q) != q_all.end();
}

bool SubzeroAutomaton::is_zero(StateId q) const {
    return std::find(q_zero.begin(), q_zero.end(), q) != q_zero.end();
}

bool SubzeroAutomaton::has_transition(const Transition& t) const {
    return std::find(transitions.begin(), transitions.end(), t) != transitions.end();
}

std::optional<StateId> SubzeroAutomaton::find_state(std::string_view name) const {
    for (std::size_t i = 0; i < state_names.size(); ++i) {
        if (state_names[i] == name) return StateId{static_cast<std::uint32_t>(i)};
    }
    return std::nullopt;
}

std::optional<Letter> SubzeroAutomaton::find_letter(std::string_view name) const {
    for (std::size_t i = 0; i < alphabet_names.size(); ++i) {
        if (alphabet_names[i] == name) return Letter{static_cast<std::uint32_t>(i)};
    }
    return std::nullopt;
}

bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    });
}

namespace {

void check_names(const std::vector<std::string>& names, const char* field, ValidationReport& report) {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < names.size(); ++i) {
        const auto& n = names[i];
        std::string where = std::string(field) + "[" + std::to_string(i) + "]";
        if (!is_identifier(n)) report.violations.push_back({where, "invalid identifier '" + n + "'"});
        if (!seen.insert(n).second) report.violations.push_back({where, "duplicate name '" + n + "'"});
    }
}

void check_state_set(const std::vector<StateId>& set, std::size_t count, const char* field,
                     ValidationReport& report) {
    std::set<StateId> seen;
    for (StateId q : set) {
        if (q.index >= count) {
            report.violations.push_back({field, "unknown state " + std::to_string(q.index)});
        } else if (!seen.insert(q).second) {
            report.violations.push_back({field, "duplicate state " + std::to_string(q.index)});
        }
    }
}

}  // namespace

ValidationReport validate_automaton(const SubzeroAutomaton& a) {
    ValidationReport report;
    check_names(a.state_names, "states", report);
    check_names(a.alphabet_names, "alphabet", report);
    check_state_set(a.q_all, a.state_count(), "q_all", report);
    check_state_set(a.q_zero, a.state_count(), "q_zero", report);

    std::set<Transition> seen;
    for (std::size_t i = 0; i < a.transitions.size(); ++i) {
        const Transition& t = a.transitions[i];
        std::string where = "transitions[" + std::to_string(i) + "]";
        for (StateId q : {t.source, t.left, t.right}) {
            if (q.index >= a.state_count()) {
                report.violations.push_back({where, "unknown state " + std::to_string(q.index)});
            }
        }
        if (t.letter.index >= a.letter_count()) {
            report.violations.push_back({where, "unknown letter " + std::to_string(t.letter.index)});
        }
        if (!seen.insert(t).second) report.violations.push_back({where, "duplicate transition"});
    }
    return report;
}

void require_valid(const SubzeroAutomaton& a) {
    auto report = validate_automaton(a);
    if (!report.ok()) {
        const auto& v = report.violations.front();
        throw UsageError("invalid automaton: " + v.field + ": " + v.message);
    }
}

SubzeroAutomaton canonicalize(SubzeroAutomaton a) {
    auto sort_unique = [](auto& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    sort_unique(a.transitions);
    sort_unique(a.q_all);
    sort_unique(a.q_zero);
    return a;
}

}  // namespace subzero
