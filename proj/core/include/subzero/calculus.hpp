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

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "subzero/automaton.hpp"
#include "subzero/multiset.hpp"

namespace subzero {

/// Judgement "root ->(<= bound) ports": some partial run rooted at `root`
/// whose inner states are all at most `bound` has `ports` as its leaves.
struct Profile {
    StateId root;
    StateId bound;
    Multiset ports;

    friend bool operator==(const Profile&, const Profile&) = default;
    friend auto operator<=>(const Profile&, const Profile&) = default;
};

enum class Rule : std::uint8_t {
    Axiom,       // A
    WeakLoop,    // WL
    StrongLoop,  // SL
    Unify,       // U
    Dedup,       // D
};

std::string_view rule_tag(Rule r);
std::optional<Rule> rule_from_tag(std::string_view tag);

struct Derivation;
using DerivationPtr = std::shared_ptr<const Derivation>;

/// One node of a derivation tree. Premises are immutable and may be shared
/// between several parents; the tree is still the unfolding (sizes count
/// every occurrence).
struct Derivation {
    Rule rule = Rule::Axiom;
    Profile conclusion;
    std::vector<DerivationPtr> premises;   // 0 for A, 1 for WL/SL/D, 2 for U
    std::optional<Transition> transition;  // A only
    std::optional<StateId> port;           // U: unified state, D: deduplicated state
};

enum class RuleErrorKind {
    NotInAutomaton,      // axiom transition not in the transition relation
    RootNotBound,        // looping premise is not of the form p ->(<= p) ...
    PortAbsent,          // required port does not occur in the premise
    SideCondition,       // Q_all / Q_zero side condition fails
    EmptyRemainder,      // SL would leave no port
    RootMismatch,        // U: right premise root differs from the unified port
    NothingToDedup,      // D: multiplicity below two
};

class RuleError : public std::runtime_error {
public:
    RuleError(RuleErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    RuleErrorKind kind() const noexcept { return kind_; }

private:
    RuleErrorKind kind_;
};

DerivationPtr apply_axiom(const SubzeroAutomaton& a, const Transition& t);
DerivationPtr apply_wl(const SubzeroAutomaton& a, DerivationPtr premise);
DerivationPtr apply_sl(const SubzeroAutomaton& a, DerivationPtr premise);
DerivationPtr apply_u(const SubzeroAutomaton& a, DerivationPtr left, DerivationPtr right, StateId r);
DerivationPtr apply_d(const SubzeroAutomaton& a, DerivationPtr premise, StateId r);

/// Conclusion-level versions of the rules; each throws RuleError exactly
/// where the corresponding apply_* does.
Profile conclude_axiom(const SubzeroAutomaton& a, const Transition& t);
Profile conclude_wl(const SubzeroAutomaton& a, const Profile& premise);
Profile conclude_sl(const SubzeroAutomaton& a, const Profile& premise);
Profile conclude_u(const Profile& left, const Profile& right, StateId r);
Profile conclude_d(const Profile& premise, StateId r);

struct DerivationViolation {
    std::string path;  // "root", "root.0", "root.1.0", ...
    std::string message;
};

struct DerivationReport {
    std::vector<DerivationViolation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

DerivationReport validate_derivation(const SubzeroAutomaton& a, const Derivation& d);

/// Number of vertices of the derivation tree (shared premises counted once
/// per occurrence). Saturates at UINT64_MAX.
std::uint64_t derivation_size(const Derivation& d);

/// Human-readable rendering, e.g. "p ->(<=q) {r, r}".
std::string to_string(const SubzeroAutomaton& a, const Profile& p);

}  // namespace subzero
