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

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "subzero/automaton.hpp"
#include "subzero/calculus.hpp"

namespace subzero {

/// Deduplication normal form of a profile: ports as a set.
struct NormalProfile {
    StateId root;
    StateId bound;
    std::vector<StateId> port_set;  // sorted, no repeats

    friend bool operator==(const NormalProfile&, const NormalProfile&) = default;
    friend auto operator<=>(const NormalProfile&, const NormalProfile&) = default;
};

NormalProfile normalize(const Profile& p);

/// The profile whose ports are exactly `n.port_set`, one occurrence each.
Profile denormalize(const NormalProfile& n, std::size_t state_count);

enum class SaturationOrder {
    /// Breadth-first rounds; provenance is the least rule instance of the
    /// earliest round. This is the canonical order.
    Rounds,
    /// Depth-first worklist. Same closure, different provenance; used to
    /// cross-check order independence.
    Stack,
};

struct EngineOptions {
    /// Port multiplicities above this cap are deduplicated away as soon as
    /// they appear. A cap of 1 is pure set semantics.
    std::uint32_t multiplicity_cap = 2;
    SaturationOrder order = SaturationOrder::Rounds;
};

/// A rule instance over earlier saturation entries.
struct RuleInstance {
    Rule rule = Rule::Axiom;
    std::vector<std::size_t> premises;  // entry indices
    std::optional<Transition> transition;
    std::optional<StateId> port;

    friend bool operator==(const RuleInstance&, const RuleInstance&) = default;
};

/// One derived profile with bounded multiplicities. `profile` is the
/// instance's conclusion with every multiplicity above the cap reduced to
/// the cap (by D steps).
struct SaturationEntry {
    Profile profile;
    std::size_t round = 0;
    RuleInstance instance;
};

class SaturationResult {
public:
    const SubzeroAutomaton& automaton() const noexcept { return automaton_; }
    const EngineOptions& options() const noexcept { return options_; }

    /// All bounded-multiplicity profiles, in discovery order.
    const std::vector<SaturationEntry>& entries() const noexcept { return entries_; }

    /// Normal forms of every derived profile, each mapped to the first entry
    /// that produced it.
    const std::map<NormalProfile, std::size_t>& derived() const noexcept { return derived_; }

    bool contains(const NormalProfile& p) const { return derived_.count(p) != 0; }
    const SaturationEntry* provenance(const NormalProfile& p) const;
    std::optional<std::size_t> find_entry(const Profile& capped) const;

    std::size_t rounds() const noexcept { return rounds_; }

private:
    friend class Saturator;

    SubzeroAutomaton automaton_;
    EngineOptions options_;
    std::vector<SaturationEntry> entries_;
    std::map<Profile, std::size_t> index_;
    std::map<NormalProfile, std::size_t> derived_;
    std::size_t rounds_ = 0;
};

/// Least set of bounded-multiplicity profiles containing the axioms and
/// closed under WL, SL, U and D. Throws UsageError for invalid automata.
SaturationResult saturate(const SubzeroAutomaton& a, const EngineOptions& options = {});

bool derivable(const SaturationResult& s, const Profile& target);
bool derivable(const SubzeroAutomaton& a, const Profile& target, const EngineOptions& options = {});

/// Reconstructs a derivation of the calculus from the provenance of `target`.
/// Its conclusion is exactly denormalize(target). Throws UsageError
/// ("no witness") when target was not derived.
DerivationPtr extract_witness(const SaturationResult& s, const NormalProfile& target);

/// Derivation for a saturation entry; its conclusion equals the entry profile.
DerivationPtr extract_entry_witness(const SaturationResult& s, std::size_t entry);

struct EmptinessVerdict {
    bool nonempty = false;
    std::optional<NormalProfile> profile;  // (q0, q, {}) when nonempty
    DerivationPtr witness;                 // null when empty
};

EmptinessVerdict decide_regular_emptiness(const SaturationResult& s, StateId q0);
EmptinessVerdict decide_regular_emptiness(const SubzeroAutomaton& a, StateId q0, const EngineOptions& options = {});

/// Applies every rule once more to the saturated set and returns the
/// conclusions missing from it; empty means closed.
std::vector<Profile> closure_violations(const SaturationResult& s);

}  // namespace subzero
