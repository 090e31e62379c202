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

// Brute-force procedures that share no code with the engine, realizer or
// measure solver, used to cross-check them.

#include <cstdint>
#include <map>
#include <set>

#include "subzero/automaton.hpp"
#include "subzero/calculus.hpp"
#include "subzero/run_graph.hpp"

namespace subzero::oracle {

struct EnumerationCaps {
    std::uint32_t size_cap = 12;          // derivation vertices
    std::uint32_t multiplicity_cap = 3;   // per state, in every conclusion
    std::uint32_t depth_cap = 4;          // finite run depth
};

/// Smallest derivation (then first in a fixed enumeration order) of `target`
/// among all derivations within the caps, or null when none exists. Null
/// means "not found within caps", never "not derivable".
DerivationPtr enumerate_derivations(const SubzeroAutomaton& a, const Profile& target, const EnumerationCaps& caps);

/// Every profile derivable within the caps, each with a smallest derivation.
std::map<Profile, DerivationPtr> enumerate_all_derivations(const SubzeroAutomaton& a, const EnumerationCaps& caps);

/// Profiles (root, largest inner state, leaf multiset) of all finite
/// transition-consistent trees rooted at `root` with depth between 1 and
/// `depth_cap`. Depth 0 yields nothing: a bare leaf has no inner root.
std::set<Profile> enumerate_finite_runs(const SubzeroAutomaton& a, StateId root, std::uint32_t depth_cap);

/// Monte Carlo estimate of the probability that a random branch settles in
/// a bottom component whose largest state is in Q_zero. A branch that is
/// still transient after `horizon` steps counts as not settled.
/// Deterministic for a fixed seed.
double mc_zero_measure(const SubzeroAutomaton& a, const RunGraph& g, std::uint64_t samples, std::uint64_t horizon,
                       std::uint64_t seed);

/// The all-condition by enumerating every simple cycle of the reachable
/// inner nodes. Exponential; meant for graphs of a handful of nodes.
bool all_condition_by_simple_cycles(const SubzeroAutomaton& a, const RunGraph& g);

struct RandomAutomatonParams {
    std::uint32_t max_states = 3;
    std::uint32_t max_letters = 2;
    std::uint32_t max_transitions = 6;
    double p_all = 0.6;
    double p_zero = 0.3;
};

/// States s0..s{n-1}, letters a0..; sizes and memberships drawn uniformly.
SubzeroAutomaton random_automaton(const RandomAutomatonParams& params, std::uint64_t seed);

/// Random graph of 1..max_nodes nodes over `a`'s states and letters; the
/// root is inner, about one node in five is a port, and five edges in six
/// point to the node itself or a later one. Transitions are not required to exist in `a`.
RunGraph random_run_graph(const SubzeroAutomaton& a, std::uint32_t max_nodes, std::uint64_t seed);

}  // namespace subzero::oracle
