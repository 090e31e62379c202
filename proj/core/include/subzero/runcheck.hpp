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

#include <optional>
#include <vector>

#include "subzero/automaton.hpp"
#include "subzero/numeric.hpp"
#include "subzero/run_graph.hpp"

namespace subzero {

/// A reachable cycle whose largest state is outside Q_all, listed from its
/// first node along the cycle. Empty optional means the condition holds.
using CycleCounterexample = std::optional<std::vector<NodeId>>;

struct AcceptanceReport {
    bool transitions_ok = true;
    std::vector<NodeId> inconsistent_nodes;  // inner nodes without a matching transition
    CycleCounterexample all_counterexample;
    Rational zero_measure;
    std::size_t port_count = 0;  // reachable port nodes

    bool all_condition() const noexcept { return !all_counterexample.has_value(); }
    bool zero_condition() const { return zero_measure == 0; }
    /// Valid partial run: consistent, both conditions hold (ports allowed).
    bool partial_run_ok() const { return transitions_ok && all_condition() && zero_condition(); }
};

/// Only reachable nodes are inspected. Throws StructuralError on dangling ids.
AcceptanceReport check_partial_run(const SubzeroAutomaton& a, const RunGraph& g);

/// Every reachable cycle must have its largest state in Q_all.
CycleCounterexample check_all_condition(const SubzeroAutomaton& a, const RunGraph& g);

/// Probability that a random branch (each child with probability 1/2) never
/// reaches a port and has its largest infinitely-often state in Q_zero.
///
/// Almost every such branch ends in a bottom strongly connected component of
/// inner nodes and visits all of it infinitely often, so the result is the
/// probability of absorption in bottom components whose largest state is in
/// Q_zero, solved exactly.
Rational zero_measure_exact(const SubzeroAutomaton& a, const RunGraph& g);

/// Whether some reachable bottom component without ports has its largest
/// state in Q_zero. Computed from reachability alone, independently of the
/// linear system; equals zero_measure_exact(a, g) != 0.
bool has_reachable_bad_bottom(const SubzeroAutomaton& a, const RunGraph& g);

/// No reachable ports, consistent transitions, and both conditions hold.
bool is_accepting_run(const SubzeroAutomaton& a, const RunGraph& g);

}  // namespace subzero
