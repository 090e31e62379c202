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
#include <vector>

#include "subzero/automaton.hpp"
#include "subzero/calculus.hpp"

namespace subzero {

using NodeId = std::uint32_t;

/// Inner nodes carry a state, a letter and two successors; port nodes carry
/// only the state they expect to be plugged with.
struct RunNode {
    enum class Kind : std::uint8_t { Inner, Port };

    Kind kind = Kind::Port;
    StateId state;
    Letter letter;   // inner only
    NodeId left = 0;   // inner only
    NodeId right = 0;  // inner only

    bool is_inner() const noexcept { return kind == Kind::Inner; }

    static RunNode inner(StateId q, Letter a, NodeId l, NodeId r) { return RunNode{Kind::Inner, q, a, l, r}; }
    static RunNode port(StateId q) { return RunNode{Kind::Port, q, Letter{}, 0, 0}; }

    friend bool operator==(const RunNode&, const RunNode&) = default;
};

/// Finite rooted graph whose unfolding from `root` is a regular partial run.
/// Node ids are indices into `nodes`.
struct RunGraph {
    std::vector<RunNode> nodes;
    NodeId root = 0;

    friend bool operator==(const RunGraph&, const RunGraph&) = default;
};

/// Throws StructuralError when the root or a successor id is out of range.
void require_structure(const RunGraph& g);

/// Ids reachable from the root, in breadth-first order (left before right).
std::vector<NodeId> reachable_nodes(const RunGraph& g);

/// Drops unreachable nodes and renumbers the rest in breadth-first order.
RunGraph compact(const RunGraph& g);

/// Profile of the partial run: root state, largest reachable inner state,
/// and one port occurrence per reachable port node.
Profile graph_profile(const SubzeroAutomaton& a, const RunGraph& g);

}  // namespace subzero
