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

#include "subzero/automaton.hpp"
#include "subzero/calculus.hpp"
#include "subzero/run_graph.hpp"

namespace subzero {

/// Builds a run graph realizing the conclusion of `d`, rule by rule:
///
///   A   an inner node for the transition with two fresh port nodes.
///   WL  one port p of the premise graph is replaced by a back edge to the
///   SL  root, so the premise run is repeated below that port forever.
///   U   one port r of the left graph is replaced by an edge into the root of
///       the right graph. Port-free sub-derivations that occur several times
///       are realized once and shared.
///   D   two ports of the same state are merged into one node.
///
/// The result has one port node per port occurrence of the conclusion and
/// is compacted (reachable nodes only, breadth-first ids).
/// Throws UsageError when validate_derivation rejects `d`.
RunGraph realize(const SubzeroAutomaton& a, const Derivation& d);

}  // namespace subzero
