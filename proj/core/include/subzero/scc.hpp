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
#include <vector>

namespace subzero {

struct SccDecomposition {
    std::vector<int> component;                 // per vertex, -1 if excluded
    std::vector<std::vector<std::size_t>> members;  // per component, ascending
};

/// Tarjan's algorithm (iterative) over the vertices with `included[v]`;
/// edges to excluded vertices are ignored. Components are numbered in
/// reverse topological order (sinks first).
SccDecomposition strongly_connected_components(const std::vector<std::vector<std::size_t>>& successors,
                                               const std::vector<bool>& included);

}  // namespace subzero
