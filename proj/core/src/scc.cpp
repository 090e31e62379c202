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

#include "subzero/scc.hpp"

#include <algorithm>

namespace subzero {

SccDecomposition strongly_connected_components(const std::vector<std::vector<std::size_t>>& successors,
                                               const std::vector<bool>& included) {
    const std::size_t n = successors.size();
    constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);

    SccDecomposition out;
    out.component.assign(n, -1);
    std::vector<std::size_t> number(n, kUnvisited);
    std::vector<std::size_t> lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::size_t counter = 0;

    struct Frame {
        std::size_t vertex;
        std::size_t next_edge;
    };
    std::vector<Frame> call;

    for (std::size_t start = 0; start < n; ++start) {
        if (!included[start] || number[start] != kUnvisited) continue;
        call.push_back({start, 0});
        number[start] = lowlink[start] = counter++;
        stack.push_back(start);
        on_stack[start] = true;

        while (!call.empty()) {
            Frame& f = call.back();
            const std::size_t v = f.vertex;
            if (f.next_edge < successors[v].size()) {
                const std::size_t w = successors[v][f.next_edge++];
                if (!included[w]) continue;
                if (number[w] == kUnvisited) {
                    number[w] = lowlink[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[v] = std::min(lowlink[v], number[w]);
                }
                continue;
            }
            if (lowlink[v] == number[v]) {
                std::vector<std::size_t> scc;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    out.component[w] = static_cast<int>(out.members.size());
                    scc.push_back(w);
                } while (w != v);
                std::sort(scc.begin(), scc.end());
                out.members.push_back(std::move(scc));
            }
            call.pop_back();
            if (!call.empty()) {
                const std::size_t parent = call.back().vertex;
                lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
            }
        }
    }
    return out;
}

}  // namespace subzero
