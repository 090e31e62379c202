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

#include "subzero/run_graph.hpp"

#include <deque>
#include <string>

#include "subzero/errors.hpp"

namespace subzero {

void require_structure(const RunGraph& g) {
    const auto n = g.nodes.size();
    if (g.root >= n) throw StructuralError("root " + std::to_string(g.root) + " does not exist");
    for (std::size_t i = 0; i < n; ++i) {
        const auto& v = g.nodes[i];
        if (!v.is_inner()) continue;
        if (v.left >= n || v.right >= n) {
            throw StructuralError("node " + std::to_string(i) + " has a dangling successor");
        }
    }
}

std::vector<NodeId> reachable_nodes(const RunGraph& g) {
    require_structure(g);
    std::vector<bool> seen(g.nodes.size(), false);
    std::vector<NodeId> order;
    std::deque<NodeId> queue{g.root};
    seen[g.root] = true;
    while (!queue.empty()) {
        const NodeId v = queue.front();
        queue.pop_front();
        order.push_back(v);
        const auto& node = g.nodes[v];
        if (!node.is_inner()) continue;
        for (NodeId w : {node.left, node.right}) {
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    return order;
}

RunGraph compact(const RunGraph& g) {
    const auto order = reachable_nodes(g);
    std::vector<NodeId> rename(g.nodes.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) rename[order[i]] = static_cast<NodeId>(i);
    RunGraph out;
    out.root = 0;
    out.nodes.reserve(order.size());
    for (NodeId v : order) {
        RunNode node = g.nodes[v];
        if (node.is_inner()) {
            node.left = rename[node.left];
            node.right = rename[node.right];
        }
        out.nodes.push_back(node);
    }
    return out;
}

Profile graph_profile(const SubzeroAutomaton& a, const RunGraph& g) {
    const auto order = reachable_nodes(g);
    const auto& root = g.nodes[g.root];
    if (!root.is_inner()) throw UsageError("run graph root is a port, not a partial run");
    Profile p{root.state, root.state, Multiset(a.state_count())};
    for (NodeId v : order) {
        const auto& node = g.nodes[v];
        if (node.is_inner()) {
            p.bound = max(p.bound, node.state);
        } else {
            p.ports.add(node.state);
        }
    }
    return p;
}

}  // namespace subzero
