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

#include "subzero/runcheck.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "subzero/scc.hpp"

namespace subzero {

namespace {

std::vector<std::vector<std::size_t>> successor_lists(const RunGraph& g) {
    std::vector<std::vector<std::size_t>> succ(g.nodes.size());
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
        const auto& n = g.nodes[v];
        if (n.is_inner()) succ[v] = {n.left, n.right};
    }
    return succ;
}

std::vector<bool> reachable_mask(const RunGraph& g) {
    std::vector<bool> mask(g.nodes.size(), false);
    for (NodeId v : reachable_nodes(g)) mask[v] = true;
    return mask;
}

// Shortest cycle through v using only vertices with allowed[] set.
std::optional<std::vector<NodeId>> shortest_cycle(const RunGraph& g, NodeId v, const std::vector<bool>& allowed) {
    constexpr NodeId kNone = static_cast<NodeId>(-1);
    std::vector<NodeId> parent(g.nodes.size(), kNone);
    std::deque<NodeId> queue;
    for (NodeId w : {g.nodes[v].left, g.nodes[v].right}) {
        if (w == v) return std::vector<NodeId>{v};
        if (allowed[w] && parent[w] == kNone) {
            parent[w] = v;
            queue.push_back(w);
        }
    }
    while (!queue.empty()) {
        const NodeId u = queue.front();
        queue.pop_front();
        for (NodeId w : {g.nodes[u].left, g.nodes[u].right}) {
            if (w == v) {
                std::vector<NodeId> path{u};
                while (path.back() != v) path.push_back(parent[path.back()]);
                std::reverse(path.begin(), path.end());
                return path;
            }
            if (allowed[w] && parent[w] == kNone) {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    return std::nullopt;
}

}  // namespace

CycleCounterexample check_all_condition(const SubzeroAutomaton& a, const RunGraph& g) {
    const auto reach = reachable_mask(g);
    const auto succ = successor_lists(g);
    for (StateId q{0}; q.index < a.state_count(); ++q.index) {
        if (a.is_all(q)) continue;
        // A violating branch settles on a cycle whose largest state is q.
        std::vector<bool> allowed(g.nodes.size(), false);
        bool any = false;
        for (std::size_t v = 0; v < g.nodes.size(); ++v) {
            const auto& n = g.nodes[v];
            allowed[v] = reach[v] && n.is_inner() && n.state <= q;
            any = any || (allowed[v] && n.state == q);
        }
        if (!any) continue;
        const auto scc = strongly_connected_components(succ, allowed);
        std::optional<std::vector<NodeId>> best;
        for (std::size_t v = 0; v < g.nodes.size(); ++v) {
            if (!allowed[v] || g.nodes[v].state != q) continue;
            std::vector<bool> in_component(g.nodes.size(), false);
            for (std::size_t w : scc.members[scc.component[v]]) in_component[w] = true;
            auto cycle = shortest_cycle(g, static_cast<NodeId>(v), in_component);
            if (cycle && (!best || cycle->size() < best->size())) best = std::move(cycle);
        }
        if (best) return best;
    }
    return std::nullopt;
}

Rational zero_measure_exact(const SubzeroAutomaton& a, const RunGraph& g) {
    const auto reach = reachable_mask(g);
    const auto succ = successor_lists(g);
    const auto scc = strongly_connected_components(succ, reach);
    const std::size_t n = g.nodes.size();

    // Classify components: bottom inner components are absorbing.
    enum class Kind { Transient, Good, Bad };
    std::vector<Kind> comp_kind(scc.members.size(), Kind::Transient);
    for (std::size_t c = 0; c < scc.members.size(); ++c) {
        const auto& members = scc.members[c];
        if (!g.nodes[members.front()].is_inner()) {
            comp_kind[c] = Kind::Good;  // port: the branch leaves the run
            continue;
        }
        bool bottom = true;
        StateId top{0};
        for (std::size_t v : members) {
            top = max(top, g.nodes[v].state);
            for (std::size_t w : succ[v]) bottom = bottom && scc.component[w] == static_cast<int>(c);
        }
        if (bottom) comp_kind[c] = a.is_zero(top) ? Kind::Bad : Kind::Good;
    }

    // Nodes that can reach a bad component; everything else has value 0.
    std::vector<std::vector<std::size_t>> pred(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (!reach[v]) continue;
        for (std::size_t w : succ[v]) pred[w].push_back(v);
    }
    std::vector<bool> live(n, false);
    std::deque<std::size_t> queue;
    for (std::size_t v = 0; v < n; ++v) {
        if (reach[v] && comp_kind[scc.component[v]] == Kind::Bad) {
            live[v] = true;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        const std::size_t w = queue.front();
        queue.pop_front();
        for (std::size_t v : pred[w]) {
            if (!live[v]) {
                live[v] = true;
                queue.push_back(v);
            }
        }
    }
    auto kind_of = [&](std::size_t v) { return comp_kind[scc.component[v]]; };
    if (!live[g.root]) return Rational(0);
    if (kind_of(g.root) == Kind::Bad) return Rational(1);

    // Unknowns: live transient nodes. x_v - 1/2 x_l - 1/2 x_r = known part.
    std::vector<std::size_t> var(n, static_cast<std::size_t>(-1));
    std::vector<std::size_t> vars;
    for (std::size_t v = 0; v < n; ++v) {
        if (live[v] && kind_of(v) == Kind::Transient) {
            var[v] = vars.size();
            vars.push_back(v);
        }
    }
    const std::size_t m = vars.size();
    std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(m + 1, Rational(0)));
    const Rational half(1, 2);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& node = g.nodes[vars[i]];
        rows[i][i] += 1;
        for (std::size_t w : {static_cast<std::size_t>(node.left), static_cast<std::size_t>(node.right)}) {
            if (var[w] != static_cast<std::size_t>(-1)) {
                rows[i][var[w]] -= half;
            } else if (kind_of(w) == Kind::Bad) {
                rows[i][m] += half;
            }
        }
    }
    // Gauss-Jordan elimination with exact arithmetic; the system is
    // nonsingular because every transient node leaves its component with
    // positive probability.
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        while (pivot < m && rows[pivot][col] == 0) ++pivot;
        std::swap(rows[col], rows[pivot]);
        const Rational inv = 1 / rows[col][col];
        for (std::size_t k = col; k <= m; ++k) rows[col][k] *= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col || rows[r][col] == 0) continue;
            const Rational factor = rows[r][col];
            for (std::size_t k = col; k <= m; ++k) rows[r][k] -= factor * rows[col][k];
        }
    }
    Rational result = rows[var[g.root]][m];
    result.canonicalize();
    return result;
}

bool has_reachable_bad_bottom(const SubzeroAutomaton& a, const RunGraph& g) {
    const auto order = reachable_nodes(g);
    for (NodeId v : order) {
        if (!g.nodes[v].is_inner()) continue;
        // v lies in a bottom component iff everything it reaches reaches it back.
        std::set<NodeId> seen{v};
        std::vector<NodeId> todo{v};
        bool closed = true;
        StateId top = g.nodes[v].state;
        while (!todo.empty() && closed) {
            const NodeId u = todo.back();
            todo.pop_back();
            const auto& n = g.nodes[u];
            if (!n.is_inner()) {
                closed = false;
                break;
            }
            top = max(top, n.state);
            for (NodeId w : {n.left, n.right}) {
                if (seen.insert(w).second) todo.push_back(w);
            }
        }
        if (!closed) continue;
        for (NodeId u : seen) {
            // Does u reach v?
            std::set<NodeId> back{u};
            std::vector<NodeId> stack{u};
            bool hit = (u == v);
            while (!stack.empty() && !hit) {
                const NodeId x = stack.back();
                stack.pop_back();
                for (NodeId w : {g.nodes[x].left, g.nodes[x].right}) {
                    if (w == v) hit = true;
                    if (back.insert(w).second) stack.push_back(w);
                }
            }
            if (!hit) {
                closed = false;
                break;
            }
        }
        if (closed && a.is_zero(top)) return true;
    }
    return false;
}

AcceptanceReport check_partial_run(const SubzeroAutomaton& a, const RunGraph& g) {
    AcceptanceReport report;
    for (NodeId v : reachable_nodes(g)) {
        const auto& n = g.nodes[v];
        if (!n.is_inner()) {
            ++report.port_count;
            continue;
        }
        const Transition t{n.state, n.letter, g.nodes[n.left].state, g.nodes[n.right].state};
        if (!a.has_transition(t)) {
            report.transitions_ok = false;
            report.inconsistent_nodes.push_back(v);
        }
    }
    std::sort(report.inconsistent_nodes.begin(), report.inconsistent_nodes.end());
    report.all_counterexample = check_all_condition(a, g);
    report.zero_measure = zero_measure_exact(a, g);
    return report;
}

bool is_accepting_run(const SubzeroAutomaton& a, const RunGraph& g) {
    const auto report = check_partial_run(a, g);
    return report.port_count == 0 && report.partial_run_ok();
}

}  // namespace subzero
