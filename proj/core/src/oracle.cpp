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

#include "subzero/oracle.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <string>

#include "subzero/errors.hpp"

namespace subzero::oracle {

namespace {

bool within_cap(const Profile& p, std::uint32_t cap) {
    return std::all_of(p.ports.counts().begin(), p.ports.counts().end(),
                       [&](const auto& kv) { return kv.second <= cap; });
}

// Size-layered search: layer s holds the profiles whose smallest derivation
// has exactly s vertices. A derivation of size s only uses premises of
// smaller size, and swapping a premise for a smaller derivation of the same
// conclusion keeps every conclusion within the caps.
std::map<Profile, DerivationPtr> layered_search(const SubzeroAutomaton& a, const EnumerationCaps& caps,
                                                const Profile* target) {
    require_valid(a);
    if (caps.size_cap < 1 || caps.multiplicity_cap < 1) throw UsageError("enumeration caps must be at least 1");

    std::map<Profile, DerivationPtr> best;
    std::vector<std::vector<Profile>> layers(1);  // layers[0] unused

    auto offer = [&](std::vector<Profile>& layer, const std::function<DerivationPtr()>& make, const Profile& c) {
        if (!within_cap(c, caps.multiplicity_cap) || best.count(c)) return;
        best.emplace(c, make());
        layer.push_back(c);
    };
    auto found = [&] { return target && best.count(*target); };

    std::vector<Transition> transitions = a.transitions;
    std::sort(transitions.begin(), transitions.end());
    layers.emplace_back();
    for (const Transition& t : transitions) {
        offer(layers[1], [&] { return apply_axiom(a, t); }, conclude_axiom(a, t));
    }

    for (std::uint32_t size = 2; size <= caps.size_cap && !found(); ++size) {
        std::vector<Profile> layer;
        for (const Profile& p : layers[size - 1]) {
            const DerivationPtr d = best.at(p);
            try {
                offer(layer, [&] { return apply_wl(a, d); }, conclude_wl(a, p));
            } catch (const RuleError&) {
            }
            try {
                offer(layer, [&] { return apply_sl(a, d); }, conclude_sl(a, p));
            } catch (const RuleError&) {
            }
            for (const auto& [r, n] : p.ports.counts()) {
                if (n >= 2) offer(layer, [&, r = r] { return apply_d(a, d, r); }, conclude_d(p, r));
            }
        }
        for (std::uint32_t i = 1; i + 1 < size; ++i) {
            const std::uint32_t j = size - 1 - i;
            for (const Profile& left : layers[i]) {
                for (const Profile& right : layers[j]) {
                    const StateId r = right.root;
                    if (!left.ports.contains(r)) continue;
                    offer(
                        layer, [&] { return apply_u(a, best.at(left), best.at(right), r); },
                        conclude_u(left, right, r));
                }
            }
        }
        layers.push_back(std::move(layer));
    }
    return best;
}

}  // namespace

DerivationPtr enumerate_derivations(const SubzeroAutomaton& a, const Profile& target, const EnumerationCaps& caps) {
    auto best = layered_search(a, caps, &target);
    auto it = best.find(target);
    return it == best.end() ? nullptr : it->second;
}

std::map<Profile, DerivationPtr> enumerate_all_derivations(const SubzeroAutomaton& a, const EnumerationCaps& caps) {
    return layered_search(a, caps, nullptr);
}

std::set<Profile> enumerate_finite_runs(const SubzeroAutomaton& a, StateId root, std::uint32_t depth_cap) {
    require_valid(a);
    if (root.index >= a.state_count()) throw UsageError("unknown root state");
    const std::size_t n = a.state_count();
    // Leaf counts are packed into one word, depth_cap + 1 bits per state.
    const std::size_t width = depth_cap + 1;
    if (n * width > 64) throw UsageError("finite run enumeration: automaton too large for depth " + std::to_string(depth_cap));

    using Shape = std::pair<std::uint32_t, std::uint64_t>;  // (largest inner state, packed leaf counts)
    auto leaf = [&](StateId q) { return std::uint64_t{1} << (q.index * width); };

    // shapes[d][s]: trees of depth at most d rooted at s.
    std::vector<std::vector<std::set<Shape>>> shapes(depth_cap + 1, std::vector<std::set<Shape>>(n));
    for (std::uint32_t d = 1; d <= depth_cap; ++d) {
        for (const Transition& t : a.transitions) {
            std::vector<Shape> lefts{{0, leaf(t.left)}};
            std::vector<Shape> rights{{0, leaf(t.right)}};
            lefts.insert(lefts.end(), shapes[d - 1][t.left.index].begin(), shapes[d - 1][t.left.index].end());
            rights.insert(rights.end(), shapes[d - 1][t.right.index].begin(), shapes[d - 1][t.right.index].end());
            auto& out = shapes[d][t.source.index];
            for (const auto& [lb, lc] : lefts) {
                for (const auto& [rb, rc] : rights) {
                    out.emplace(std::max({t.source.index, lb, rb}), lc + rc);
                }
            }
        }
    }

    std::set<Profile> profiles;
    if (depth_cap == 0) return profiles;
    const std::uint64_t mask = (width >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
    for (const auto& [bound, packed] : shapes[depth_cap][root.index]) {
        Profile p{root, StateId{bound}, Multiset(n)};
        for (std::uint32_t q = 0; q < n; ++q) p.ports.set(StateId{q}, (packed >> (q * width)) & mask);
        profiles.insert(std::move(p));
    }
    return profiles;
}

namespace {

// Closure-based bottom component detection, one reachability pass per node.
std::vector<int> bottom_labels(const SubzeroAutomaton& a, const RunGraph& g) {
    const std::size_t n = g.nodes.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> todo{s};
        reach[s][s] = true;
        while (!todo.empty()) {
            const std::size_t u = todo.back();
            todo.pop_back();
            if (!g.nodes[u].is_inner()) continue;
            for (std::size_t w : {g.nodes[u].left, g.nodes[u].right}) {
                if (!reach[s][w]) {
                    reach[s][w] = true;
                    todo.push_back(w);
                }
            }
        }
    }
    // 0 transient, 1 good bottom, 2 bad bottom, 3 port
    std::vector<int> label(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        if (!g.nodes[v].is_inner()) {
            label[v] = 3;
            continue;
        }
        bool bottom = true;
        StateId top = g.nodes[v].state;
        for (std::size_t w = 0; w < n && bottom; ++w) {
            if (!reach[v][w]) continue;
            bottom = reach[w][v];
            top = max(top, g.nodes[w].state);
        }
        if (bottom) label[v] = a.is_zero(top) ? 2 : 1;
    }
    return label;
}

}  // namespace

double mc_zero_measure(const SubzeroAutomaton& a, const RunGraph& g, std::uint64_t samples, std::uint64_t horizon,
                       std::uint64_t seed) {
    require_structure(g);
    if (samples == 0) return 0.0;
    const auto label = bottom_labels(a, g);
    std::mt19937_64 rng(seed);
    std::uint64_t bits = 0;
    int left_in_word = 0;
    auto coin = [&] {
        if (left_in_word == 0) {
            bits = rng();
            left_in_word = 64;
        }
        const bool b = bits & 1;
        bits >>= 1;
        --left_in_word;
        return b;
    };

    std::uint64_t bad = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        NodeId v = g.root;
        for (std::uint64_t step = 0; step < horizon && label[v] == 0; ++step) {
            v = coin() ? g.nodes[v].right : g.nodes[v].left;
        }
        if (label[v] == 2) ++bad;
    }
    return static_cast<double>(bad) / static_cast<double>(samples);
}

bool all_condition_by_simple_cycles(const SubzeroAutomaton& a, const RunGraph& g) {
    const auto order = reachable_nodes(g);
    std::vector<bool> usable(g.nodes.size(), false);
    for (NodeId v : order) usable[v] = g.nodes[v].is_inner();

    bool ok = true;
    std::vector<bool> on_path(g.nodes.size(), false);
    // Cycles are enumerated from their smallest node id.
    std::function<void(NodeId, NodeId, StateId)> extend = [&](NodeId start, NodeId v, StateId top) {
        for (NodeId w : {g.nodes[v].left, g.nodes[v].right}) {
            if (!ok) return;
            if (w == start) {
                if (!a.is_all(top)) ok = false;
            } else if (w > start && usable[w] && !on_path[w]) {
                on_path[w] = true;
                extend(start, w, max(top, g.nodes[w].state));
                on_path[w] = false;
            }
        }
    };
    for (NodeId s : order) {
        if (!usable[s]) continue;
        on_path[s] = true;
        extend(s, s, g.nodes[s].state);
        on_path[s] = false;
        if (!ok) break;
    }
    return ok;
}

namespace {

std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

bool chance(std::mt19937_64& rng, double p) {
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0) < p;
}

}  // namespace

SubzeroAutomaton random_automaton(const RandomAutomatonParams& params, std::uint64_t seed) {
    if (params.max_states == 0 || params.max_letters == 0) throw UsageError("random automaton needs states and letters");
    std::mt19937_64 rng(seed);
    SubzeroAutomaton a;
    const auto n = static_cast<std::uint32_t>(1 + below(rng, params.max_states));
    const auto k = static_cast<std::uint32_t>(1 + below(rng, params.max_letters));
    for (std::uint32_t i = 0; i < n; ++i) a.state_names.push_back("s" + std::to_string(i));
    for (std::uint32_t i = 0; i < k; ++i) a.alphabet_names.push_back("a" + std::to_string(i));
    for (std::uint32_t i = 0; i < n; ++i) {
        if (chance(rng, params.p_all)) a.q_all.push_back(StateId{i});
        if (chance(rng, params.p_zero)) a.q_zero.push_back(StateId{i});
    }
    const std::uint64_t possible = std::uint64_t{n} * k * n * n;
    const auto wanted = std::min<std::uint64_t>(below(rng, params.max_transitions + 1), possible);
    std::set<Transition> ts;
    while (ts.size() < wanted) {
        ts.insert(Transition{StateId{static_cast<std::uint32_t>(below(rng, n))},
                             Letter{static_cast<std::uint32_t>(below(rng, k))},
                             StateId{static_cast<std::uint32_t>(below(rng, n))},
                             StateId{static_cast<std::uint32_t>(below(rng, n))}});
    }
    a.transitions.assign(ts.begin(), ts.end());
    return a;
}

namespace {

// Uniform edges make one strongly connected blob; mostly-forward edges give
// several bottom components and hence fractional measures.
NodeId child(std::mt19937_64& rng, std::uint32_t v, std::uint32_t n) {
    if (below(rng, 6) == 0) return static_cast<NodeId>(below(rng, n));
    return static_cast<NodeId>(v + below(rng, n - v));
}

}  // namespace

RunGraph random_run_graph(const SubzeroAutomaton& a, std::uint32_t max_nodes, std::uint64_t seed) {
    if (max_nodes == 0 || a.state_count() == 0 || a.letter_count() == 0) {
        throw UsageError("random run graph needs nodes, states and letters");
    }
    std::mt19937_64 rng(seed);
    const auto n = static_cast<std::uint32_t>(1 + below(rng, max_nodes));
    RunGraph g;
    g.root = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
        const StateId q{static_cast<std::uint32_t>(below(rng, a.state_count()))};
        if (v != 0 && below(rng, 5) == 0) {
            g.nodes.push_back(RunNode::port(q));
        } else {
            const Letter l{static_cast<std::uint32_t>(below(rng, a.letter_count()))};
            const NodeId left = child(rng, v, n);
            g.nodes.push_back(RunNode::inner(q, l, left, child(rng, v, n)));
        }
    }
    return g;
}

}  // namespace subzero::oracle
