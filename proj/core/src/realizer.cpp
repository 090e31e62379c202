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

#include "subzero/realizer.hpp"

#include <algorithm>
#include <unordered_map>

#include "subzero/errors.hpp"

namespace subzero {

namespace {

struct Partial {
    NodeId root = 0;
    std::vector<NodeId> ports;  // live port nodes, in creation order
};

class Realizer {
public:
    RunGraph run(const Derivation& d) {
        Partial top = go(d);
        return compact(RunGraph{std::move(pool_), top.root});
    }

private:
    NodeId push(RunNode n) {
        pool_.push_back(n);
        return static_cast<NodeId>(pool_.size() - 1);
    }

    void redirect(NodeId from, NodeId to) {
        for (auto& n : pool_) {
            if (!n.is_inner()) continue;
            if (n.left == from) n.left = to;
            if (n.right == from) n.right = to;
        }
    }

    std::vector<NodeId>::iterator find_port(Partial& p, StateId q, std::vector<NodeId>::iterator from) {
        return std::find_if(from, p.ports.end(), [&](NodeId v) { return pool_[v].state == q; });
    }

    Partial go(const Derivation& d) {
        if (auto it = shared_.find(&d); it != shared_.end()) return Partial{it->second, {}};
        Partial out;
        switch (d.rule) {
            case Rule::Axiom: {
                const Transition& t = *d.transition;
                const NodeId l = push(RunNode::port(t.left));
                const NodeId r = push(RunNode::port(t.right));
                out.root = push(RunNode::inner(t.source, t.letter, l, r));
                out.ports = {l, r};
                break;
            }
            case Rule::WeakLoop:
            case Rule::StrongLoop: {
                out = go(*d.premises[0]);
                const StateId p = d.conclusion.root;
                auto port = find_port(out, p, out.ports.begin());
                redirect(*port, out.root);
                out.ports.erase(port);
                break;
            }
            case Rule::Dedup: {
                out = go(*d.premises[0]);
                auto first = find_port(out, *d.port, out.ports.begin());
                auto second = find_port(out, *d.port, std::next(first));
                redirect(*second, *first);
                out.ports.erase(second);
                break;
            }
            case Rule::Unify: {
                out = go(*d.premises[0]);
                Partial right = go(*d.premises[1]);
                auto port = find_port(out, *d.port, out.ports.begin());
                redirect(*port, right.root);
                out.ports.erase(port);
                out.ports.insert(out.ports.end(), right.ports.begin(), right.ports.end());
                break;
            }
        }
        if (out.ports.empty()) shared_.emplace(&d, out.root);
        return out;
    }

    std::vector<RunNode> pool_;
    std::unordered_map<const Derivation*, NodeId> shared_;
};

}  // namespace

RunGraph realize(const SubzeroAutomaton& a, const Derivation& d) {
    require_valid(a);
    auto report = validate_derivation(a, d);
    if (!report.ok()) {
        const auto& v = report.violations.front();
        throw UsageError("invalid derivation at " + v.path + ": " + v.message);
    }
    return Realizer().run(d);
}

}  // namespace subzero
