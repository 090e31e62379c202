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

#include "subzero/calculus.hpp"

#include <array>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "subzero/errors.hpp"

namespace subzero {

namespace {

constexpr std::array<std::string_view, 5> kTags = {"A", "WL", "SL", "U", "D"};

std::string state_label(const SubzeroAutomaton& a, StateId q) {
    return q.index < a.state_count() ? a.name(q) : "#" + std::to_string(q.index);
}

void require_loop_premise(const SubzeroAutomaton& a, const Profile& p, const char* rule) {
    if (p.root != p.bound) {
        throw RuleError(RuleErrorKind::RootNotBound, std::string(rule) + ": premise root " + state_label(a, p.root) +
                                                         " differs from its bound " + state_label(a, p.bound));
    }
    if (!p.ports.contains(p.root)) {
        throw RuleError(RuleErrorKind::PortAbsent,
                        std::string(rule) + ": premise has no port " + state_label(a, p.root));
    }
}

}  // namespace

std::string_view rule_tag(Rule r) { return kTags.at(static_cast<std::size_t>(r)); }

std::optional<Rule> rule_from_tag(std::string_view tag) {
    for (std::size_t i = 0; i < kTags.size(); ++i) {
        if (kTags[i] == tag) return static_cast<Rule>(i);
    }
    return std::nullopt;
}

Profile conclude_axiom(const SubzeroAutomaton& a, const Transition& t) {
    if (!a.has_transition(t)) {
        throw RuleError(RuleErrorKind::NotInAutomaton, "A: transition is not in the automaton");
    }
    return Profile{t.source, t.source, Multiset(a.state_count(), {t.left, t.right})};
}

Profile conclude_wl(const SubzeroAutomaton& a, const Profile& premise) {
    require_loop_premise(a, premise, "WL");
    const StateId p = premise.root;
    if (!a.is_all(p) || a.is_zero(p)) {
        throw RuleError(RuleErrorKind::SideCondition,
                        "WL: side condition fails, " + state_label(a, p) + " must be in Q_all and not in Q_zero");
    }
    return Profile{p, p, mset_remove_one(premise.ports, p)};
}

Profile conclude_sl(const SubzeroAutomaton& a, const Profile& premise) {
    require_loop_premise(a, premise, "SL");
    const StateId p = premise.root;
    if (!a.is_all(p)) {
        throw RuleError(RuleErrorKind::SideCondition,
                        "SL: side condition fails, " + state_label(a, p) + " must be in Q_all");
    }
    Multiset rest = mset_remove_one(premise.ports, p);
    if (rest.empty()) {
        throw RuleError(RuleErrorKind::EmptyRemainder, "SL: strong looping requires a remaining port");
    }
    return Profile{p, p, std::move(rest)};
}

Profile conclude_u(const Profile& left, const Profile& right, StateId r) {
    if (!left.ports.contains(r)) {
        throw RuleError(RuleErrorKind::PortAbsent, "U: left premise has no port " + std::to_string(r.index));
    }
    if (right.root != r) {
        throw RuleError(RuleErrorKind::RootMismatch, "U: right premise root differs from the unified port");
    }
    return Profile{left.root, max(max(left.bound, right.bound), r),
                   mset_sum(mset_remove_one(left.ports, r), right.ports)};
}

Profile conclude_d(const Profile& premise, StateId r) {
    if (premise.ports.count(r) < 2) {
        throw RuleError(RuleErrorKind::NothingToDedup, "D: nothing to deduplicate");
    }
    Profile out = premise;
    out.ports.set(r, premise.ports.count(r) - 1);
    return out;
}

DerivationPtr apply_axiom(const SubzeroAutomaton& a, const Transition& t) {
    return std::make_shared<const Derivation>(Derivation{Rule::Axiom, conclude_axiom(a, t), {}, t, std::nullopt});
}

DerivationPtr apply_wl(const SubzeroAutomaton& a, DerivationPtr premise) {
    Profile c = conclude_wl(a, premise->conclusion);
    return std::make_shared<const Derivation>(
        Derivation{Rule::WeakLoop, std::move(c), {std::move(premise)}, std::nullopt, std::nullopt});
}

DerivationPtr apply_sl(const SubzeroAutomaton& a, DerivationPtr premise) {
    Profile c = conclude_sl(a, premise->conclusion);
    return std::make_shared<const Derivation>(
        Derivation{Rule::StrongLoop, std::move(c), {std::move(premise)}, std::nullopt, std::nullopt});
}

DerivationPtr apply_u(const SubzeroAutomaton& a, DerivationPtr left, DerivationPtr right, StateId r) {
    if (left->conclusion.ports.universe() != a.state_count() || right->conclusion.ports.universe() != a.state_count()) {
        throw UsageError("U: premises belong to a different automaton");
    }
    Profile c = conclude_u(left->conclusion, right->conclusion, r);
    return std::make_shared<const Derivation>(
        Derivation{Rule::Unify, std::move(c), {std::move(left), std::move(right)}, std::nullopt, r});
}

DerivationPtr apply_d(const SubzeroAutomaton&, DerivationPtr premise, StateId r) {
    Profile c = conclude_d(premise->conclusion, r);
    return std::make_shared<const Derivation>(Derivation{Rule::Dedup, std::move(c), {std::move(premise)}, std::nullopt, r});
}

namespace {

class Validator {
public:
    explicit Validator(const SubzeroAutomaton& a) : a_(a) {}

    void visit(const Derivation& d, const std::string& path, DerivationReport& report) {
        if (!checked_.insert(&d).second) return;
        check_node(d, path, report);
        for (std::size_t i = 0; i < d.premises.size(); ++i) {
            if (d.premises[i]) visit(*d.premises[i], path + "." + std::to_string(i), report);
        }
    }

private:
    void check_node(const Derivation& d, const std::string& path, DerivationReport& report) {
        auto fail = [&](std::string msg) { report.violations.push_back({path, std::move(msg)}); };

        const std::size_t want = d.rule == Rule::Axiom ? 0 : d.rule == Rule::Unify ? 2 : 1;
        if (d.premises.size() != want) {
            fail(std::string(rule_tag(d.rule)) + " expects " + std::to_string(want) + " premises, has " +
                 std::to_string(d.premises.size()));
            return;
        }
        for (const auto& p : d.premises) {
            if (!p) {
                fail("missing premise");
                return;
            }
        }
        if (d.conclusion.ports.universe() != a_.state_count() || d.conclusion.root.index >= a_.state_count() ||
            d.conclusion.bound.index >= a_.state_count()) {
            fail("conclusion refers to states outside the automaton");
            return;
        }
        const bool needs_port = d.rule == Rule::Unify || d.rule == Rule::Dedup;
        if (needs_port && !d.port) {
            fail(std::string(rule_tag(d.rule)) + " node lacks its port state");
            return;
        }
        if (d.rule == Rule::Axiom && !d.transition) {
            fail("axiom node lacks its transition");
            return;
        }

        try {
            Profile expected;
            switch (d.rule) {
                case Rule::Axiom: expected = conclude_axiom(a_, *d.transition); break;
                case Rule::WeakLoop: expected = conclude_wl(a_, d.premises[0]->conclusion); break;
                case Rule::StrongLoop: expected = conclude_sl(a_, d.premises[0]->conclusion); break;
                case Rule::Unify:
                    expected = conclude_u(d.premises[0]->conclusion, d.premises[1]->conclusion, *d.port);
                    break;
                case Rule::Dedup: expected = conclude_d(d.premises[0]->conclusion, *d.port); break;
            }
            if (expected != d.conclusion) {
                fail("conclusion " + to_string(a_, d.conclusion) + " does not match rule result " +
                     to_string(a_, expected));
            }
        } catch (const RuleError& e) {
            fail(e.what());
        } catch (const UsageError& e) {
            fail(e.what());
        }
    }

    const SubzeroAutomaton& a_;
    std::unordered_set<const Derivation*> checked_;
};

}  // namespace

DerivationReport validate_derivation(const SubzeroAutomaton& a, const Derivation& d) {
    DerivationReport report;
    Validator(a).visit(d, "root", report);
    return report;
}

std::uint64_t derivation_size(const Derivation& d) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::unordered_map<const Derivation*, std::uint64_t> memo;
    auto go = [&](auto&& self, const Derivation& node) -> std::uint64_t {
        if (auto it = memo.find(&node); it != memo.end()) return it->second;
        std::uint64_t total = 1;
        for (const auto& p : node.premises) {
            const std::uint64_t s = self(self, *p);
            total = (kMax - total < s) ? kMax : total + s;
        }
        memo.emplace(&node, total);
        return total;
    };
    return go(go, d);
}

std::string to_string(const SubzeroAutomaton& a, const Profile& p) {
    std::string out = state_label(a, p.root) + " ->(<=" + state_label(a, p.bound) + ") {";
    bool first = true;
    for (StateId q : p.ports.elements()) {
        if (!first) out += ", ";
        out += state_label(a, q);
        first = false;
    }
    return out + "}";
}

}  // namespace subzero
