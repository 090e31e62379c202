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

#include "subzero/engine.hpp"

#include <algorithm>
#include <cassert>
#include <tuple>

#include "subzero/errors.hpp"

namespace subzero {

NormalProfile normalize(const Profile& p) { return NormalProfile{p.root, p.bound, p.ports.support()}; }

Profile denormalize(const NormalProfile& n, std::size_t state_count) {
    return Profile{n.root, n.bound, Multiset::from_states(state_count, n.port_set)};
}

const SaturationEntry* SaturationResult::provenance(const NormalProfile& p) const {
    auto it = derived_.find(p);
    return it == derived_.end() ? nullptr : &entries_[it->second];
}

std::optional<std::size_t> SaturationResult::find_entry(const Profile& capped) const {
    auto it = index_.find(capped);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

namespace {

// Dense form of a bounded-multiplicity profile used during saturation.
struct Key {
    std::uint32_t root = 0;
    std::uint32_t bound = 0;
    std::vector<std::uint8_t> counts;

    friend bool operator==(const Key&, const Key&) = default;
    friend auto operator<=>(const Key&, const Key&) = default;
};

bool instance_less(const RuleInstance& x, const RuleInstance& y) {
    return std::tie(x.rule, x.premises, x.port, x.transition) < std::tie(y.rule, y.premises, y.port, y.transition);
}

}  // namespace

class Saturator {
public:
    Saturator(const SubzeroAutomaton& a, const EngineOptions& options) : n_(a.state_count()), cap_(options.multiplicity_cap) {
        result_.automaton_ = a;
        result_.options_ = options;
        by_root_.resize(n_);
        with_port_.resize(n_);
        transitions_ = canonicalize(a).transitions;
    }

    SaturationResult run() {
        if (result_.options_.order == SaturationOrder::Rounds) {
            run_rounds();
        } else {
            run_stack();
        }
        finish();
        return std::move(result_);
    }

private:
    using Candidates = std::map<Key, RuleInstance>;

    Key axiom_key(const Transition& t) const {
        Key k{t.source.index, t.source.index, std::vector<std::uint8_t>(n_, 0)};
        bump(k.counts, t.left.index, 1);
        bump(k.counts, t.right.index, 1);
        return k;
    }

    void bump(std::vector<std::uint8_t>& counts, std::size_t q, std::uint32_t by) const {
        counts[q] = static_cast<std::uint8_t>(std::min<std::uint32_t>(cap_, counts[q] + by));
    }

    static bool has_other_port(const Key& k, std::size_t removed) {
        for (std::size_t q = 0; q < k.counts.size(); ++q) {
            if (k.counts[q] > (q == removed ? 1 : 0)) return true;
        }
        return false;
    }

    // Unary rule conclusions of entry i, in instance order (WL, SL, D by state).
    template <typename Emit>
    void unary(std::size_t i, Emit&& emit) const {
        const Key k = keys_[i];  // a copy: in stack order emit() grows keys_
        const auto& a = result_.automaton_;
        if (k.root == k.bound && k.counts[k.root] > 0) {
            const StateId p{k.root};
            Key out = k;
            out.counts[k.root] -= 1;
            if (a.is_all(p) && !a.is_zero(p)) emit(out, RuleInstance{Rule::WeakLoop, {i}, std::nullopt, std::nullopt});
            if (a.is_all(p) && has_other_port(k, k.root)) {
                emit(out, RuleInstance{Rule::StrongLoop, {i}, std::nullopt, std::nullopt});
            }
        }
        for (std::size_t q = 0; q < n_; ++q) {
            if (k.counts[q] >= 2) {
                Key out = k;
                out.counts[q] -= 1;
                emit(out, RuleInstance{Rule::Dedup, {i}, std::nullopt, StateId{static_cast<std::uint32_t>(q)}});
            }
        }
    }

    Key unify(std::size_t x, std::size_t y, std::uint32_t r) const {
        const Key& kx = keys_[x];
        const Key& ky = keys_[y];
        Key out{kx.root, std::max({kx.bound, ky.bound, r}), kx.counts};
        out.counts[r] -= 1;
        for (std::size_t q = 0; q < n_; ++q) {
            if (ky.counts[q] != 0) bump(out.counts, q, ky.counts[q]);
        }
        return out;
    }

    RuleInstance unify_instance(std::size_t x, std::size_t y, std::uint32_t r) const {
        return RuleInstance{Rule::Unify, {x, y}, std::nullopt, StateId{r}};
    }

    std::size_t add(Key key, RuleInstance inst, std::size_t round) {
        const std::size_t id = keys_.size();
        for (std::size_t q = 0; q < n_; ++q) {
            if (key.counts[q] > 0) with_port_[q].push_back(id);
        }
        by_root_[key.root].push_back(id);
        index_.emplace(key, id);
        rounds_.push_back(round);
        instances_.push_back(std::move(inst));
        keys_.push_back(std::move(key));
        return id;
    }

    static void offer(Candidates& cands, const Key& k, RuleInstance inst) {
        auto [it, inserted] = cands.try_emplace(k, inst);
        if (!inserted && instance_less(inst, it->second)) it->second = std::move(inst);
    }

    void commit(Candidates& cands, std::size_t round) {
        for (auto& [k, inst] : cands) {
            if (!index_.count(k)) add(k, std::move(inst), round);
        }
    }

    void run_rounds() {
        Candidates cands;
        for (const Transition& t : transitions_) {
            offer(cands, axiom_key(t), RuleInstance{Rule::Axiom, {}, t, std::nullopt});
        }
        commit(cands, 0);

        std::size_t begin = 0;
        std::size_t end = keys_.size();
        std::size_t round = 0;
        while (begin < end) {
            ++round;
            cands.clear();
            auto emit = [&](const Key& k, RuleInstance inst) {
                if (!index_.count(k)) offer(cands, k, std::move(inst));
            };
            for (std::size_t x = begin; x < end; ++x) unary(x, emit);
            // U with the left premise new in the last round.
            for (std::size_t x = begin; x < end; ++x) {
                for (std::uint32_t r = 0; r < n_; ++r) {
                    if (keys_[x].counts[r] == 0) continue;
                    for (std::size_t y : by_root_[r]) {
                        if (y >= end) break;
                        emit(unify(x, y, r), unify_instance(x, y, r));
                    }
                }
            }
            // U with only the right premise new.
            for (std::size_t y = begin; y < end; ++y) {
                const std::uint32_t r = keys_[y].root;
                for (std::size_t x : with_port_[r]) {
                    if (x >= begin) break;
                    emit(unify(x, y, r), unify_instance(x, y, r));
                }
            }
            begin = end;
            commit(cands, round);
            end = keys_.size();
        }
        result_.rounds_ = round;
    }

    void run_stack() {
        std::vector<std::size_t> stack;
        auto push = [&](const Key& k, RuleInstance inst) {
            if (index_.count(k)) return;
            std::size_t depth = 0;
            for (std::size_t p : inst.premises) depth = std::max(depth, rounds_[p] + 1);
            stack.push_back(add(k, std::move(inst), depth));
        };
        for (const Transition& t : transitions_) push(axiom_key(t), RuleInstance{Rule::Axiom, {}, t, std::nullopt});
        std::reverse(stack.begin(), stack.end());

        std::size_t max_round = 0;
        while (!stack.empty()) {
            const std::size_t e = stack.back();
            stack.pop_back();
            max_round = std::max(max_round, rounds_[e]);
            unary(e, push);
            // Snapshot sizes: entries created below are expanded when popped.
            for (std::uint32_t r = 0; r < n_; ++r) {
                if (keys_[e].counts[r] == 0) continue;
                const auto partners = by_root_[r];
                for (std::size_t y : partners) push(unify(e, y, r), unify_instance(e, y, r));
            }
            const std::uint32_t r = keys_[e].root;
            const auto partners = with_port_[r];
            for (std::size_t x : partners) push(unify(x, e, r), unify_instance(x, e, r));
        }
        result_.rounds_ = max_round;
    }

    void finish() {
        auto& entries = result_.entries_;
        entries.reserve(keys_.size());
        for (std::size_t i = 0; i < keys_.size(); ++i) {
            Profile p{StateId{keys_[i].root}, StateId{keys_[i].bound}, Multiset(n_)};
            for (std::size_t q = 0; q < n_; ++q) p.ports.set(StateId{static_cast<std::uint32_t>(q)}, keys_[i].counts[q]);
            result_.index_.emplace(p, i);
            result_.derived_.try_emplace(normalize(p), i);
            entries.push_back(SaturationEntry{std::move(p), rounds_[i], std::move(instances_[i])});
        }
    }

    std::size_t n_;
    std::uint32_t cap_;
    std::vector<Transition> transitions_;
    SaturationResult result_;

    std::vector<Key> keys_;
    std::vector<std::size_t> rounds_;
    std::vector<RuleInstance> instances_;
    std::map<Key, std::size_t> index_;
    std::vector<std::vector<std::size_t>> by_root_;
    std::vector<std::vector<std::size_t>> with_port_;
};

SaturationResult saturate(const SubzeroAutomaton& a, const EngineOptions& options) {
    require_valid(a);
    if (options.multiplicity_cap < 1 || options.multiplicity_cap > 255) {
        throw UsageError("multiplicity cap must lie in [1, 255]");
    }
    return Saturator(a, options).run();
}

bool derivable(const SaturationResult& s, const Profile& target) {
    if (target.ports.universe() != s.automaton().state_count()) {
        throw UsageError("target profile belongs to a different automaton");
    }
    return s.contains(normalize(target));
}

bool derivable(const SubzeroAutomaton& a, const Profile& target, const EngineOptions& options) {
    return derivable(saturate(a, options), target);
}

namespace {

class WitnessBuilder {
public:
    explicit WitnessBuilder(const SaturationResult& s) : s_(s), memo_(s.entries().size()) {}

    DerivationPtr build(std::size_t i) {
        if (memo_[i]) return memo_[i];
        const auto& a = s_.automaton();
        const auto& entry = s_.entries()[i];
        const auto& inst = entry.instance;
        DerivationPtr d;
        switch (inst.rule) {
            case Rule::Axiom: d = apply_axiom(a, *inst.transition); break;
            case Rule::WeakLoop: d = apply_wl(a, build(inst.premises[0])); break;
            case Rule::StrongLoop: d = apply_sl(a, build(inst.premises[0])); break;
            case Rule::Dedup: d = apply_d(a, build(inst.premises[0]), *inst.port); break;
            case Rule::Unify: d = apply_u(a, build(inst.premises[0]), build(inst.premises[1]), *inst.port); break;
        }
        d = dedup_to(d, s_.options().multiplicity_cap);
        assert(d->conclusion == entry.profile);
        memo_[i] = d;
        return d;
    }

    DerivationPtr dedup_to(DerivationPtr d, std::uint64_t cap) const {
        for (;;) {
            const auto& counts = d->conclusion.ports.counts();
            auto it = std::find_if(counts.begin(), counts.end(), [&](const auto& kv) { return kv.second > cap; });
            if (it == counts.end()) return d;
            d = apply_d(s_.automaton(), d, it->first);
        }
    }

private:
    const SaturationResult& s_;
    std::vector<DerivationPtr> memo_;
};

}  // namespace

DerivationPtr extract_entry_witness(const SaturationResult& s, std::size_t entry) {
    if (entry >= s.entries().size()) throw UsageError("no such saturation entry");
    return WitnessBuilder(s).build(entry);
}

DerivationPtr extract_witness(const SaturationResult& s, const NormalProfile& target) {
    auto it = s.derived().find(target);
    if (it == s.derived().end()) throw UsageError("no witness: profile was not derived");
    WitnessBuilder builder(s);
    return builder.dedup_to(builder.build(it->second), 1);
}

EmptinessVerdict decide_regular_emptiness(const SaturationResult& s, StateId q0) {
    if (q0.index >= s.automaton().state_count()) throw UsageError("unknown start state");
    // Earliest entry (q0, q, {}) over all bounds q.
    std::optional<std::size_t> best;
    for (StateId q{0}; q.index < s.automaton().state_count(); ++q.index) {
        auto it = s.derived().find(NormalProfile{q0, q, {}});
        if (it != s.derived().end() && (!best || it->second < *best)) best = it->second;
    }
    if (!best) return EmptinessVerdict{};
    const auto& p = s.entries()[*best].profile;
    return EmptinessVerdict{true, normalize(p), extract_witness(s, normalize(p))};
}

EmptinessVerdict decide_regular_emptiness(const SubzeroAutomaton& a, StateId q0, const EngineOptions& options) {
    if (q0.index >= a.state_count()) throw UsageError("unknown start state");
    return decide_regular_emptiness(saturate(a, options), q0);
}

std::vector<Profile> closure_violations(const SaturationResult& s) {
    const auto& a = s.automaton();
    const auto cap = s.options().multiplicity_cap;
    std::vector<Profile> missing;
    auto check = [&](Profile p) {
        const auto counts = p.ports.counts();
        for (const auto& [q, n] : counts) {
            if (n > cap) p.ports.set(q, cap);
        }
        if (!s.find_entry(p)) missing.push_back(std::move(p));
    };
    for (const auto& e : s.entries()) {
        const Profile& p = e.profile;
        try {
            check(conclude_wl(a, p));
        } catch (const RuleError&) {
        }
        try {
            check(conclude_sl(a, p));
        } catch (const RuleError&) {
        }
        for (StateId r : p.ports.support()) {
            if (p.ports.count(r) >= 2) check(conclude_d(p, r));
            for (const auto& f : s.entries()) {
                if (f.profile.root == r) check(conclude_u(p, f.profile, r));
            }
        }
    }
    return missing;
}

}  // namespace subzero
