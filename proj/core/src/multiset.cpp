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

#include "subzero/multiset.hpp"

#include <algorithm>
#include <string>

#include "subzero/errors.hpp"

namespace subzero {

Multiset::Multiset(std::size_t universe, std::initializer_list<StateId> states) : universe_(universe) {
    for (StateId q : states) add(q);
}

Multiset Multiset::from_states(std::size_t universe, const std::vector<StateId>& states) {
    Multiset m(universe);
    for (StateId q : states) m.add(q);
    return m;
}

void Multiset::check(StateId q) const {
    if (q.index >= universe_) {
        throw UsageError("state " + std::to_string(q.index) + " outside multiset universe of size " +
                         std::to_string(universe_));
    }
}

Multiset::Count Multiset::count(StateId q) const {
    auto it = counts_.find(q);
    return it == counts_.end() ? 0 : it->second;
}

void Multiset::add(StateId q, Count n) {
    check(q);
    if (n == 0) return;
    counts_[q] += n;
}

void Multiset::set(StateId q, Count n) {
    check(q);
    if (n == 0) {
        counts_.erase(q);
    } else {
        counts_[q] = n;
    }
}

bool Multiset::is_subset_of(const Multiset& other) const {
    return std::all_of(counts_.begin(), counts_.end(),
                       [&](const auto& kv) { return kv.second <= other.count(kv.first); });
}

std::vector<StateId> Multiset::elements() const {
    std::vector<StateId> out;
    for (const auto& [q, n] : counts_) out.insert(out.end(), n, q);
    return out;
}

std::vector<StateId> Multiset::support() const {
    std::vector<StateId> out;
    out.reserve(counts_.size());
    for (const auto& kv : counts_) out.push_back(kv.first);
    return out;
}

namespace {

void require_same_universe(const Multiset& w, const Multiset& u) {
    if (w.universe() != u.universe()) {
        throw UsageError("multisets over different automata (" + std::to_string(w.universe()) + " vs " +
                         std::to_string(u.universe()) + " states)");
    }
}

}  // namespace

Multiset mset_meet(const Multiset& w, const Multiset& u) {
    require_same_universe(w, u);
    Multiset out(w.universe());
    for (const auto& [q, n] : w.counts()) out.set(q, std::min(n, u.count(q)));
    return out;
}

Multiset mset_sum(const Multiset& w, const Multiset& u) {
    require_same_universe(w, u);
    Multiset out = w;
    for (const auto& [q, n] : u.counts()) out.add(q, n);
    return out;
}

Multiset mset_remove_one(const Multiset& w, StateId r) {
    const auto n = w.count(r);
    if (n == 0) throw UsageError("port not present: state " + std::to_string(r.index));
    Multiset out = w;
    out.set(r, n - 1);
    return out;
}

Multiset::Count mset_len(const Multiset& w) {
    Multiset::Count total = 0;
    for (const auto& kv : w.counts()) total += kv.second;
    return total;
}

}  // namespace subzero
