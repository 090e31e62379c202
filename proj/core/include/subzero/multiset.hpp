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
#include <cstdint>
#include <initializer_list>
#include <map>
#include <vector>

#include "subzero/automaton.hpp"

namespace subzero {

/// Finite multiset of states of one automaton. Only nonzero multiplicities
/// are stored; iteration is in ascending state order.
class Multiset {
public:
    using Count = std::uint64_t;

    Multiset() = default;
    explicit Multiset(std::size_t universe) : universe_(universe) {}

    /// One occurrence per element of `states`.
    Multiset(std::size_t universe, std::initializer_list<StateId> states);
    static Multiset from_states(std::size_t universe, const std::vector<StateId>& states);

    std::size_t universe() const noexcept { return universe_; }
    Count count(StateId q) const;
    bool empty() const noexcept { return counts_.empty(); }
    bool contains(StateId q) const { return count(q) > 0; }

    /// Number of distinct states with nonzero multiplicity.
    std::size_t distinct() const noexcept { return counts_.size(); }

    void add(StateId q, Count n = 1);
    /// Sets the multiplicity of q; zero erases it.
    void set(StateId q, Count n);

    /// Pointwise order: every multiplicity of *this is at most that of other.
    bool is_subset_of(const Multiset& other) const;

    /// States with multiplicity, ascending, repeated per occurrence.
    std::vector<StateId> elements() const;
    std::vector<StateId> support() const;

    const std::map<StateId, Count>& counts() const noexcept { return counts_; }

    friend bool operator==(const Multiset&, const Multiset&) = default;
    friend auto operator<=>(const Multiset& a, const Multiset& b) {
        if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
        return a.counts_ <=> b.counts_;
    }

private:
    void check(StateId q) const;

    std::size_t universe_ = 0;
    std::map<StateId, Count> counts_;
};

Multiset mset_meet(const Multiset& w, const Multiset& u);
Multiset mset_sum(const Multiset& w, const Multiset& u);
/// Throws UsageError("port not present") if r does not occur in w.
Multiset mset_remove_one(const Multiset& w, StateId r);
Multiset::Count mset_len(const Multiset& w);

}  // namespace subzero
