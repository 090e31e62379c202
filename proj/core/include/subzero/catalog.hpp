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

// Reference automata and derivations, plus the block construction of a tree
// that the L3 automaton accepts although no regular tree is accepted.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "subzero/automaton.hpp"
#include "subzero/calculus.hpp"
#include "subzero/numeric.hpp"

namespace subzero::catalog {

using NamedTransition = std::array<std::string, 4>;  // source, letter, left, right

/// Automaton with an empty Q_zero, i.e. an ordinary parity automaton.
/// `states` are listed in ascending priority. Throws UsageError on unknown
/// names or if the result fails validation.
SubzeroAutomaton make_parity(const std::vector<std::string>& states, const std::vector<std::string>& alphabet,
                             const std::vector<std::string>& q_all, const std::vector<NamedTransition>& transitions);

/// Q = {bot < q}, letters {a, b}, deterministic with sink bot:
/// q -a-> (bot, bot), q -b-> (q, q), bot -a,b-> (bot, bot).
/// Q_all = Q, Q_zero = {q}. Accepts the trees whose all-b branches have
/// probability zero.
SubzeroAutomaton make_example12();

/// Q = {E < R < T}, letters {a, b}; from every state, a goes to (T, T) and
/// b goes to (E, R) or (R, E). Q_all = {R, T}, Q_zero = {T}. Its language
/// is nonempty but contains no regular tree.
SubzeroAutomaton make_l3();

/// Single state q in Q_all with q -a-> (q, q).
SubzeroAutomaton make_parity_demo();

/// States p < q1 < q2 < q3 < q4, one letter, no acceptance sets, and the
/// transitions p -> (q1,q1), (p,q4), (p,p), (q1,q2), (q3,q2).
SubzeroAutomaton make_finite_run_fragment();

/// The 11-vertex derivation of p ->(<=p) {q1,q1,q4,q1,q2,q3,q2} over
/// make_finite_run_fragment(): left part {q1,q1,q4}, right part
/// {q1,q2,q3,q2}, both plugged into the axiom p -> (p, p).
DerivationPtr finite_run_fragment_derivation(const SubzeroAutomaton& fragment);

/// The 9-vertex derivation of q ->(<=q) {} over make_example12(): the
/// bot-loop (A, D, WL) plugged separately into both ports of q -a-> (bot, bot).
DerivationPtr example12_derivation(const SubzeroAutomaton& example12);

/// Block boundaries f(0) = 0 < f(1) < ... < f(k) with
/// f(n) > n + f(0) + ... + f(n-1).
struct BlockSchedule {
    std::vector<std::uint64_t> boundaries;

    std::size_t blocks() const noexcept { return boundaries.empty() ? 0 : boundaries.size() - 1; }
    friend bool operator==(const BlockSchedule&, const BlockSchedule&) = default;
};

bool is_valid(const BlockSchedule& s);

/// The least schedule: f(n) = n + f(0) + ... + f(n-1) + 1. k in [1, 40].
BlockSchedule l3_block_schedule(std::size_t k);

/// Levels 0..f(k) of the tree; levels[d][i] labels the node at depth d
/// whose path, read as a binary number with the root's child first, is i
/// (0 = left). A node of block n is labeled 'a' iff it is the leftmost
/// descendant of its ancestor at depth f(n). f(k) must not exceed 24.
struct LabeledPrefix {
    std::vector<std::string> levels;
};

LabeledPrefix l3_witness_prefix(const BlockSchedule& s);

struct MeasureBound {
    Rational sum;  // sum over n < k of 2^-(f(n+1) - f(n))
    bool at_most_one = false;
};

MeasureBound l3_measure_bound(const BlockSchedule& s);

}  // namespace subzero::catalog
