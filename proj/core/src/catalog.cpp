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

#include "subzero/catalog.hpp"

#include "subzero/errors.hpp"

namespace subzero::catalog {

namespace {

StateId state(const SubzeroAutomaton& a, const std::string& name) {
    auto q = a.find_state(name);
    if (!q) throw UsageError("unknown state '" + name + "'");
    return *q;
}

Letter letter(const SubzeroAutomaton& a, const std::string& name) {
    auto l = a.find_letter(name);
    if (!l) throw UsageError("unknown letter '" + name + "'");
    return *l;
}

SubzeroAutomaton build(const std::vector<std::string>& states, const std::vector<std::string>& alphabet,
                       const std::vector<std::string>& q_all, const std::vector<std::string>& q_zero,
                       const std::vector<NamedTransition>& transitions) {
    SubzeroAutomaton a;
    a.state_names = states;
    a.alphabet_names = alphabet;
    for (const auto& s : q_all) a.q_all.push_back(state(a, s));
    for (const auto& s : q_zero) a.q_zero.push_back(state(a, s));
    for (const auto& [src, l, left, right] : transitions) {
        a.transitions.push_back(Transition{state(a, src), letter(a, l), state(a, left), state(a, right)});
    }
    require_valid(a);
    return a;
}

Transition find(const SubzeroAutomaton& a, const char* src, const char* l, const char* left, const char* right) {
    return Transition{state(a, src), letter(a, l), state(a, left), state(a, right)};
}

}  // namespace

SubzeroAutomaton make_parity(const std::vector<std::string>& states, const std::vector<std::string>& alphabet,
                             const std::vector<std::string>& q_all, const std::vector<NamedTransition>& transitions) {
    return build(states, alphabet, q_all, {}, transitions);
}

SubzeroAutomaton make_example12() {
    return build({"bot", "q"}, {"a", "b"}, {"bot", "q"}, {"q"},
                 {{"q", "a", "bot", "bot"}, {"q", "b", "q", "q"}, {"bot", "a", "bot", "bot"}, {"bot", "b", "bot", "bot"}});
}

SubzeroAutomaton make_l3() {
    std::vector<NamedTransition> ts;
    for (const char* q : {"E", "R", "T"}) {
        ts.push_back({q, "a", "T", "T"});
        ts.push_back({q, "b", "E", "R"});
        ts.push_back({q, "b", "R", "E"});
    }
    return build({"E", "R", "T"}, {"a", "b"}, {"T", "R"}, {"T"}, ts);
}

SubzeroAutomaton make_parity_demo() { return make_parity({"q"}, {"a"}, {"q"}, {{"q", "a", "q", "q"}}); }

SubzeroAutomaton make_finite_run_fragment() {
    return build({"p", "q1", "q2", "q3", "q4"}, {"a"}, {}, {},
                 {{"p", "a", "q1", "q1"},
                  {"p", "a", "p", "q4"},
                  {"p", "a", "p", "p"},
                  {"p", "a", "q1", "q2"},
                  {"p", "a", "q3", "q2"}});
}

DerivationPtr finite_run_fragment_derivation(const SubzeroAutomaton& f) {
    const StateId p = state(f, "p");
    auto left = apply_u(f, apply_axiom(f, find(f, "p", "a", "p", "q4")), apply_axiom(f, find(f, "p", "a", "q1", "q1")), p);
    auto right = apply_u(f, apply_axiom(f, find(f, "p", "a", "p", "p")), apply_axiom(f, find(f, "p", "a", "q1", "q2")), p);
    right = apply_u(f, right, apply_axiom(f, find(f, "p", "a", "q3", "q2")), p);
    auto top = apply_u(f, apply_axiom(f, find(f, "p", "a", "p", "p")), left, p);
    return apply_u(f, top, right, p);
}

DerivationPtr example12_derivation(const SubzeroAutomaton& e) {
    const StateId bot = state(e, "bot");
    auto loop = apply_wl(e, apply_d(e, apply_axiom(e, find(e, "bot", "a", "bot", "bot")), bot));
    auto half = apply_u(e, apply_axiom(e, find(e, "q", "a", "bot", "bot")), loop, bot);
    return apply_u(e, half, loop, bot);
}

bool is_valid(const BlockSchedule& s) {
    if (s.boundaries.size() < 2 || s.boundaries[0] != 0) return false;
    std::uint64_t prefix = 0;
    for (std::size_t n = 1; n < s.boundaries.size(); ++n) {
        prefix += s.boundaries[n - 1];
        if (s.boundaries[n] <= n + prefix) return false;
    }
    return true;
}

BlockSchedule l3_block_schedule(std::size_t k) {
    if (k < 1 || k > 40) throw UsageError("block count must lie in [1, 40]");
    BlockSchedule s{{0}};
    std::uint64_t prefix = 0;
    for (std::size_t n = 1; n <= k; ++n) {
        prefix += s.boundaries.back();
        s.boundaries.push_back(n + prefix + 1);
    }
    return s;
}

LabeledPrefix l3_witness_prefix(const BlockSchedule& s) {
    if (!is_valid(s)) throw UsageError("invalid block schedule");
    const std::uint64_t depth = s.boundaries.back();
    if (depth > 24) throw UsageError("prefix too deep to materialize (more than 24 levels)");
    LabeledPrefix out;
    std::size_t block = 0;
    for (std::uint64_t d = 0; d <= depth; ++d) {
        while (block + 1 < s.boundaries.size() && s.boundaries[block + 1] <= d) ++block;
        // Leftmost descendants of the block entry: the last d - f(n) moves are left.
        const std::uint64_t below_entry = d - s.boundaries[block];
        const std::uint64_t mask = (std::uint64_t{1} << below_entry) - 1;
        std::string level(std::size_t{1} << d, 'b');
        for (std::uint64_t i = 0; i < level.size(); ++i) {
            if ((i & mask) == 0) level[i] = 'a';
        }
        out.levels.push_back(std::move(level));
    }
    return out;
}

MeasureBound l3_measure_bound(const BlockSchedule& s) {
    if (!is_valid(s)) throw UsageError("invalid block schedule");
    MeasureBound out;
    out.sum = 0;
    for (std::size_t n = 0; n + 1 < s.boundaries.size(); ++n) {
        BigInt denom;
        mpz_ui_pow_ui(denom.get_mpz_t(), 2, static_cast<unsigned long>(s.boundaries[n + 1] - s.boundaries[n]));
        out.sum += Rational(BigInt(1), denom);
    }
    out.sum.canonicalize();
    out.at_most_one = out.sum <= 1;
    return out;
}

}  // namespace subzero::catalog
