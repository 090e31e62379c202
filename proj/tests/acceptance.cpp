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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "subzero/bounds.hpp"
#include "subzero/catalog.hpp"
#include "subzero/engine.hpp"
#include "subzero/oracle.hpp"
#include "subzero/realizer.hpp"
#include "subzero/runcheck.hpp"

namespace {

using namespace subzero;

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail << what;
        ok = ok && cond;
    }
};

constexpr std::uint64_t kCorpus = 200;

StateId state(const SubzeroAutomaton& a, const char* name) { return *a.find_state(name); }

void l3_empty(Outcome& o) {
    const auto l = catalog::make_l3();
    for (const char* s : {"E", "R", "T"}) {
        o.require(!decide_regular_emptiness(l, state(l, s)).nonempty, std::string("NONEMPTY from ") + s);
    }
}

void example12_nonempty(Outcome& o) {
    const auto e = catalog::make_example12();
    const auto v = decide_regular_emptiness(e, state(e, "q"));
    o.require(v.nonempty, "EMPTY");
    if (!v.nonempty) return;
    const auto size = derivation_size(*v.witness);
    o.require(size <= 12, "witness size " + std::to_string(size));
    o.require(validate_derivation(e, *v.witness).ok(), "witness invalid");
    const auto g = realize(e, *v.witness);
    o.require(is_accepting_run(e, g), "realized run not accepting");
    o.require(format_fraction(zero_measure_exact(e, g)) == "0/1", "measure not 0/1");
    o.detail << "witness size " << size << ", run nodes " << g.nodes.size();
}

void figure8(Outcome& o) {
    const auto f = catalog::make_finite_run_fragment();
    const auto d = catalog::finite_run_fragment_derivation(f);
    o.require(validate_derivation(f, *d).ok(), "fixture derivation invalid");
    Profile target{state(f, "p"), state(f, "p"), Multiset(f.state_count())};
    for (const char* q : {"q1", "q2", "q3", "q4"}) target.ports.add(state(f, q));
    o.require(derivable(f, target), "engine does not derive the target");
    const auto found = oracle::enumerate_derivations(f, target, {20, 3, 4});
    o.require(found != nullptr, "oracle found nothing within (20, 3)");
    if (found) {
        o.require(validate_derivation(f, *found).ok(), "oracle derivation invalid");
        o.detail << "oracle derivation size " << derivation_size(*found);
    }
}

void soundness(Outcome& o) {
    std::size_t witnesses = 0;
    for (std::uint64_t seed = 0; seed < kCorpus; ++seed) {
        const auto a = oracle::random_automaton({}, seed);
        const auto s = saturate(a);
        for (const auto& [n, i] : s.derived()) {
            const auto w = extract_witness(s, n);
            const auto g = realize(a, *w);
            ++witnesses;
            o.require(check_partial_run(a, g).partial_run_ok(), "seed " + std::to_string(seed) + " failed; ");
            o.require(graph_profile(a, g).ports == w->conclusion.ports, "profile mismatch at seed " + std::to_string(seed));
        }
    }
    o.detail << witnesses << " witnesses realized";
}

void completeness(Outcome& o) {
    std::size_t runs = 0, finds = 0;
    for (std::uint64_t seed = 0; seed < kCorpus; ++seed) {
        const auto a = oracle::random_automaton({}, seed);
        const auto s = saturate(a);
        for (std::uint32_t q = 0; q < a.state_count(); ++q) {
            for (const auto& p : oracle::enumerate_finite_runs(a, StateId{q}, 4)) {
                ++runs;
                o.require(derivable(s, p), "(a) seed " + std::to_string(seed) + ": " + to_string(a, p) + "; ");
            }
        }
        for (const auto& [p, d] : oracle::enumerate_all_derivations(a, {12, 3, 4})) {
            if (!p.ports.empty()) continue;
            ++finds;
            o.require(decide_regular_emptiness(s, p.root).nonempty,
                      "(b) seed " + std::to_string(seed) + ": " + to_string(a, p) + "; ");
        }
    }
    o.detail << runs << " finite-run profiles, " << finds << " closed oracle derivations";
}

void measure(Outcome& o) {
    // Random graphs mostly have measure 0 or 1; keep at most half of those.
    double worst = 0;
    int kept = 0, fractional = 0;
    for (std::uint64_t seed = 0; kept < 50 && seed < 5000; ++seed) {
        const auto a = oracle::random_automaton({4, 2, 8, 0.5, 0.5}, seed);
        const auto g = oracle::random_run_graph(a, 12, seed + 7000);
        const auto exact = zero_measure_exact(a, g);
        o.require((exact != 0) == has_reachable_bad_bottom(a, g), "structural mismatch at seed " + std::to_string(seed));
        const bool trivial = exact == 0 || exact == 1;
        if (trivial && kept - fractional >= 25) continue;
        ++kept;
        if (!trivial) ++fractional;
        const double est = oracle::mc_zero_measure(a, g, 100000, 200, seed);
        const double gap = std::abs(est - exact.get_d());
        worst = std::max(worst, gap);
        o.require(gap <= 0.02, "Monte Carlo off by " + std::to_string(gap) + " at seed " + std::to_string(seed));
    }
    o.require(fractional >= 25, "only " + std::to_string(fractional) + " fractional measures");
    o.detail << kept << " graphs (" << fractional << " fractional), largest Monte Carlo gap " << worst;
}

void bounds(Outcome& o) {
    BoundParams p;
    p.size_q = 2;
    for (std::uint64_t n = 0; n <= 100; ++n) {
        const auto r = bound_f(p, 0, n);
        o.require(r.ok() && *r.value == BigInt(static_cast<unsigned long>(8 * n + 8)), "f(0, n) formula");
    }
    std::size_t checked = 0, overflowed = 0;
    for (std::uint64_t sq = 1; sq <= 3; ++sq) {
        p.size_q = sq;
        for (std::uint64_t q = 0; q <= 2; ++q) {
            for (std::uint64_t n = 0; n <= (q < 2 ? 4u : 2u); ++n) {
                const auto here = bound_f(p, q, n);
                if (!here.ok()) {
                    ++overflowed;
                    continue;
                }
                std::vector<BoundResult> nexts{bound_f(p, q, n + 1)};
                if (q < 2) nexts.push_back(bound_f(p, q + 1, n));  // f(3, .) only exhausts the budget
                for (const auto& next : nexts) {
                    if (next.ok()) {
                        ++checked;
                        o.require(*here.value <= *next.value, "f not monotone");
                    }
                }
                if (q == 0) continue;
                for (std::uint64_t k = 0; k < 3; ++k) {
                    const BigInt N = static_cast<unsigned long>(n);
                    const BigInt M = static_cast<unsigned long>(n + sq);
                    const auto h0 = bound_h(p, q, n, k), h1 = bound_h(p, q, n, k + 1);
                    const auto g0 = bound_g(p, q, n, k), g1 = bound_g(p, q, n, k + 1);
                    const auto fh = bound_f(p, q - 1, 2 * n), fg = bound_f(p, q - 1, 2 * (n + sq));
                    if (!(h0.ok() && h1.ok() && g0.ok() && g1.ok() && fh.ok() && fg.ok())) {
                        ++overflowed;
                        continue;
                    }
                    o.require(*h1.value == *fh.value + *h0.value * N + N * N, "h recurrence");
                    o.require(*g1.value == *fg.value + *g0.value * M + M * M, "g recurrence");
                    o.require(*h0.value <= *h1.value && *g0.value <= *g1.value, "h/g not monotone in k");
                }
            }
        }
    }
    p.size_q = 3;
    const auto huge = bound_f(p, 3, 2);
    o.require(!huge.ok() && !huge.overflow.empty(), "no overflow report for f(3, 2)");
    o.detail << checked << " monotonicity pairs, " << overflowed << " budget overflows";
}

void claim16(Outcome& o) {
    for (std::size_t k = 1; k <= 20; ++k) {
        const auto s = catalog::l3_block_schedule(k);
        o.require(catalog::is_valid(s), "invalid schedule");
        const auto m = catalog::l3_measure_bound(s);
        o.require(m.at_most_one && m.sum <= 1, "partial sum above 1 at k=" + std::to_string(k));
    }
    const auto s3 = catalog::l3_block_schedule(3);
    o.require(s3.boundaries == std::vector<std::uint64_t>{0, 2, 5, 11}, "schedule prefix");
    o.require(format_fraction(catalog::l3_measure_bound(s3).sum) == "25/64", "sum for k=3");
}

void parity_reduct(Outcome& o) {
    std::size_t finds = 0, agree = 0;
    oracle::RandomAutomatonParams params;
    params.p_zero = 0;
    for (std::uint64_t seed = 0; seed < kCorpus; ++seed) {
        const auto a = oracle::random_automaton(params, seed + 50000);
        const auto s = saturate(a);
        const auto found = oracle::enumerate_all_derivations(a, {12, 3, 4});
        for (std::uint32_t q = 0; q < a.state_count(); ++q) {
            bool oracle_found = false;
            for (const auto& [p, d] : found) oracle_found = oracle_found || (p.root.index == q && p.ports.empty());
            if (!oracle_found) continue;
            ++finds;
            const bool engine = decide_regular_emptiness(s, StateId{q}).nonempty;
            agree += engine;
            o.require(engine, "seed " + std::to_string(seed) + " state " + std::to_string(q) + "; ");
        }
    }
    o.detail << agree << "/" << finds << " oracle finds confirmed";
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;  // 0 = no limit
    std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "L3 emptiness", 1, l3_empty},
        {2, "Example 12 non-emptiness", 1, example12_nonempty},
        {3, "finite-run fragment derivation", 0, figure8},
        {4, "soundness round-trip", 60, soundness},
        {5, "empirical completeness", 0, completeness},
        {6, "measure checker", 120, measure},
        {7, "bounds", 0, bounds},
        {8, "block schedule arithmetic", 0, claim16},
        {9, "parity reduct agreement", 0, parity_reduct},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && secs > c.budget_seconds) {
            o.require(false, "over the " + std::to_string(c.budget_seconds) + " s budget; ");
        }
        failures += !o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << o.detail.str()
                  << " [" << secs << " s]" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
