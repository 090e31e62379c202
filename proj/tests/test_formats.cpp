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

#include <gtest/gtest.h>

#include "subzero/catalog.hpp"
#include "subzero/engine.hpp"
#include "subzero/errors.hpp"
#include "subzero/formats.hpp"
#include "subzero/oracle.hpp"
#include "subzero/realizer.hpp"
#include "support.hpp"

namespace subzero {
namespace {

using testing::fixture_path;
using testing::is_valid_dot;
using testing::load_fixture;
using testing::read_text;
using testing::st;

std::size_t parse_error_line(const std::string& text) {
    try {
        parse_automaton(text, "t.sza");
    } catch (const ParseError& e) {
        EXPECT_EQ(e.source(), "t.sza");
        return e.line();
    }
    ADD_FAILURE() << "accepted:\n" << text;
    return 0;
}

TEST(AutomatonText, FixturesRoundTrip) {
    for (const char* name : {"example12.sza", "l3.sza", "parity_demo.sza", "fragment.sza", "parity_cycle_no_all.sza"}) {
        const std::string text = read_text(fixture_path(name));
        const auto parsed = parse_automaton(text, name);
        EXPECT_EQ(parse_automaton(serialize_automaton(parsed)), parsed) << name;
    }
    // The generated fixtures are already in serialized form.
    for (const char* name : {"example12.sza", "l3.sza", "parity_demo.sza"}) {
        const std::string text = read_text(fixture_path(name));
        EXPECT_EQ(serialize_automaton(parse_automaton(text)), text) << name;
    }
}

TEST(AutomatonText, FixturesMatchCatalog) {
    EXPECT_EQ(load_fixture("example12.sza").automaton, catalog::make_example12());
    EXPECT_EQ(load_fixture("l3.sza").automaton, catalog::make_l3());
    EXPECT_EQ(load_fixture("fragment.sza").automaton, catalog::make_finite_run_fragment());
    EXPECT_EQ(load_fixture("example12.sza").start, catalog::make_example12().find_state("q"));
}

TEST(AutomatonText, CommentsAndBlanks) {
    const auto f = load_fixture("commented.sza");
    EXPECT_EQ(f.automaton.state_names, (std::vector<std::string>{"low", "high"}));
    EXPECT_EQ(f.automaton.transitions.size(), 2u);
    EXPECT_FALSE(f.start.has_value());
    EXPECT_TRUE(f.automaton.q_zero.empty());
}

TEST(AutomatonText, RandomRoundTrip) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        AutomatonFile f{oracle::random_automaton({4, 3, 10, 0.5, 0.5}, seed), std::nullopt};
        if (seed % 2) f.start = StateId{static_cast<std::uint32_t>(seed % f.automaton.state_count())};
        EXPECT_EQ(parse_automaton(serialize_automaton(f)), f) << seed;
    }
}

TEST(AutomatonText, ErrorsCarryLineNumbers) {
    EXPECT_EQ(parse_error_line("states p q\nalphabet a\nall p\ntrans p a q r\n"), 4u);
    EXPECT_EQ(parse_error_line("states p\nalphabet a\nzero x\n"), 3u);
    EXPECT_EQ(parse_error_line("states p\nalphabet a\ntrans p b p p\n"), 3u);
    EXPECT_EQ(parse_error_line("alphabet a\nall p\nstates p\n"), 2u);  // used before declared
    EXPECT_EQ(parse_error_line("states p\nstates q\n"), 2u);
    EXPECT_EQ(parse_error_line("states p\nalphabet a\nfrobnicate p\n"), 3u);
    EXPECT_EQ(parse_error_line("states p-1\n"), 1u);
    EXPECT_EQ(parse_error_line("states p p\n"), 1u);
    EXPECT_EQ(parse_error_line("states p\nalphabet a\ntrans p a p\n"), 3u);
    EXPECT_EQ(parse_error_line("states p\nalphabet a\nstart p p\n"), 3u);
    EXPECT_EQ(parse_error_line("states\n"), 1u);
    // Whole-document problems have no line.
    EXPECT_EQ(parse_error_line("alphabet a\n"), 0u);
    EXPECT_EQ(parse_error_line(read_text(fixture_path("bad_duplicate_transition.sza"))), 0u);
    EXPECT_EQ(parse_error_line(read_text(fixture_path("bad_unknown_state.sza"))), 4u);
}

TEST(AutomatonText, UnvalidatedParseKeepsDuplicates) {
    const auto f = parse_automaton(read_text(fixture_path("bad_duplicate_transition.sza")), "", false);
    EXPECT_EQ(f.automaton.transitions.size(), 2u);
    EXPECT_FALSE(validate_automaton(f.automaton).ok());
}

TEST(RunJson, RoundTrip) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto a = oracle::random_automaton({}, seed);
        const auto g = oracle::random_run_graph(a, 8, seed);
        EXPECT_EQ(run_graph_from_json(a, run_graph_to_json(a, g)), g);
    }
}

TEST(RunJson, Fixture) {
    const auto e = catalog::make_example12();
    const auto g = run_graph_from_json(e, read_text(fixture_path("example12_run.json")));
    EXPECT_EQ(g, realize(e, *decide_regular_emptiness(e, st(e, "q")).witness));
}

TEST(RunJson, SchemaErrors) {
    const auto e = catalog::make_example12();
    auto bad = [&](const std::string& text) {
        EXPECT_THROW(run_graph_from_json(e, text, "r.json"), ParseError) << text;
    };
    bad("not json");
    bad(R"({"root":0,"nodes":[]})");  // no version
    bad(R"({"format_version":2,"root":0,"nodes":[{"id":0,"state":"q","kind":"port"}]})");
    bad(R"({"format_version":1,"root":1,"nodes":[{"id":0,"state":"q","kind":"port"}]})");
    bad(R"({"format_version":1,"root":0,"nodes":[{"id":0,"state":"zz","kind":"port"}]})");
    bad(R"({"format_version":1,"root":0,"nodes":[{"id":0,"state":"q","kind":"leaf"}]})");
    bad(R"({"format_version":1,"root":0,"nodes":[{"id":0,"state":"q","kind":"inner","letter":"a","left":0}]})");
    bad(R"({"format_version":1,"root":0,"nodes":[{"id":0,"state":"q","kind":"port"},{"id":0,"state":"q","kind":"port"}]})");
    bad(R"({"format_version":1,"root":0,"nodes":[{"id":-1,"state":"q","kind":"port"}]})");
    bad(R"({"format_version":1,"root":0,"nodes":[{"id":0,"state":"q","kind":"inner","letter":"c","left":0,"right":0}]})");
}

TEST(DerivationJson, RoundTrip) {
    const auto f = catalog::make_finite_run_fragment();
    const auto d = catalog::finite_run_fragment_derivation(f);
    const auto back = derivation_from_json(f, derivation_to_json(f, *d));
    EXPECT_TRUE(validate_derivation(f, *back).ok());
    EXPECT_EQ(derivation_to_json(f, *back), derivation_to_json(f, *d));
    EXPECT_EQ(derivation_size(*back), 11u);

    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto a = oracle::random_automaton({}, seed);
        const auto s = saturate(a);
        for (const auto& [n, i] : s.derived()) {
            const auto w = extract_witness(s, n);
            const std::string text = derivation_to_json(a, *w);
            EXPECT_EQ(derivation_to_json(a, *derivation_from_json(a, text)), text);
        }
    }
}

TEST(DerivationJson, FixtureIsValid) {
    const auto e = catalog::make_example12();
    const auto d = derivation_from_json(e, read_text(fixture_path("example12_witness.json")));
    EXPECT_TRUE(validate_derivation(e, *d).ok());
    EXPECT_EQ(d->conclusion, testing::prof(e, "q", "q", {}));
}

TEST(DerivationJson, SchemaErrors) {
    const auto e = catalog::make_example12();
    auto bad = [&](const std::string& text) { EXPECT_THROW(derivation_from_json(e, text), ParseError) << text; };
    bad(R"({"format_version":1,"rule":"X","conclusion":{"root":"q","bound":"q","ports":[]},"premises":[]})");
    bad(R"({"format_version":1,"rule":"A","premises":[]})");
    bad(R"({"format_version":1,"rule":"A","conclusion":{"root":"q","bound":"q","ports":["nope"]},"premises":[]})");
    bad(R"({"format_version":1,"rule":"A","conclusion":{"root":"q","bound":"q","ports":[]}})");
    bad(R"({"format_version":1,"rule":"D","port":3,"conclusion":{"root":"q","bound":"q","ports":[]},"premises":[]})");
    // Well-formed but wrong: parses, then fails validation.
    const auto d = derivation_from_json(
        e, R"({"format_version":1,"rule":"A","conclusion":{"root":"q","bound":"q","ports":[]},
              "transition":{"source":"q","letter":"a","left":"bot","right":"bot"},"premises":[]})");
    EXPECT_FALSE(validate_derivation(e, *d).ok());
}

TEST(Dot, ExportsAreValid) {
    const auto f = catalog::make_finite_run_fragment();
    const auto d = catalog::finite_run_fragment_derivation(f);
    std::string err;
    EXPECT_TRUE(is_valid_dot(derivation_to_dot(f, *d), &err)) << err;
    EXPECT_TRUE(is_valid_dot(run_graph_to_dot(f, realize(f, *d)), &err)) << err;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto a = oracle::random_automaton({}, seed);
        const auto g = oracle::random_run_graph(a, 8, seed);
        EXPECT_TRUE(is_valid_dot(run_graph_to_dot(a, g), &err)) << err;
    }
    EXPECT_NE(run_graph_to_dot(f, realize(f, *d)).find("format_version"), std::string::npos);
}

TEST(Dot, ValidatorRejectsMalformedInput) {
    EXPECT_TRUE(is_valid_dot("digraph { a -> b -> c [x=1, y=\"q\"]; subgraph s { d } /* c */ }"));
    EXPECT_TRUE(is_valid_dot("strict graph g { a -- b; node [shape=box]; n1:p1:n; x = y }"));
    EXPECT_TRUE(is_valid_dot("# preprocessor line\ndigraph { -1.5 -> <<b>html</b>> }"));
    EXPECT_FALSE(is_valid_dot("digraph { a -- b }"));
    EXPECT_FALSE(is_valid_dot("graph { a -> b }"));
    EXPECT_FALSE(is_valid_dot("digraph { a -> }"));
    EXPECT_FALSE(is_valid_dot("digraph { a [label=] }"));
    EXPECT_FALSE(is_valid_dot("digraph { \"unterminated }"));
    EXPECT_FALSE(is_valid_dot("digraph { a } extra"));
    EXPECT_FALSE(is_valid_dot("tree { a }"));
    EXPECT_FALSE(is_valid_dot("digraph { 1abc }"));
    EXPECT_FALSE(is_valid_dot("digraph { node }"));
}

}  // namespace
}  // namespace subzero
