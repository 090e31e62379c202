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

#include "subzero_cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "subzero/bounds.hpp"
#include "subzero/catalog.hpp"
#include "subzero/engine.hpp"
#include "subzero/errors.hpp"
#include "subzero/formats.hpp"
#include "subzero/oracle.hpp"
#include "subzero/realizer.hpp"
#include "subzero/runcheck.hpp"

namespace subzero::cli {

namespace {

// A failed check: the message goes to stderr and the exit code is 1.
struct CheckFailed {
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content)) throw UsageError("cannot write '" + path + "'");
}

AutomatonFile load_automaton(const std::string& path) { return parse_automaton(read_file(path), path); }

StateId lookup_state(const SubzeroAutomaton& a, const std::string& name) {
    auto q = a.find_state(name);
    if (!q) throw UsageError("unknown state '" + name + "'");
    return *q;
}

// "q1,q2 q2" -> {q1, q2, q2}; commas and blanks both separate.
Multiset parse_ports(const SubzeroAutomaton& a, const std::string& list) {
    Multiset m(a.state_count());
    std::string item;
    auto flush = [&] {
        if (!item.empty()) m.add(lookup_state(a, item));
        item.clear();
    };
    for (char c : list) {
        if (c == ',' || c == ' ' || c == '\t') {
            flush();
        } else {
            item += c;
        }
    }
    flush();
    return m;
}

std::string join_nodes(const std::vector<NodeId>& nodes) {
    std::string out;
    for (NodeId n : nodes) out += (out.empty() ? "" : " ") + std::to_string(n);
    return out;
}

struct ProfileArgs {
    std::string root, bound, ports;

    void add(CLI::App* app) {
        app->add_option("--root", root, "root state")->required();
        app->add_option("--bound", bound, "bound state")->required();
        app->add_option("--ports", ports, "port multiset, comma separated")->default_val("");
    }

    Profile profile(const SubzeroAutomaton& a) const {
        return Profile{lookup_state(a, root), lookup_state(a, bound), parse_ports(a, ports)};
    }
};

class Cli {
public:
    Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(const std::vector<std::string>& args) {
        CLI::App app{"Regular emptiness and run checking for subzero tree automata", "subzero"};
        app.require_subcommand(1);
        app.fallthrough(false);
        setup(app);
        try {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e, out_, err_);
            return code == 0 ? kExitOk : kExitUsage;
        }
        try {
            action_();
            return kExitOk;
        } catch (const CheckFailed& e) {
            if (!e.message.empty()) err_ << e.message << '\n';
            return kExitCheckFailed;
        } catch (const StructuralError& e) {
            err_ << "error: " << e.what() << '\n';
            return kExitCheckFailed;
        } catch (const ParseError& e) {
            err_ << e.what() << '\n';
            return kExitUsage;
        } catch (const UsageError& e) {
            err_ << "error: " << e.what() << '\n';
            return kExitUsage;
        } catch (const RuleError& e) {
            err_ << "error: " << e.what() << '\n';
            return kExitCheckFailed;
        }
    }

private:
    void on(CLI::App* sub, std::function<void()> fn) {
        sub->callback([this, fn = std::move(fn)] { action_ = fn; });
    }

    void setup(CLI::App& app) {
        setup_validate(app);
        setup_decide(app);
        setup_derivable(app);
        setup_realize(app);
        setup_check_run(app);
        setup_measure(app);
        setup_bound(app);
        setup_example(app);
        setup_oracle(app);
        setup_l3(app);
    }

    void setup_validate(CLI::App& app) {
        auto* sub = app.add_subcommand("validate", "check an automaton file");
        sub->add_option("FILE", file_)->required();
        on(sub, [this] {
            const auto parsed = parse_automaton(read_file(file_), file_, false);
            const auto report = validate_automaton(parsed.automaton);
            if (!report.ok()) {
                std::string msg;
                for (const auto& v : report.violations) msg += file_ + ": " + v.field + ": " + v.message + "\n";
                out_ << "INVALID\n";
                msg.pop_back();
                throw CheckFailed{msg};
            }
            out_ << "OK\n";
        });
    }

    void setup_decide(CLI::App& app) {
        auto* sub = app.add_subcommand("decide", "decide whether a regular accepting run exists");
        sub->add_option("FILE", file_)->required();
        sub->add_option("--state", state_, "initial state (default: the file's start)");
        sub->add_option("--witness", witness_out_, "write the witness derivation (JSON)");
        sub->add_option("--run", run_out_, "write the realized run graph (JSON)");
        sub->add_option("--cap", cap_, "port multiplicity cap")->default_val(2)->check(CLI::Range(1, 255));
        on(sub, [this] {
            const auto file = load_automaton(file_);
            const auto& a = file.automaton;
            std::optional<StateId> q0 = file.start;
            if (!state_.empty()) q0 = lookup_state(a, state_);
            if (!q0) throw UsageError("no initial state: pass --state or add a 'start' line");
            const auto verdict = decide_regular_emptiness(a, *q0, EngineOptions{cap_, SaturationOrder::Rounds});
            out_ << (verdict.nonempty ? "NONEMPTY" : "EMPTY") << '\n';
            if (!verdict.nonempty) {
                if (!witness_out_.empty() || !run_out_.empty()) err_ << "note: no witness for an empty language\n";
                return;
            }
            if (!witness_out_.empty()) write_file(witness_out_, derivation_to_json(a, *verdict.witness));
            if (!run_out_.empty()) write_file(run_out_, run_graph_to_json(a, realize(a, *verdict.witness)));
        });
    }

    void setup_derivable(CLI::App& app) {
        auto* sub = app.add_subcommand("derivable", "whether a profile is derivable");
        sub->add_option("FILE", file_)->required();
        profile_.add(sub);
        sub->add_option("--witness", witness_out_, "write a derivation (JSON) when derivable");
        sub->add_option("--cap", cap_, "port multiplicity cap")->default_val(2)->check(CLI::Range(1, 255));
        on(sub, [this] {
            const auto& a = load_automaton(file_).automaton;
            const Profile target = profile_.profile(a);
            const auto s = saturate(a, EngineOptions{cap_, SaturationOrder::Rounds});
            const bool yes = derivable(s, target);
            out_ << (yes ? "true" : "false") << '\n';
            if (yes && !witness_out_.empty()) {
                write_file(witness_out_, derivation_to_json(a, *extract_witness(s, normalize(target))));
            }
        });
    }

    void setup_realize(CLI::App& app) {
        auto* sub = app.add_subcommand("realize", "compile a derivation into a run graph");
        sub->add_option("FILE", file_)->required();
        sub->add_option("DERIV", input_)->required();
        sub->add_option("-o,--output", run_out_, "run graph (JSON)")->required();
        sub->add_option("--dot", dot_out_, "run graph (DOT)");
        sub->add_option("--derivation-dot", deriv_dot_out_, "derivation tree (DOT)");
        on(sub, [this] {
            const auto& a = load_automaton(file_).automaton;
            const auto d = derivation_from_json(a, read_file(input_), input_);
            const auto report = validate_derivation(a, *d);
            if (!report.ok()) {
                std::string msg = input_ + ": invalid derivation";
                for (const auto& v : report.violations) msg += "\n  at " + v.path + ": " + v.message;
                throw CheckFailed{msg};
            }
            const RunGraph g = realize(a, *d);
            write_file(run_out_, run_graph_to_json(a, g));
            if (!dot_out_.empty()) write_file(dot_out_, run_graph_to_dot(a, g));
            if (!deriv_dot_out_.empty()) write_file(deriv_dot_out_, derivation_to_dot(a, *d));
            out_ << "nodes: " << g.nodes.size() << '\n';
        });
    }

    void setup_check_run(CLI::App& app) {
        auto* sub = app.add_subcommand("check-run", "check a run graph against an automaton");
        sub->add_option("FILE", file_)->required();
        sub->add_option("RUN", input_)->required();
        on(sub, [this] {
            const auto& a = load_automaton(file_).automaton;
            const RunGraph g = run_graph_from_json(a, read_file(input_), input_);
            const auto r = check_partial_run(a, g);
            out_ << "transitions: " << (r.transitions_ok ? "ok" : "FAILED at nodes " + join_nodes(r.inconsistent_nodes))
                 << '\n';
            out_ << "all-condition: "
                 << (r.all_condition() ? "ok" : "FAILED on cycle " + join_nodes(*r.all_counterexample)) << '\n';
            out_ << "zero-measure: " << format_fraction(r.zero_measure) << '\n';
            out_ << "ports: " << r.port_count << '\n';
            out_ << "partial-run: " << (r.partial_run_ok() ? "ok" : "FAILED") << '\n';
            out_ << "accepting-run: " << (r.partial_run_ok() && r.port_count == 0 ? "yes" : "no") << '\n';
            if (!r.partial_run_ok()) throw CheckFailed{};
        });
    }

    void setup_measure(CLI::App& app) {
        auto* sub = app.add_subcommand("measure", "measure of branches violating the zero condition");
        sub->add_option("FILE", file_)->required();
        sub->add_option("RUN", input_)->required();
        sub->add_option("--mc", samples_, "also estimate with this many random branches")->default_val(0);
        sub->add_option("--horizon", horizon_, "Monte Carlo branch length")->default_val(200);
        sub->add_option("--seed", seed_, "Monte Carlo seed")->default_val(1);
        on(sub, [this] {
            const auto& a = load_automaton(file_).automaton;
            const RunGraph g = run_graph_from_json(a, read_file(input_), input_);
            out_ << "exact: " << format_fraction(zero_measure_exact(a, g)) << '\n';
            if (samples_ > 0) {
                const double est = oracle::mc_zero_measure(a, g, samples_, horizon_, seed_);
                out_ << "monte-carlo: " << std::fixed << std::setprecision(6) << est << '\n';
            }
        });
    }

    void setup_bound(CLI::App& app) {
        auto* sub = app.add_subcommand("bound", "evaluate the size bounds f, g, h");
        sub->add_option("--q", bq_, "state level q")->required();
        sub->add_option("--n", bn_, "argument n")->required();
        sub->add_option("--size-q", bparams_.size_q, "|Q|")->required()->check(CLI::PositiveNumber);
        sub->add_option("--c1", bparams_.c1, "constant c1")->default_val(8)->check(CLI::PositiveNumber);
        sub->add_option("--c2", bparams_.c2, "constant c2")->default_val(8)->check(CLI::PositiveNumber);
        sub->add_option("--fn", bfn_, "which bound")->default_val("f")->check(CLI::IsMember({"f", "g", "h"}));
        sub->add_option("--k", bk_, "iteration count for g and h")->default_val(0);
        sub->add_option("--max-bits", bparams_.max_bits, "largest value, in bits")->default_val(bparams_.max_bits);
        on(sub, [this] {
            BoundResult r;
            if (bfn_ == "f") {
                r = bound_f(bparams_, bq_, bn_);
            } else if (bfn_ == "g") {
                r = bound_g(bparams_, bq_, bn_, bk_);
            } else {
                r = bound_h(bparams_, bq_, bn_, bk_);
            }
            if (!r.ok()) {
                out_ << "OVERFLOW: " << r.overflow << '\n';
                throw CheckFailed{};
            }
            out_ << r.value->get_str() << '\n';
        });
    }

    void setup_example(CLI::App& app) {
        auto* sub = app.add_subcommand("example", "write a reference automaton");
        sub->add_option("NAME", name_)->required()->check(CLI::IsMember({"example12", "l3", "parity-demo"}));
        sub->add_option("-o,--output", file_out_, "output file (default: stdout)");
        on(sub, [this] {
            AutomatonFile f;
            if (name_ == "example12") {
                f.automaton = catalog::make_example12();
                f.start = f.automaton.find_state("q");
            } else if (name_ == "l3") {
                f.automaton = catalog::make_l3();
                f.start = f.automaton.find_state("E");
            } else {
                f.automaton = catalog::make_parity_demo();
                f.start = f.automaton.find_state("q");
            }
            const std::string text = serialize_automaton(f);
            if (file_out_.empty()) {
                out_ << text;
            } else {
                write_file(file_out_, text);
            }
        });
    }

    void setup_oracle(CLI::App& app) {
        auto* sub = app.add_subcommand("oracle", "brute-force cross-checks");
        sub->require_subcommand(1);
        auto* en = sub->add_subcommand("enumerate", "search derivations of a profile within caps");
        en->add_option("FILE", file_)->required();
        profile_.add(en);
        en->add_option("--size-cap", caps_.size_cap, "derivation vertices")->default_val(12);
        en->add_option("--mult-cap", caps_.multiplicity_cap, "multiplicity per state")->default_val(3);
        en->add_option("--witness", witness_out_, "write the derivation found (JSON)");
        on(en, [this] {
            const auto& a = load_automaton(file_).automaton;
            const auto d = oracle::enumerate_derivations(a, profile_.profile(a), caps_);
            if (!d) {
                out_ << "NOT FOUND within caps (size " << caps_.size_cap << ", multiplicity " << caps_.multiplicity_cap
                     << ")\n";
                return;
            }
            out_ << "FOUND size " << derivation_size(*d) << '\n';
            if (!witness_out_.empty()) write_file(witness_out_, derivation_to_json(a, *d));
        });
        auto* runs = sub->add_subcommand("runs", "profiles of finite runs up to a depth");
        runs->add_option("FILE", file_)->required();
        runs->add_option("--root", state_, "root state")->required();
        runs->add_option("--depth", depth_, "largest depth")->default_val(3)->check(CLI::Range(1, 8));
        on(runs, [this] {
            const auto& a = load_automaton(file_).automaton;
            for (const auto& p : oracle::enumerate_finite_runs(a, lookup_state(a, state_), depth_)) {
                out_ << to_string(a, p) << '\n';
            }
        });
    }

    void setup_l3(CLI::App& app) {
        auto* sub = app.add_subcommand("l3-witness", "block schedule of the non-regular L3 tree");
        sub->add_option("--blocks", blocks_, "number of blocks")->required()->check(CLI::Range(1, 40));
        sub->add_flag("--sum", sum_, "print the measure partial sum");
        sub->add_flag("--prefix", prefix_, "print the labeled levels (at most 24 deep)");
        on(sub, [this] {
            const auto s = catalog::l3_block_schedule(blocks_);
            out_ << "schedule:";
            for (auto f : s.boundaries) out_ << ' ' << f;
            out_ << '\n';
            if (sum_) {
                const auto m = catalog::l3_measure_bound(s);
                out_ << "sum: " << format_fraction(m.sum) << '\n';
                out_ << "at-most-one: " << (m.at_most_one ? "yes" : "no") << '\n';
            }
            if (prefix_) {
                const auto p = catalog::l3_witness_prefix(s);
                for (std::size_t d = 0; d < p.levels.size(); ++d) out_ << d << ": " << p.levels[d] << '\n';
            }
        });
    }

    std::ostream& out_;
    std::ostream& err_;
    std::function<void()> action_;

    std::string file_, input_, state_, name_;
    std::string witness_out_, run_out_, dot_out_, deriv_dot_out_, file_out_;
    std::uint32_t cap_ = 2;
    ProfileArgs profile_;
    std::uint64_t samples_ = 0, horizon_ = 200, seed_ = 1;
    BoundParams bparams_;
    std::uint64_t bq_ = 0, bn_ = 0, bk_ = 0;
    std::string bfn_ = "f";
    oracle::EnumerationCaps caps_;
    std::uint32_t depth_ = 3;
    std::size_t blocks_ = 1;
    bool sum_ = false, prefix_ = false;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    return Cli(out, err).run(args);
}

}  // namespace subzero::cli
