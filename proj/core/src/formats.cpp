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

#include "subzero/formats.hpp"

#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "subzero/errors.hpp"

namespace subzero {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> split_words(std::string_view line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

class AutomatonParser {
public:
    AutomatonParser(const std::string& source, bool validate) : source_(source), validate_(validate) {}

    AutomatonFile run(std::string_view text) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            ++line_;
            std::string_view line = text.substr(pos, end - pos);
            if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
            directive(split_words(line));
            pos = end + 1;
        }
        line_ = 0;
        if (!seen_.count("states")) fail("missing 'states' directive");
        if (!seen_.count("alphabet")) fail("missing 'alphabet' directive");
        if (auto report = validate_automaton(out_.automaton); validate_ && !report.ok()) {
            fail(report.violations.front().field + ": " + report.violations.front().message);
        }
        return std::move(out_);
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(source_, line_, what); }

    void once(const std::string& name) {
        if (!seen_.insert(name).second) fail("duplicate '" + name + "' directive");
    }

    void check_ids(const std::vector<std::string>& words) const {
        for (std::size_t i = 1; i < words.size(); ++i) {
            if (!is_identifier(words[i])) fail("invalid identifier '" + words[i] + "'");
        }
    }

    void require_declared(const char* what) const {
        if (!seen_.count(what)) fail(std::string("'") + what + "' must be declared first");
    }

    StateId state(const std::string& name) const {
        require_declared("states");
        auto it = states_.find(name);
        if (it == states_.end()) fail("unknown state '" + name + "'");
        return it->second;
    }

    Letter letter(const std::string& name) const {
        require_declared("alphabet");
        auto it = letters_.find(name);
        if (it == letters_.end()) fail("unknown letter '" + name + "'");
        return it->second;
    }

    void names(const std::vector<std::string>& words, std::vector<std::string>& into, auto& index, auto make) {
        if (words.size() < 2) fail("'" + words[0] + "' needs at least one identifier");
        for (std::size_t i = 1; i < words.size(); ++i) {
            if (!index.emplace(words[i], make(static_cast<std::uint32_t>(into.size()))).second) {
                fail("duplicate name '" + words[i] + "'");
            }
            into.push_back(words[i]);
        }
    }

    void directive(const std::vector<std::string>& words) {
        if (words.empty()) return;
        const std::string& d = words[0];
        auto& a = out_.automaton;
        if (d == "states") {
            once(d);
            check_ids(words);
            names(words, a.state_names, states_, [](std::uint32_t i) { return StateId{i}; });
        } else if (d == "alphabet") {
            once(d);
            check_ids(words);
            names(words, a.alphabet_names, letters_, [](std::uint32_t i) { return Letter{i}; });
        } else if (d == "all" || d == "zero") {
            once(d);
            check_ids(words);
            auto& set = d == "all" ? a.q_all : a.q_zero;
            for (std::size_t i = 1; i < words.size(); ++i) set.push_back(state(words[i]));
        } else if (d == "start") {
            once(d);
            check_ids(words);
            if (words.size() != 2) fail("'start' takes exactly one state");
            out_.start = state(words[1]);
        } else if (d == "trans") {
            check_ids(words);
            if (words.size() != 5) fail("'trans' takes <src> <letter> <left> <right>");
            a.transitions.push_back(Transition{state(words[1]), letter(words[2]), state(words[3]), state(words[4])});
        } else {
            fail("unknown directive '" + d + "'");
        }
    }

    std::string source_;
    bool validate_;
    std::size_t line_ = 0;
    AutomatonFile out_;
    std::set<std::string> seen_;
    std::unordered_map<std::string, StateId> states_;
    std::unordered_map<std::string, Letter> letters_;
};

// JSON reading helpers. Every schema problem becomes a ParseError without a
// line number; nlohmann reports byte offsets for syntax errors.
class JsonReader {
public:
    JsonReader(const SubzeroAutomaton& a, const std::string& source) : a_(a), source_(source) {}

    Json parse(std::string_view text) const {
        try {
            return Json::parse(text);
        } catch (const Json::parse_error& e) {
            fail(e.what());
        }
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(source_, 0, what); }

    const Json& field(const Json& obj, const char* key) const {
        if (!obj.is_object()) fail(std::string("expected an object holding '") + key + "'");
        auto it = obj.find(key);
        if (it == obj.end()) fail(std::string("missing field '") + key + "'");
        return *it;
    }

    std::string str(const Json& obj, const char* key) const {
        const Json& v = field(obj, key);
        if (!v.is_string()) fail(std::string("field '") + key + "' must be a string");
        return v.get<std::string>();
    }

    std::uint64_t uint(const Json& obj, const char* key) const {
        const Json& v = field(obj, key);
        if (!v.is_number_unsigned()) fail(std::string("field '") + key + "' must be a non-negative integer");
        return v.get<std::uint64_t>();
    }

    void version(const Json& doc) const {
        if (uint(doc, "format_version") != static_cast<std::uint64_t>(kFormatVersion)) {
            fail("unsupported format_version");
        }
    }

    StateId state(const std::string& name) const {
        auto q = a_.find_state(name);
        if (!q) fail("unknown state '" + name + "'");
        return *q;
    }

    Letter letter(const std::string& name) const {
        auto l = a_.find_letter(name);
        if (!l) fail("unknown letter '" + name + "'");
        return *l;
    }

    const SubzeroAutomaton& automaton() const { return a_; }

private:
    const SubzeroAutomaton& a_;
    std::string source_;
};

Json transition_json(const SubzeroAutomaton& a, const Transition& t) {
    return Json{{"source", a.name(t.source)},
                {"letter", a.alphabet_names.at(t.letter.index)},
                {"left", a.name(t.left)},
                {"right", a.name(t.right)}};
}

Json profile_json(const SubzeroAutomaton& a, const Profile& p) {
    Json ports = Json::array();
    for (StateId q : p.ports.elements()) ports.push_back(a.name(q));
    return Json{{"root", a.name(p.root)}, {"bound", a.name(p.bound)}, {"ports", ports}};
}

Json derivation_json(const SubzeroAutomaton& a, const Derivation& d) {
    Json out{{"rule", std::string(rule_tag(d.rule))}, {"conclusion", profile_json(a, d.conclusion)}};
    if (d.transition) out["transition"] = transition_json(a, *d.transition);
    if (d.port) out["port"] = a.name(*d.port);
    Json premises = Json::array();
    for (const auto& p : d.premises) premises.push_back(derivation_json(a, *p));
    out["premises"] = std::move(premises);
    return out;
}

DerivationPtr read_derivation(const JsonReader& r, const Json& j, std::size_t depth) {
    if (depth > 100000) r.fail("derivation nested too deeply");
    auto d = std::make_shared<Derivation>();
    auto rule = rule_from_tag(r.str(j, "rule"));
    if (!rule) r.fail("unknown rule '" + r.str(j, "rule") + "'");
    d->rule = *rule;
    const Json& c = r.field(j, "conclusion");
    d->conclusion.root = r.state(r.str(c, "root"));
    d->conclusion.bound = r.state(r.str(c, "bound"));
    const Json& ports = r.field(c, "ports");
    if (!ports.is_array()) r.fail("'ports' must be an array");
    d->conclusion.ports = Multiset(r.automaton().state_count());
    for (const auto& p : ports) {
        if (!p.is_string()) r.fail("'ports' entries must be strings");
        d->conclusion.ports.add(r.state(p.get<std::string>()));
    }
    if (j.contains("transition")) {
        const Json& t = j["transition"];
        d->transition = Transition{r.state(r.str(t, "source")), r.letter(r.str(t, "letter")),
                                   r.state(r.str(t, "left")), r.state(r.str(t, "right"))};
    }
    if (j.contains("port")) {
        const Json& p = j["port"];
        if (!p.is_string()) r.fail("'port' must be a string");
        d->port = r.state(p.get<std::string>());
    }
    const Json& premises = r.field(j, "premises");
    if (!premises.is_array()) r.fail("'premises' must be an array");
    for (const auto& p : premises) d->premises.push_back(read_derivation(r, p, depth + 1));
    return d;
}

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

AutomatonFile parse_automaton(std::string_view text, const std::string& source, bool validate) {
    return AutomatonParser(source, validate).run(text);
}

std::string serialize_automaton(const AutomatonFile& file) {
    const auto& a = file.automaton;
    std::ostringstream out;
    auto list = [&](const char* head, const std::vector<std::string>& names) {
        out << head;
        for (const auto& n : names) out << ' ' << n;
        out << '\n';
    };
    auto states = [&](const std::vector<StateId>& qs) {
        std::vector<std::string> names;
        for (StateId q : qs) names.push_back(a.name(q));
        return names;
    };
    list("states", a.state_names);
    list("alphabet", a.alphabet_names);
    list("all", states(a.q_all));
    list("zero", states(a.q_zero));
    if (file.start) out << "start " << a.name(*file.start) << '\n';
    for (const auto& t : a.transitions) {
        out << "trans " << a.name(t.source) << ' ' << a.alphabet_names.at(t.letter.index) << ' ' << a.name(t.left)
            << ' ' << a.name(t.right) << '\n';
    }
    return out.str();
}

std::string serialize_automaton(const SubzeroAutomaton& a) { return serialize_automaton(AutomatonFile{a, {}}); }

std::string run_graph_to_json(const SubzeroAutomaton& a, const RunGraph& g) {
    Json nodes = Json::array();
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const RunNode& n = g.nodes[i];
        Json node{{"id", i}, {"state", a.name(n.state)}};
        if (n.is_inner()) {
            node["kind"] = "inner";
            node["letter"] = a.alphabet_names.at(n.letter.index);
            node["left"] = n.left;
            node["right"] = n.right;
        } else {
            node["kind"] = "port";
        }
        nodes.push_back(std::move(node));
    }
    Json doc{{"format_version", kFormatVersion}, {"root", g.root}, {"nodes", std::move(nodes)}};
    return doc.dump(2) + "\n";
}

RunGraph run_graph_from_json(const SubzeroAutomaton& a, std::string_view text, const std::string& source) {
    JsonReader r(a, source);
    const Json doc = r.parse(text);
    r.version(doc);
    const Json& nodes = r.field(doc, "nodes");
    if (!nodes.is_array()) r.fail("'nodes' must be an array");
    const std::size_t n = nodes.size();
    RunGraph g;
    g.nodes.resize(n);
    std::vector<bool> seen(n, false);
    auto node_ref = [&](const Json& obj, const char* key) {
        const std::uint64_t id = r.uint(obj, key);
        if (id >= n) r.fail(std::string("'") + key + "' refers to missing node " + std::to_string(id));
        return static_cast<NodeId>(id);
    };
    for (const auto& node : nodes) {
        const NodeId id = node_ref(node, "id");
        if (seen[id]) r.fail("duplicate node id " + std::to_string(id));
        seen[id] = true;
        const StateId q = r.state(r.str(node, "state"));
        const std::string kind = r.str(node, "kind");
        if (kind == "inner") {
            g.nodes[id] = RunNode::inner(q, r.letter(r.str(node, "letter")), node_ref(node, "left"), node_ref(node, "right"));
        } else if (kind == "port") {
            g.nodes[id] = RunNode::port(q);
        } else {
            r.fail("unknown node kind '" + kind + "'");
        }
    }
    g.root = node_ref(doc, "root");
    return g;
}

std::string derivation_to_json(const SubzeroAutomaton& a, const Derivation& d) {
    Json doc{{"format_version", kFormatVersion}};
    const Json body = derivation_json(a, d);
    for (const auto& [k, v] : body.items()) doc[k] = v;
    return doc.dump(2) + "\n";
}

DerivationPtr derivation_from_json(const SubzeroAutomaton& a, std::string_view text, const std::string& source) {
    JsonReader r(a, source);
    const Json doc = r.parse(text);
    r.version(doc);
    return read_derivation(r, doc, 0);
}

std::string run_graph_to_dot(const SubzeroAutomaton& a, const RunGraph& g) {
    std::ostringstream out;
    out << "digraph run {\n  format_version=\"" << kFormatVersion << "\";\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const RunNode& n = g.nodes[i];
        std::string label = a.name(n.state);
        if (n.is_inner()) label += " / " + a.alphabet_names.at(n.letter.index);
        out << "  n" << i << " [label=" << dot_quote(label) << ", shape=" << (n.is_inner() ? "ellipse" : "box");
        if (i == g.root) out << ", peripheries=2";
        out << "];\n";
    }
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const RunNode& n = g.nodes[i];
        if (!n.is_inner()) continue;
        out << "  n" << i << " -> n" << n.left << " [label=\"L\"];\n";
        out << "  n" << i << " -> n" << n.right << " [label=\"R\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string derivation_to_dot(const SubzeroAutomaton& a, const Derivation& d) {
    std::ostringstream out;
    out << "digraph derivation {\n  format_version=\"" << kFormatVersion << "\";\n  rankdir=BT;\n";
    // One vertex per occurrence, so shared premises are drawn as a tree.
    std::size_t next = 0;
    auto emit = [&](auto&& self, const Derivation& node) -> std::size_t {
        const std::size_t id = next++;
        std::string label = std::string(rule_tag(node.rule)) + ": " + to_string(a, node.conclusion);
        if (node.port) label += " [" + a.name(*node.port) + "]";
        out << "  d" << id << " [label=" << dot_quote(label) << ", shape=box];\n";
        for (const auto& p : node.premises) {
            const std::size_t child = self(self, *p);
            out << "  d" << child << " -> d" << id << ";\n";
        }
        return id;
    };
    emit(emit, d);
    out << "}\n";
    return out.str();
}

}  // namespace subzero
