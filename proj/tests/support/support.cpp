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

#include "support.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace subzero::testing {

std::string fixture_path(const std::string& name) { return std::string(SUBZERO_FIXTURE_DIR) + "/" + name; }

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

AutomatonFile load_fixture(const std::string& name) {
    const std::string path = fixture_path(name);
    return parse_automaton(read_text(path), path);
}

StateId st(const SubzeroAutomaton& a, const std::string& name) {
    auto q = a.find_state(name);
    if (!q) throw std::runtime_error("no state " + name);
    return *q;
}

Transition tr(const SubzeroAutomaton& a, const std::string& src, const std::string& letter, const std::string& left,
              const std::string& right) {
    auto l = a.find_letter(letter);
    if (!l) throw std::runtime_error("no letter " + letter);
    return Transition{st(a, src), *l, st(a, left), st(a, right)};
}

Multiset ms(const SubzeroAutomaton& a, std::initializer_list<const char*> names) {
    Multiset m(a.state_count());
    for (const char* n : names) m.add(st(a, n));
    return m;
}

Profile prof(const SubzeroAutomaton& a, const std::string& root, const std::string& bound,
             std::initializer_list<const char*> ports) {
    return Profile{st(a, root), st(a, bound), ms(a, ports)};
}

namespace {

enum class Tok { Id, LBrace, RBrace, LBracket, RBracket, Semi, Comma, Colon, Equals, EdgeOp, End };

struct Token {
    Tok kind;
    std::string text;
};

struct DotError {
    std::string message;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    bool line_start = true;
    while (i < s.size()) {
        const char c = s[i];
        if (c == '\n') {
            line_start = true;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '#' && line_start) {  // preprocessor-style line
            while (i < s.size() && s[i] != '\n') ++i;
            continue;
        }
        line_start = false;
        if (s.compare(i, 2, "//") == 0) {
            while (i < s.size() && s[i] != '\n') ++i;
            continue;
        }
        if (s.compare(i, 2, "/*") == 0) {
            const auto end = s.find("*/", i + 2);
            if (end == std::string::npos) throw DotError{"unterminated comment"};
            i = end + 2;
            continue;
        }
        switch (c) {
            case '{': out.push_back({Tok::LBrace, "{"}); ++i; continue;
            case '}': out.push_back({Tok::RBrace, "}"}); ++i; continue;
            case '[': out.push_back({Tok::LBracket, "["}); ++i; continue;
            case ']': out.push_back({Tok::RBracket, "]"}); ++i; continue;
            case ';': out.push_back({Tok::Semi, ";"}); ++i; continue;
            case ',': out.push_back({Tok::Comma, ","}); ++i; continue;
            case ':': out.push_back({Tok::Colon, ":"}); ++i; continue;
            case '=': out.push_back({Tok::Equals, "="}); ++i; continue;
            default: break;
        }
        if (s.compare(i, 2, "->") == 0 || s.compare(i, 2, "--") == 0) {
            out.push_back({Tok::EdgeOp, s.substr(i, 2)});
            i += 2;
            continue;
        }
        if (c == '"') {
            std::size_t j = i + 1;
            while (j < s.size() && s[j] != '"') {
                if (s[j] == '\\') ++j;
                ++j;
            }
            if (j >= s.size()) throw DotError{"unterminated string"};
            out.push_back({Tok::Id, s.substr(i, j + 1 - i)});
            i = j + 1;
            continue;
        }
        if (c == '<') {
            int depth = 0;
            std::size_t j = i;
            for (; j < s.size(); ++j) {
                if (s[j] == '<') ++depth;
                if (s[j] == '>' && --depth == 0) break;
            }
            if (j >= s.size()) throw DotError{"unterminated HTML id"};
            out.push_back({Tok::Id, s.substr(i, j + 1 - i)});
            i = j + 1;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || static_cast<unsigned char>(c) >= 0x80) {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' ||
                                    static_cast<unsigned char>(s[j]) >= 0x80)) {
                ++j;
            }
            out.push_back({Tok::Id, s.substr(i, j - i)});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-') {
            std::size_t j = i;
            if (s[j] == '-') ++j;
            bool digits = false, dot = false;
            while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || (s[j] == '.' && !dot))) {
                if (s[j] == '.') dot = true; else digits = true;
                ++j;
            }
            if (!digits) throw DotError{"malformed numeral"};
            if (j < s.size() && (std::isalpha(static_cast<unsigned char>(s[j])) || s[j] == '_')) {
                throw DotError{"identifier may not start with a digit"};
            }
            out.push_back({Tok::Id, s.substr(i, j - i)});
            i = j;
            continue;
        }
        throw DotError{std::string("unexpected character '") + c + "'"};
    }
    out.push_back({Tok::End, ""});
    return out;
}

bool keyword(const Token& t, const char* kw) {
    if (t.kind != Tok::Id || t.text.size() != std::char_traits<char>::length(kw)) return false;
    for (std::size_t i = 0; i < t.text.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(t.text[i])) != kw[i]) return false;
    }
    return true;
}

class DotParser {
public:
    explicit DotParser(std::vector<Token> toks) : t_(std::move(toks)) {}

    void graph() {
        if (keyword(peek(), "strict")) ++i_;
        if (keyword(peek(), "digraph")) {
            edge_op_ = "->";
        } else if (keyword(peek(), "graph")) {
            edge_op_ = "--";
        } else {
            fail("expected 'graph' or 'digraph'");
        }
        ++i_;
        if (peek().kind == Tok::Id) ++i_;
        expect(Tok::LBrace, "'{'");
        stmt_list();
        expect(Tok::RBrace, "'}'");
        if (peek().kind != Tok::End) fail("trailing input after graph");
    }

private:
    const Token& peek(std::size_t ahead = 0) const { return t_[std::min(i_ + ahead, t_.size() - 1)]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw DotError{what + " at token " + std::to_string(i_) + " ('" + peek().text + "')"};
    }

    void expect(Tok k, const char* what) {
        if (peek().kind != k) fail(std::string("expected ") + what);
        ++i_;
    }

    void id() {
        if (peek().kind != Tok::Id) fail("expected an id");
        ++i_;
    }

    void stmt_list() {
        while (peek().kind != Tok::RBrace && peek().kind != Tok::End) {
            stmt();
            if (peek().kind == Tok::Semi) ++i_;
        }
    }

    void stmt() {
        if (keyword(peek(), "graph") || keyword(peek(), "node") || keyword(peek(), "edge")) {
            ++i_;
            attr_list(true);
            return;
        }
        if (peek().kind == Tok::Id && peek(1).kind == Tok::Equals) {
            ++i_;
            ++i_;
            id();
            return;
        }
        node_or_subgraph();
        if (peek().kind == Tok::EdgeOp) {
            while (peek().kind == Tok::EdgeOp) {
                if (peek().text != edge_op_) fail("edge operator does not match graph kind");
                ++i_;
                node_or_subgraph();
            }
        }
        attr_list(false);
    }

    void node_or_subgraph() {
        if (keyword(peek(), "subgraph") || peek().kind == Tok::LBrace) {
            if (keyword(peek(), "subgraph")) {
                ++i_;
                if (peek().kind == Tok::Id) ++i_;
            }
            expect(Tok::LBrace, "'{'");
            stmt_list();
            expect(Tok::RBrace, "'}'");
            return;
        }
        if (keyword(peek(), "node") || keyword(peek(), "edge") || keyword(peek(), "graph") ||
            keyword(peek(), "digraph") || keyword(peek(), "strict")) {
            fail("keyword used as node id");
        }
        id();
        if (peek().kind == Tok::Colon) {
            ++i_;
            id();
            if (peek().kind == Tok::Colon) {
                ++i_;
                id();
            }
        }
    }

    void attr_list(bool required) {
        if (peek().kind != Tok::LBracket) {
            if (required) fail("expected '['");
            return;
        }
        while (peek().kind == Tok::LBracket) {
            ++i_;
            while (peek().kind != Tok::RBracket) {
                id();
                expect(Tok::Equals, "'='");
                id();
                if (peek().kind == Tok::Semi || peek().kind == Tok::Comma) ++i_;
            }
            ++i_;
        }
    }

    std::vector<Token> t_;
    std::size_t i_ = 0;
    std::string edge_op_;
};

}  // namespace

bool is_valid_dot(const std::string& text, std::string* error) {
    try {
        DotParser(lex(text)).graph();
        return true;
    } catch (const DotError& e) {
        if (error) *error = e.message;
        return false;
    }
}

}  // namespace subzero::testing
