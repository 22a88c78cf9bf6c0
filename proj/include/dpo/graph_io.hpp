#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dpo/error.hpp"
#include "dpo/graph.hpp"

namespace dpo {

namespace detail {

/// Tokenizer for the bracketed text format shared by graph and rule files.
/// Whitespace-insensitive, `#` starts a comment running to end of line.
class Tokenizer {
public:
    struct Token {
        enum class Kind { Word, Int, String, Open, Close, End };
        Kind kind = Kind::End;
        std::string text;
        long long value = 0;
        int line = 0;
    };

    explicit Tokenizer(std::string_view input) : in_(input) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

    int line() const { return line_; }

    [[noreturn]] void fail(const std::string& reason) const { throw ParseError(tok_.line, reason); }

    void expect_open() {
        if (next().kind != Token::Kind::Open)
            throw ParseError(line_, "expected '['");
    }

    void expect_word(std::string_view w) {
        Token t = next();
        if (t.kind != Token::Kind::Word || t.text != w)
            throw ParseError(t.line, "expected '" + std::string(w) + "'");
    }

    long long expect_int() {
        Token t = next();
        if (t.kind != Token::Kind::Int)
            throw ParseError(t.line, "expected integer");
        return t.value;
    }

    std::string expect_string() {
        Token t = next();
        if (t.kind != Token::Kind::String)
            throw ParseError(t.line, "expected quoted string");
        return t.text;
    }

private:
    void advance() {
        skip_ws();
        tok_ = Token{};
        tok_.line = line_;
        if (pos_ >= in_.size()) {
            tok_.kind = Token::Kind::End;
            return;
        }
        char c = in_[pos_];
        if (c == '[') {
            ++pos_;
            tok_.kind = Token::Kind::Open;
        } else if (c == ']') {
            ++pos_;
            tok_.kind = Token::Kind::Close;
        } else if (c == '"') {
            ++pos_;
            std::string s;
            while (pos_ < in_.size() && in_[pos_] != '"') {
                char d = in_[pos_++];
                if (d == '\\') {
                    if (pos_ >= in_.size())
                        throw ParseError(line_, "unterminated escape in string");
                    char e = in_[pos_++];
                    switch (e) {
                    case 'n': s.push_back('\n'); break;
                    case 't': s.push_back('\t'); break;
                    default: s.push_back(e); break;
                    }
                } else {
                    if (d == '\n')
                        ++line_;
                    s.push_back(d);
                }
            }
            if (pos_ >= in_.size())
                throw ParseError(tok_.line, "unterminated string");
            ++pos_; // closing quote
            tok_.kind = Token::Kind::String;
            tok_.text = std::move(s);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = 0;
            std::size_t start = pos_;
            while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
                v = v * 10 + (in_[pos_] - '0');
                ++pos_;
            }
            if (pos_ - start > 18)
                throw ParseError(line_, "integer literal too large");
            tok_.kind = Token::Kind::Int;
            tok_.value = v;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < in_.size() &&
                   (std::isalnum(static_cast<unsigned char>(in_[pos_])) || in_[pos_] == '_'))
                ++pos_;
            tok_.kind = Token::Kind::Word;
            tok_.text = std::string(in_.substr(start, pos_ - start));
        } else {
            throw ParseError(line_, std::string("unexpected character '") + c + "'");
        }
    }

    void skip_ws() {
        while (pos_ < in_.size()) {
            char c = in_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '#') {
                while (pos_ < in_.size() && in_[pos_] != '\n')
                    ++pos_;
            } else {
                break;
            }
        }
    }

    std::string_view in_;
    std::size_t pos_ = 0;
    int line_ = 1;
    Token tok_;
};

struct ParsedNode {
    long long id;
    std::string label;
};
struct ParsedEdge {
    long long source, target;
    std::string label;
    int line;
};

/// Parses one `node [...]` or `edge [...]` item; the leading keyword has
/// already been consumed.
inline void parse_item(Tokenizer& tk, bool is_node, std::vector<ParsedNode>& nodes,
                       std::vector<ParsedEdge>& edges) {
    int line = tk.line();
    tk.expect_open();
    if (is_node) {
        tk.expect_word("id");
        long long id = tk.expect_int();
        tk.expect_word("label");
        std::string lbl = tk.expect_string();
        nodes.push_back({id, std::move(lbl)});
    } else {
        tk.expect_word("source");
        long long s = tk.expect_int();
        tk.expect_word("target");
        long long t = tk.expect_int();
        tk.expect_word("label");
        std::string lbl = tk.expect_string();
        edges.push_back({s, t, std::move(lbl), line});
    }
    if (tk.next().kind != Tokenizer::Token::Kind::Close)
        throw ParseError(tk.line(), "expected ']' after item");
}

/// Assembles parsed items into a graph. Ids map to internal indices in file
/// order; duplicates, dangling endpoints, loops and parallel edges reject.
inline LabeledGraph assemble_graph(const std::vector<ParsedNode>& nodes,
                                   const std::vector<ParsedEdge>& edges, std::string name = {}) {
    GraphBuilder b(std::move(name));
    std::unordered_map<long long, Vertex> index_of;
    for (const auto& n : nodes) {
        if (index_of.count(n.id))
            throw InvalidGraph("duplicate node id " + std::to_string(n.id));
        index_of[n.id] = b.add_vertex(n.label);
    }
    for (const auto& e : edges) {
        auto su = index_of.find(e.source);
        auto tv = index_of.find(e.target);
        if (su == index_of.end())
            throw InvalidGraph("unknown edge endpoint id " + std::to_string(e.source));
        if (tv == index_of.end())
            throw InvalidGraph("unknown edge endpoint id " + std::to_string(e.target));
        b.add_edge(su->second, tv->second, e.label);
    }
    return b.build(); // LabeledGraph ctor rejects loops and parallel edges
}

inline void quote_string(std::string& out, const std::string& s) {
    out.push_back('"');
    for (char c : s) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
}

} // namespace detail

/// Parses the graph text format:
///   graph [ node [ id INT label STRING ]  edge [ source INT target INT label STRING ] ... ]
inline LabeledGraph parse_graph(std::string_view text, std::string name = {}) {
    detail::Tokenizer tk(text);
    tk.expect_word("graph");
    tk.expect_open();
    std::vector<detail::ParsedNode> nodes;
    std::vector<detail::ParsedEdge> edges;
    for (;;) {
        auto t = tk.next();
        if (t.kind == detail::Tokenizer::Token::Kind::Close)
            break;
        if (t.kind != detail::Tokenizer::Token::Kind::Word)
            throw ParseError(t.line, "expected 'node', 'edge' or ']'");
        if (t.text == "node")
            detail::parse_item(tk, true, nodes, edges);
        else if (t.text == "edge")
            detail::parse_item(tk, false, nodes, edges);
        else
            throw ParseError(t.line, "unknown item '" + t.text + "'");
    }
    if (tk.peek().kind != detail::Tokenizer::Token::Kind::End)
        throw ParseError(tk.peek().line, "trailing input after graph");
    return detail::assemble_graph(nodes, edges, std::move(name));
}

/// Renders a graph in the same format; parse_graph(render_graph(g)) == g with
/// vertex order preserved (ids are the internal indices).
inline std::string render_graph(const LabeledGraph& g) {
    std::string out = "graph [\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out += "  node [ id " + std::to_string(v) + " label ";
        detail::quote_string(out, label_text(g.vertex_label(v)));
        out += " ]\n";
    }
    for (const auto& e : g.edges()) {
        out += "  edge [ source " + std::to_string(e.u) + " target " + std::to_string(e.v) +
               " label ";
        detail::quote_string(out, label_text(e.label));
        out += " ]\n";
    }
    out += "]\n";
    return out;
}

} // namespace dpo
