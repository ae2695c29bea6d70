#ifndef QUIVINJ_PRESENTATION_HPP
#define QUIVINJ_PRESENTATION_HPP

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "quivinj/quiver.hpp"

namespace quivinj {

class SyntaxError : public std::runtime_error {
public:
    int line, column;
    SyntaxError(int ln, int col, const std::string& msg)
        : std::runtime_error("syntax error at " + std::to_string(ln) + ":" +
                             std::to_string(col) + ": " + msg),
          line(ln), column(col) {}
};

class SemanticError : public std::runtime_error {
public:
    int line, column;
    SemanticError(int ln, int col, const std::string& msg)
        : std::runtime_error("semantic error at " + std::to_string(ln) + ":" +
                             std::to_string(col) + ": " + msg),
          line(ln), column(col) {}
};

namespace detail {

struct Token {
    enum Kind { Ident, Int, Sym, End } kind;
    std::string text;
    int line, column;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace((unsigned char)src_[pos_])) bump();
        tok_.line = line_;
        tok_.column = col_;
        if (pos_ >= src_.size()) {
            tok_ = {Token::End, "", line_, col_};
            return;
        }
        char c = src_[pos_];
        if (std::isalpha((unsigned char)c) || c == '_') {
            std::string s;
            while (pos_ < src_.size() &&
                   (std::isalnum((unsigned char)src_[pos_]) || src_[pos_] == '_')) {
                s += src_[pos_];
                bump();
            }
            tok_ = {Token::Ident, s, tok_.line, tok_.column};
        } else if (std::isdigit((unsigned char)c)) {
            std::string s;
            while (pos_ < src_.size() && std::isdigit((unsigned char)src_[pos_])) {
                s += src_[pos_];
                bump();
            }
            tok_ = {Token::Int, s, tok_.line, tok_.column};
        } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
            bump();
            bump();
            tok_ = {Token::Sym, "->", tok_.line, tok_.column};
        } else {
            std::string s(1, c);
            bump();
            tok_ = {Token::Sym, s, tok_.line, tok_.column};
        }
    }

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) {}

    MonomialPresentation parse_file() {
        expect_ident("quiver");
        Token name = expect(Token::Ident, "presentation name");
        expect_sym("{");
        expect_ident("vertices");
        expect_sym(":");
        std::vector<VertexId> vertices;
        if (lex_.peek().kind != Token::Int)
            throw SyntaxError(lex_.peek().line, lex_.peek().column,
                              "expected at least one vertex number");
        while (lex_.peek().kind == Token::Int)
            vertices.push_back(std::stoi(lex_.next().text));
        expect_sym(";");

        expect_ident("arrows");
        expect_sym(":");
        std::vector<Arrow> arrows;
        std::vector<Token> arrow_tokens;
        if (!peek_sym(";")) {
            for (;;) {
                Token an = expect(Token::Ident, "arrow name");
                expect_sym(":");
                Token st = expect(Token::Int, "source vertex");
                expect_sym("->");
                Token tt = expect(Token::Int, "target vertex");
                arrows.push_back({an.text, std::stoi(st.text), std::stoi(tt.text)});
                arrow_tokens.push_back(an);
                if (peek_sym(",")) {
                    lex_.next();
                    continue;
                }
                break;
            }
        }
        expect_sym(";");

        expect_ident("relations");
        expect_sym(":");
        struct RawPath {
            std::vector<Token> names;  // as written, right-to-left
        };
        std::vector<RawPath> raw_relations;
        if (!peek_sym(";")) {
            for (;;) {
                RawPath rp;
                rp.names.push_back(expect(Token::Ident, "arrow name in relation"));
                while (peek_sym("*")) {
                    lex_.next();
                    rp.names.push_back(expect(Token::Ident, "arrow name in relation"));
                }
                raw_relations.push_back(std::move(rp));
                if (peek_sym(",")) {
                    lex_.next();
                    continue;
                }
                break;
            }
        }
        expect_sym(";");
        expect_sym("}");
        if (lex_.peek().kind != Token::End)
            throw SyntaxError(lex_.peek().line, lex_.peek().column,
                              "unexpected trailing input");

        Quiver quiver(vertices, arrows);
        // semantic checks against the raw arrow list (token locations available)
        for (size_t i = 0; i < arrows.size(); ++i) {
            const Arrow& a = arrows[i];
            const Token& t = arrow_tokens[i];
            if (!quiver.has_vertex(a.source) || !quiver.has_vertex(a.target))
                throw SemanticError(t.line, t.column,
                                    "arrow " + a.name + " references an unknown vertex");
            for (size_t j = 0; j < i; ++j)
                if (arrows[j].name == a.name)
                    throw SemanticError(t.line, t.column, "duplicate arrow name: " + a.name);
        }

        std::vector<Path> relations;
        for (const auto& rp : raw_relations) {
            // a_n*...*a_1 is right-to-left: last token is applied first
            std::vector<std::string> seq;
            for (auto it = rp.names.rbegin(); it != rp.names.rend(); ++it)
                seq.push_back(it->text);
            const Token& loc = rp.names.front();
            if (seq.size() < 2)
                throw SemanticError(loc.line, loc.column,
                                    "relation of length " + std::to_string(seq.size()) +
                                        " (admissibility needs length >= 2)");
            const Arrow* first = quiver.find_arrow(seq.front());
            if (!first)
                throw SemanticError(loc.line, loc.column, "unknown arrow: " + seq.front());
            Path path(first->source, seq);
            VertexId at = first->source;
            for (const std::string& nm : seq) {
                const Arrow* a = quiver.find_arrow(nm);
                if (!a) throw SemanticError(loc.line, loc.column, "unknown arrow: " + nm);
                if (a->source != at)
                    throw SemanticError(loc.line, loc.column,
                                        "chain mismatch in relation: arrow " + nm +
                                            " starts at vertex " + std::to_string(a->source) +
                                            " but the path has reached vertex " +
                                            std::to_string(at));
                at = a->target;
            }
            relations.push_back(std::move(path));
        }

        MonomialPresentation pres(name.text, std::move(quiver), std::move(relations));
        ValidationReport rep = validate_presentation(pres);
        if (!rep.valid()) {
            std::string msg = "invalid presentation:";
            for (const auto& v : rep.violations) msg += "\n  " + v;
            throw SemanticError(1, 1, msg);
        }
        return pres;
    }

private:
    bool peek_sym(const std::string& s) {
        return lex_.peek().kind == Token::Sym && lex_.peek().text == s;
    }

    Token expect(Token::Kind k, const std::string& what) {
        if (lex_.peek().kind != k)
            throw SyntaxError(lex_.peek().line, lex_.peek().column,
                              "expected " + what + ", found '" + lex_.peek().text + "'");
        return lex_.next();
    }

    void expect_sym(const std::string& s) {
        if (!peek_sym(s))
            throw SyntaxError(lex_.peek().line, lex_.peek().column,
                              "expected '" + s + "', found '" + lex_.peek().text + "'");
        lex_.next();
    }

    void expect_ident(const std::string& s) {
        if (lex_.peek().kind != Token::Ident || lex_.peek().text != s)
            throw SyntaxError(lex_.peek().line, lex_.peek().column,
                              "expected '" + s + "', found '" + lex_.peek().text + "'");
        lex_.next();
    }

    Lexer lex_;
};

}  // namespace detail

inline MonomialPresentation parse(const std::string& doc) {
    detail::Parser p(doc);
    return p.parse_file();
}

/// Path literal, right-to-left: sequence [beta, delta] renders as "delta*beta".
inline std::string render_path(const Path& p) {
    std::string s;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
        if (!s.empty()) s += "*";
        s += *it;
    }
    return s;
}

/// Canonical text form: sorted vertices, arrows and relations, fixed layout.
inline std::string render(const MonomialPresentation& p) {
    std::ostringstream out;
    out << "quiver " << p.name << " {\n";
    out << "  vertices:";
    for (VertexId v : p.quiver.vertices) out << " " << v;
    out << ";\n";
    out << "  arrows:";
    for (size_t i = 0; i < p.quiver.arrows.size(); ++i) {
        const Arrow& a = p.quiver.arrows[i];
        out << (i ? ", " : " ") << a.name << ": " << a.source << " -> " << a.target;
    }
    out << ";\n";
    out << "  relations:";
    for (size_t i = 0; i < p.relations.size(); ++i)
        out << (i ? ", " : " ") << render_path(p.relations[i]);
    out << ";\n";
    out << "}\n";
    return out.str();
}

inline std::string export_dot(const Quiver& q, const std::string& name = "quiver") {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    for (VertexId v : q.vertices) out << "  v" << v << " [label=\"" << v << "\"];\n";
    for (const Arrow& a : q.arrows)
        out << "  v" << a.source << " -> v" << a.target << " [label=\"" << a.name << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace quivinj

#endif
