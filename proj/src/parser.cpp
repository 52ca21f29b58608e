// Recursive-descent parser for the formula grammar:
//
//   formula := equiv
//   equiv   := impl ("<->" impl)*
//   impl    := or ("->" impl)?
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := ("~" | "#" | "[]") unary | atom
//   atom    := "0" | "1" | "rho" | "sigma" | ident | "(" formula ")"

#include <cctype>

#include "magari4/errors.hpp"
#include "magari4/formula.hpp"

namespace magari4 {

namespace {

enum class Tok { Not, Delta, Box, And, Or, Imp, Iff, LParen, RParen, Zero, One, Ident, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::string_view describe(Tok t) {
    switch (t) {
        case Tok::Not: return "'~'";
        case Tok::Delta: return "'#'";
        case Tok::Box: return "'[]'";
        case Tok::And: return "'&'";
        case Tok::Or: return "'|'";
        case Tok::Imp: return "'->'";
        case Tok::Iff: return "'<->'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Zero: return "'0'";
        case Tok::One: return "'1'";
        case Tok::Ident: return "identifier";
        case Tok::End: return "end of input";
    }
    return "?";
}

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        auto single = [&](Tok t) {
            out.push_back({t, std::string(1, c), start});
            ++i;
        };
        switch (c) {
            case '~': single(Tok::Not); continue;
            case '#': single(Tok::Delta); continue;
            case '&': single(Tok::And); continue;
            case '|': single(Tok::Or); continue;
            case '(': single(Tok::LParen); continue;
            case ')': single(Tok::RParen); continue;
            case '0': single(Tok::Zero); continue;
            case '1': single(Tok::One); continue;
            default: break;
        }
        if (s.substr(i, 2) == "[]") {
            out.push_back({Tok::Box, "[]", start});
            i += 2;
        } else if (s.substr(i, 2) == "->") {
            out.push_back({Tok::Imp, "->", start});
            i += 2;
        } else if (s.substr(i, 3) == "<->") {
            out.push_back({Tok::Iff, "<->", start});
            i += 3;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    Formula parse_all() {
        auto f = equiv_level();
        if (peek().kind == Tok::RParen) throw ParseError("unbalanced ')'", peek().pos);
        expect(Tok::End);
        return f;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    bool accept(Tok t) {
        if (peek().kind != t) return false;
        ++pos_;
        return true;
    }
    void expect(Tok t) {
        if (!accept(t)) {
            throw ParseError("expected " + std::string(describe(t)) + ", found " +
                                 std::string(describe(peek().kind)),
                             peek().pos);
        }
    }

    Formula equiv_level() {
        auto f = impl_level();
        while (accept(Tok::Iff)) f = equiv(f, impl_level());
        return f;
    }

    Formula impl_level() {
        auto f = or_level();
        if (accept(Tok::Imp)) return implies(f, impl_level());
        return f;
    }

    Formula or_level() {
        auto f = and_level();
        while (accept(Tok::Or)) f = f | and_level();
        return f;
    }

    Formula and_level() {
        auto f = unary_level();
        while (accept(Tok::And)) f = f & unary_level();
        return f;
    }

    Formula unary_level() {
        if (accept(Tok::Not)) return ~unary_level();
        if (accept(Tok::Delta)) return delta(unary_level());
        if (accept(Tok::Box)) return box(unary_level());
        return atom();
    }

    Formula atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Zero: ++pos_; return Formula::constant(Element::Zero);
            case Tok::One: ++pos_; return Formula::constant(Element::One);
            case Tok::Ident:
                ++pos_;
                if (t.text == "rho") return Formula::constant(Element::Rho);
                if (t.text == "sigma") return Formula::constant(Element::Sigma);
                return Formula::var(t.text);
            case Tok::LParen: {
                const std::size_t open = t.pos;
                ++pos_;
                auto f = equiv_level();
                if (peek().kind != Tok::RParen) {
                    throw ParseError("unbalanced '(' opened at position " + std::to_string(open) +
                                         ", found " + std::string(describe(peek().kind)),
                                     peek().pos);
                }
                ++pos_;
                return f;
            }
            case Tok::RParen: throw ParseError("unbalanced ')'", t.pos);
            default:
                throw ParseError("expected a formula, found " + std::string(describe(t.kind)),
                                 t.pos);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace magari4
