/*
   Copyright 2026 The qweyl Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QWEYL_EXPR_HPP
#define QWEYL_EXPR_HPP

#include <cctype>
#include <charconv>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "center.hpp"
#include "errors.hpp"
#include "weyl.hpp"

namespace qweyl {

// Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' ['-'] INT)?
//   primary := INT ['/' INT] | FLOAT | IDENT | '(' expr ')'
// Juxtaposition is an error; every product needs '*'.

struct Token {
    enum Kind { Int, Float, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

inline const char* token_name(Token::Kind k) {
    switch (k) {
        case Token::Int: return "integer";
        case Token::Float: return "float";
        case Token::Ident: return "identifier";
        case Token::Plus: return "'+'";
        case Token::Minus: return "'-'";
        case Token::Star: return "'*'";
        case Token::Slash: return "'/'";
        case Token::Caret: return "'^'";
        case Token::LParen: return "'('";
        case Token::RParen: return "')'";
        case Token::End: return "end of input";
    }
    return "token";
}

inline std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const unsigned char c = static_cast<unsigned char>(src[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(c) || (c == '.' && i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
            bool is_float = false;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            if (i < src.size() && src[i] == '.') {
                is_float = true;
                ++i;
                while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            }
            if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
                std::size_t j = i + 1;
                if (j < src.size() && (src[j] == '+' || src[j] == '-')) ++j;
                if (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
                    is_float = true;
                    i = j;
                    while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
                }
            }
            out.push_back({is_float ? Token::Float : Token::Int, std::string(src.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(c) || c == '_') {
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
            out.push_back({Token::Ident, std::string(src.substr(start, i - start)), start});
            continue;
        }
        // U+2212 MINUS SIGN
        if (src.substr(i, 3) == "\xE2\x88\x92") {
            out.push_back({Token::Minus, "-", start});
            i += 3;
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '+': k = Token::Plus; break;
            case '-': k = Token::Minus; break;
            case '*': k = Token::Star; break;
            case '/': k = Token::Slash; break;
            case '^': k = Token::Caret; break;
            case '(': k = Token::LParen; break;
            case ')': k = Token::RParen; break;
            default: throw parse_error(std::string("unexpected character '") + src[i] + "'", start);
        }
        out.push_back({k, std::string(1, src[i]), start});
        ++i;
    }
    out.push_back({Token::End, "", src.size()});
    return out;
}

/// Syntax tree with byte positions for error reporting.
struct Expr {
    enum Kind { Number, Float, Symbol, Neg, Add, Sub, Mul, Pow };
    Kind kind;
    std::size_t pos = 0;
    Rational number;
    double real = 0.0;
    std::string name;
    long exponent = 0;
    std::unique_ptr<Expr> lhs, rhs;
};

class Parser {
   public:
    explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

    std::unique_ptr<Expr> parse() {
        if (peek().kind == Token::End) throw parse_error("empty expression", peek().pos);
        auto e = expr();
        if (peek().kind != Token::End) {
            const auto& t = peek();
            if (t.kind == Token::Ident || t.kind == Token::Int || t.kind == Token::Float || t.kind == Token::LParen)
                throw parse_error("implicit multiplication is not allowed; insert '*'", t.pos);
            throw parse_error(std::string("unexpected ") + token_name(t.kind), t.pos);
        }
        return e;
    }

   private:
    const Token& peek() const { return toks_[at_]; }
    const Token& next() { return toks_[at_++]; }
    const Token& expect(Token::Kind k) {
        if (peek().kind != k)
            throw parse_error(std::string("expected ") + token_name(k) + ", found " + token_name(peek().kind),
                              peek().pos);
        return next();
    }

    static std::unique_ptr<Expr> node(Expr::Kind k, std::size_t pos) {
        auto e = std::make_unique<Expr>();
        e->kind = k;
        e->pos = pos;
        return e;
    }

    std::unique_ptr<Expr> expr() {
        auto lhs = term();
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            const auto& op = next();
            auto e = node(op.kind == Token::Plus ? Expr::Add : Expr::Sub, op.pos);
            e->lhs = std::move(lhs);
            e->rhs = term();
            lhs = std::move(e);
        }
        return lhs;
    }

    std::unique_ptr<Expr> term() {
        auto lhs = unary();
        while (peek().kind == Token::Star) {
            const auto& op = next();
            auto e = node(Expr::Mul, op.pos);
            e->lhs = std::move(lhs);
            e->rhs = unary();
            lhs = std::move(e);
        }
        return lhs;
    }

    std::unique_ptr<Expr> unary() {
        if (peek().kind == Token::Minus) {
            const auto& op = next();
            auto e = node(Expr::Neg, op.pos);
            e->lhs = unary();
            return e;
        }
        return power();
    }

    std::unique_ptr<Expr> power() {
        auto base = primary();
        if (peek().kind != Token::Caret) return base;
        const auto& op = next();
        bool neg = false;
        if (peek().kind == Token::Minus) {
            next();
            neg = true;
        }
        const auto& tok = expect(Token::Int);
        long v = 0;
        auto [p, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
        if (ec != std::errc() || p != tok.text.data() + tok.text.size())
            throw parse_error("exponent out of range", tok.pos);
        auto e = node(Expr::Pow, op.pos);
        e->lhs = std::move(base);
        e->exponent = neg ? -v : v;
        if (peek().kind == Token::Caret) throw parse_error("chained exponents need parentheses", peek().pos);
        return e;
    }

    std::unique_ptr<Expr> primary() {
        const auto& tok = peek();
        switch (tok.kind) {
            case Token::Int: {
                next();
                auto e = node(Expr::Number, tok.pos);
                std::string text = tok.text;
                if (peek().kind == Token::Slash) {
                    next();
                    const auto& den = expect(Token::Int);
                    if (den.text.find_first_not_of('0') == std::string::npos)
                        throw parse_error("zero denominator", den.pos);
                    text += "/" + den.text;
                }
                e->number = Rational::parse(text);
                return e;
            }
            case Token::Float: {
                next();
                auto e = node(Expr::Float, tok.pos);
                e->real = std::stod(tok.text);
                return e;
            }
            case Token::Ident: {
                next();
                auto e = node(Expr::Symbol, tok.pos);
                e->name = tok.text;
                return e;
            }
            case Token::LParen: {
                next();
                auto e = expr();
                expect(Token::RParen);
                return e;
            }
            default:
                throw parse_error(std::string("unexpected ") + token_name(tok.kind), tok.pos);
        }
    }

    std::vector<Token> toks_;
    std::size_t at_ = 0;
};

inline std::unique_ptr<Expr> parse_expr(std::string_view src) { return Parser(src).parse(); }

namespace detail {

/// Splits "x12" into ("x", 12). Returns nullopt without a valid index suffix.
inline std::optional<std::pair<std::string, int>> split_indexed(const std::string& name) {
    std::size_t k = 0;
    while (k < name.size() && std::isalpha(static_cast<unsigned char>(name[k]))) ++k;
    if (k == 0 || k == name.size() || name[k] == '0') return std::nullopt;
    int idx = 0;
    auto [p, ec] = std::from_chars(name.data() + k, name.data() + name.size(), idx);
    if (ec != std::errc() || p != name.data() + name.size()) return std::nullopt;
    return std::make_pair(name.substr(0, k), idx);
}

inline void check_range(int idx, int n, std::size_t pos) {
    if (idx < 1 || idx > n)
        throw index_out_of_range("at " + std::to_string(pos) + ": index " + std::to_string(idx) + " outside 1.." +
                                 std::to_string(n));
}

template <class Sem>
typename Sem::value_type evaluate(const Expr& e, Sem& sem) {
    switch (e.kind) {
        case Expr::Number: return sem.number(e.number);
        case Expr::Float: return sem.real(e.real, e.pos);
        case Expr::Symbol: return sem.symbol(e.name, e.pos);
        case Expr::Neg: return -evaluate(*e.lhs, sem);
        case Expr::Add: return evaluate(*e.lhs, sem) + evaluate(*e.rhs, sem);
        case Expr::Sub: return evaluate(*e.lhs, sem) - evaluate(*e.rhs, sem);
        case Expr::Mul: {
            auto a = evaluate(*e.lhs, sem);
            return sem.mul(a, evaluate(*e.rhs, sem));
        }
        case Expr::Pow: return sem.pow(evaluate(*e.lhs, sem), e.exponent, e.pos);
    }
    throw parse_error("malformed expression", e.pos);
}

template <class Ring>
struct WeylSemantics {
    using value_type = WeylElement<Ring>;
    AlgebraPtr<Ring> alg;

    value_type scalar(const typename Ring::value_type& c) const { return value_type::scalar(alg, c); }
    value_type number(const Rational& r) const { return scalar(alg->ring().from_rational(r)); }
    value_type real(double v, std::size_t pos) const {
        if (!alg->ring().accepts_float()) throw parse_error("floating literal in an exact context", pos);
        if constexpr (Ring::kind == ParamKind::Numeric)
            return scalar({v, 0.0});
        else
            throw parse_error("floating literal in an exact context", pos);
    }
    value_type symbol(const std::string& name, std::size_t pos) const {
        if (name == "f") return f_element(alg);
        if (auto c = alg->ring().named_scalar(name)) return scalar(*c);
        if (auto ix = split_indexed(name)) {
            const auto& [head, idx] = *ix;
            if (head == "x" || head == "d" || head == "f") {
                check_range(idx, alg->n(), pos);
                if (head == "x") return value_type::x(alg, idx);
                if (head == "d") return value_type::d(alg, idx);
                return f_i(alg, idx);
            }
            if (head == "r" || head == "s") {
                if constexpr (Ring::kind == ParamKind::RootOfUnity) {
                    check_range(idx, alg->n(), pos);
                    auto p = head == "r" ? CenterPoly<Rational>::r(alg->n(), idx) : CenterPoly<Rational>::s(alg->n(), idx);
                    return theta(p, alg);
                } else {
                    throw parse_error("center variable '" + name + "' needs a root of unity", pos);
                }
            }
        }
        throw parse_error("unknown identifier '" + name + "'", pos);
    }
    value_type mul(const value_type& a, const value_type& b) const { return qweyl::mul(a, b); }
    value_type pow(const value_type& a, long e, std::size_t pos) const {
        if (e >= 0) return power(a, static_cast<unsigned long>(e));
        if (a.size() == 1 && a.terms()[0].first.is_one()) {
            if (auto inv = alg->ring().invert_scalar(a.terms()[0].second))
                return power(scalar(*inv), static_cast<unsigned long>(-e));
        }
        throw parse_error("negative power of a non-unit", pos);
    }
};

template <class Ring>
struct CenterSemantics {
    using coeff_type = typename Ring::value_type;
    using value_type = CenterPoly<coeff_type>;
    int n;
    Ring ring;

    value_type number(const Rational& r) const { return value_type::constant(n, ring.from_rational(r)); }
    value_type real(double v, std::size_t pos) const {
        if constexpr (std::is_same_v<coeff_type, std::complex<double>>)
            return value_type::constant(n, {v, 0.0});
        else
            throw parse_error("floating literal in an exact context", pos);
    }
    value_type symbol(const std::string& name, std::size_t pos) const {
        if (auto c = ring.named_scalar(name)) return value_type::constant(n, *c);
        if (auto ix = split_indexed(name)) {
            const auto& [head, idx] = *ix;
            const coeff_type one = ring.from_rational(Rational(1));
            if (head == "r") {
                check_range(idx, n, pos);
                return value_type::r(n, idx, one);
            }
            if (head == "s") {
                check_range(idx, n, pos);
                return value_type::s(n, idx, one);
            }
        }
        throw parse_error("unknown identifier '" + name + "' in a center polynomial", pos);
    }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type pow(const value_type& a, long e, std::size_t pos) const {
        if (e >= 0) return a.pow(static_cast<unsigned long>(e));
        if (a.size() == 1 && a.terms()[0].first.is_one()) {
            if (auto inv = ring.invert_scalar(a.terms()[0].second))
                return value_type::constant(n, *inv).pow(static_cast<unsigned long>(-e));
        }
        throw parse_error("negative power of a non-unit", pos);
    }
};

/// Joins coefficient text and monomial text into one signed term.
inline std::string format_term(std::string coeff, const std::string& mono) {
    if (mono.empty()) return coeff;
    if (coeff == "1") return mono;
    if (coeff == "-1") return "-" + mono;
    if (!is_single_term(coeff)) return "(" + coeff + ")*" + mono;
    return coeff + "*" + mono;
}

inline std::string join_terms(const std::vector<std::string>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& t : terms) {
        if (out.empty())
            out = t;
        else if (t[0] == '-')
            out += " - " + t.substr(1);
        else
            out += " + " + t;
    }
    return out;
}

inline std::string monomial_text(const Monomial& m, char first, char second) {
    std::string out;
    auto put = [&](char v, int i, Monomial::exp_type e) {
        if (e == 0) return;
        if (!out.empty()) out += "*";
        out += v + std::to_string(i + 1);
        if (e != 1) out += "^" + std::to_string(e);
    };
    for (int i = 0; i < m.n(); ++i) put(first, i, m.alpha(i));
    for (int i = 0; i < m.n(); ++i) put(second, i, m.beta(i));
    return out;
}

}  // namespace detail

/// Parses src into PBW normal form in alg.
template <class Ring>
WeylElement<Ring> parse_weyl(std::string_view src, const AlgebraPtr<Ring>& alg) {
    auto ast = parse_expr(src);
    detail::WeylSemantics<Ring> sem{alg};
    return detail::evaluate(*ast, sem);
}

/// Canonical text in graded-lex term order.
template <class Ring>
std::string print_weyl(const WeylElement<Ring>& a) {
    std::vector<std::string> terms;
    for (const auto& [m, c] : a.terms()) terms.push_back(detail::format_term(to_text(c), detail::monomial_text(m, 'x', 'd')));
    return detail::join_terms(terms);
}

/// Parses a commutative polynomial in r1..rn, s1..sn with coefficients in ring.
template <class Ring>
CenterPoly<typename Ring::value_type> parse_center(std::string_view src, int n, const Ring& ring) {
    if (n < 1) throw domain_error("a center polynomial needs at least one variable pair");
    auto ast = parse_expr(src);
    detail::CenterSemantics<Ring> sem{n, ring};
    return detail::evaluate(*ast, sem);
}

inline CenterPoly<Rational> parse_center(std::string_view src, int n) { return parse_center(src, n, RationalRing{}); }

template <class C>
std::string print_center(const CenterPoly<C>& p) {
    std::vector<std::string> terms;
    for (const auto& [m, c] : p.terms()) terms.push_back(detail::format_term(to_text(c), detail::monomial_text(m, 'r', 's')));
    return detail::join_terms(terms);
}

}  // namespace qweyl

#endif  // QWEYL_EXPR_HPP
