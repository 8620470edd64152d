#ifndef WARING_PARSE_HPP
#define WARING_PARSE_HPP

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"

namespace waring {

namespace detail {

struct Token {
    enum class Kind { Number, Variable, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    std::size_t pos;
    std::string text; // digits for Number and Variable
};

inline std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Token::Kind::Number, start, std::string(s.substr(start, i - start))});
            continue;
        }
        if (c == 'x') {
            ++i;
            std::size_t ds = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == ds) throw ParseError("expected variable index after 'x'", ds);
            out.push_back({Token::Kind::Variable, start, std::string(s.substr(ds, i - ds))});
            continue;
        }
        Token::Kind k;
        switch (c) {
        case '+': k = Token::Kind::Plus; break;
        case '-': k = Token::Kind::Minus; break;
        case '*': k = Token::Kind::Star; break;
        case '/': k = Token::Kind::Slash; break;
        case '^': k = Token::Kind::Caret; break;
        case '(': k = Token::Kind::LParen; break;
        case ')': k = Token::Kind::RParen; break;
        default: throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({k, start, {}});
        ++i;
    }
    out.push_back({Token::Kind::End, s.size(), {}});
    return out;
}

class ExprParser {
public:
    ExprParser(std::vector<Token> tokens, std::size_t n) : toks_(std::move(tokens)), n_(n) {}

    Poly parse() {
        Poly p = expr();
        if (peek().kind != Token::Kind::End) throw ParseError("unexpected token", peek().pos);
        return p;
    }

private:
    using K = Token::Kind;

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    Poly expr() {
        Poly acc = term();
        while (peek().kind == K::Plus || peek().kind == K::Minus) {
            bool minus = next().kind == K::Minus;
            Poly rhs = term();
            if (minus) acc -= rhs;
            else acc += rhs;
        }
        return acc;
    }

    Poly term() {
        Poly acc = unary();
        while (peek().kind == K::Star || peek().kind == K::Slash) {
            const Token& op = next();
            std::size_t at = peek().pos;
            Poly rhs = unary();
            if (op.kind == K::Star) {
                acc = acc * rhs;
            } else {
                if (rhs.is_zero()) throw ParseError("division by zero", at);
                if (rhs.degree() != 0) throw ParseError("divisor must be a constant", at);
                acc *= Rational{1} / rhs.coefficient(Monomial(n_));
            }
        }
        return acc;
    }

    Poly unary() {
        if (peek().kind == K::Minus) {
            next();
            return -unary();
        }
        if (peek().kind == K::Plus) {
            next();
            return unary();
        }
        return power();
    }

    Poly power() {
        Poly base = primary();
        if (peek().kind == K::Caret) {
            next();
            const Token& e = peek();
            if (e.kind != K::Number) throw ParseError("expected nonnegative integer exponent", e.pos);
            next();
            if (e.text.size() > 4) throw ParseError("exponent too large", e.pos);
            return pow(base, static_cast<unsigned>(std::stoul(e.text)));
        }
        return base;
    }

    Poly primary() {
        const Token& t = next();
        switch (t.kind) {
        case K::Number: return Poly::constant(n_, Rational(mpz_class(t.text, 10)));
        case K::Variable: {
            std::size_t idx = std::stoul(t.text);
            if (idx == 0) throw ParseError("variable indices start at x1", t.pos);
            if (idx > n_) throw ParseError("variable index exceeds declared variable count", t.pos);
            return Poly::variable(n_, idx - 1);
        }
        case K::LParen: {
            Poly inner = expr();
            if (peek().kind != K::RParen) throw ParseError("expected ')'", peek().pos);
            next();
            return inner;
        }
        case K::End: throw ParseError("unexpected end of input", t.pos);
        default: throw ParseError("unexpected token", t.pos);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::size_t n_;
};

} // namespace detail

/*
 * Parses an expression over x1..xN with integer literals and + - * / ^ and parentheses.
 * The variable count is the largest index used, or `nvars` when given (which must
 * cover every index). Division is only allowed by nonzero constants, so "3/4*x1"
 * denotes a rational coefficient.
 */
inline Poly parse_poly(std::string_view text, std::optional<std::size_t> nvars = std::nullopt) {
    auto tokens = detail::tokenize(text);
    std::size_t max_index = 0;
    for (const auto& t : tokens)
        if (t.kind == detail::Token::Kind::Variable) {
            if (t.text.size() > 6) throw ParseError("variable index too large", t.pos);
            max_index = std::max<std::size_t>(max_index, std::stoul(t.text));
        }
    std::size_t n = nvars ? *nvars : max_index;
    if (nvars && max_index > *nvars) {
        for (const auto& t : tokens)
            if (t.kind == detail::Token::Kind::Variable && std::stoul(t.text) > *nvars)
                throw ParseError("variable index exceeds declared variable count", t.pos);
    }
    return detail::ExprParser(std::move(tokens), n).parse();
}

// Canonical text form: terms in graded-lex order, e.g. "2*x1^3 + 12*x1*x2^2".
inline std::string serialize_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        std::string factors;
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            if (m[i] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += "x" + std::to_string(i + 1);
            if (m[i] > 1) factors += "^" + std::to_string(m[i]);
        }
        if (factors.empty()) {
            out += mag.to_string();
        } else if (mag == Rational{1}) {
            out += factors;
        } else {
            out += mag.to_string() + "*" + factors;
        }
    }
    return out;
}

} // namespace waring

#endif
