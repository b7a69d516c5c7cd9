#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "liesym/ode.hpp"

namespace liesym {

struct SourceSpan {
    size_t start = 0;  // byte offsets, [start, end)
    size_t end = 0;
};

struct ParseDiagnostic {
    std::string message;
    SourceSpan span;
    enum class Severity { error, warning } severity = Severity::error;
};

template <typename T>
struct ParseResult {
    std::optional<T> value;
    std::vector<ParseDiagnostic> diagnostics;
    bool ok() const { return value.has_value(); }
};

namespace detail {

enum class Tok {
    integer, var, yprime, ypp, imag,
    plus, minus, star, slash, caret, lparen, rparen, equals,
    end, bad
};

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

inline std::vector<Token> lex(const std::string& in, std::vector<ParseDiagnostic>& diags) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < in.size()) {
        char c = in[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        size_t start = i;
        auto push = [&](Tok k, size_t len) {
            out.push_back({k, in.substr(start, len), {start, start + len}});
            i = start + len;
        };
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < in.size() && std::isdigit(static_cast<unsigned char>(in[j]))) ++j;
            push(Tok::integer, j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < in.size() && std::isalnum(static_cast<unsigned char>(in[j]))) ++j;
            std::string word = in.substr(i, j - i);
            if (word == "y" && j < in.size() && in[j] == '\'') {
                size_t primes = 0;
                while (j + primes < in.size() && in[j + primes] == '\'') ++primes;
                if (primes >= 2) { push(Tok::ypp, (j - i) + 2); continue; }
                push(Tok::yprime, (j - i) + 1);
                continue;
            }
            if (word == "i") { push(Tok::imag, 1); continue; }
            if (word == "x" || word == "y" || word == "z" || word == "s") {
                push(Tok::var, 1);
                continue;
            }
            diags.push_back({"unknown variable '" + word + "'", {i, j}});
            push(Tok::bad, j - i);
            continue;
        }
        switch (c) {
            case '+': push(Tok::plus, 1); continue;
            case '-': push(Tok::minus, 1); continue;
            case '*': push(Tok::star, 1); continue;
            case '/': push(Tok::slash, 1); continue;
            case '^': push(Tok::caret, 1); continue;
            case '(': push(Tok::lparen, 1); continue;
            case ')': push(Tok::rparen, 1); continue;
            case '=': push(Tok::equals, 1); continue;
            default:
                diags.push_back({std::string("unexpected character '") + c + "'", {i, i + 1}});
                push(Tok::bad, 1);
                continue;
        }
    }
    out.push_back({Tok::end, "", {in.size(), in.size()}});
    return out;
}

// Recursive-descent parser evaluating directly into RationalFunction.
// Precedence: ^  >  unary -  >  * /  >  binary + -, left associative.
class ExprParser {
  public:
    ExprParser(const std::vector<Token>& toks, bool allow_s,
               std::vector<ParseDiagnostic>& diags)
        : toks_(toks), allow_s_(allow_s), diags_(diags) {}

    std::optional<RationalFunction> parse_full(size_t& pos) {
        pos_ = pos;
        auto v = expr();
        pos = pos_;
        return v;
    }

  private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& advance() { return toks_[pos_++]; }
    bool at(Tok k) const { return toks_[pos_].kind == k; }

    void fail(const std::string& msg, const SourceSpan& span) {
        diags_.push_back({msg, span});
    }

    std::optional<RationalFunction> expr() {
        auto lhs = term();
        if (!lhs) return std::nullopt;
        while (at(Tok::plus) || at(Tok::minus)) {
            bool minus = advance().kind == Tok::minus;
            auto rhs = term();
            if (!rhs) return std::nullopt;
            *lhs = minus ? *lhs - *rhs : *lhs + *rhs;
        }
        return lhs;
    }

    std::optional<RationalFunction> term() {
        auto lhs = factor();
        if (!lhs) return std::nullopt;
        while (at(Tok::star) || at(Tok::slash)) {
            const Token& op = advance();
            auto rhs = factor();
            if (!rhs) return std::nullopt;
            if (op.kind == Tok::slash) {
                if (rhs->is_zero()) {
                    fail("division by zero", op.span);
                    return std::nullopt;
                }
                *lhs = *lhs / *rhs;
            } else {
                *lhs = *lhs * *rhs;
            }
        }
        return lhs;
    }

    std::optional<RationalFunction> factor() {
        if (at(Tok::minus)) {
            const Token& op = advance();
            (void)op;
            auto v = factor();
            if (!v) return std::nullopt;
            return -*v;
        }
        return power();
    }

    std::optional<RationalFunction> power() {
        auto base = atom();
        if (!base) return std::nullopt;
        while (at(Tok::caret)) {
            const Token& op = advance();
            if (!at(Tok::integer)) {
                fail("exponent must be a non-negative integer literal", peek().span);
                return std::nullopt;
            }
            const Token& e = advance();
            if (e.text.size() > 3) {
                fail("exponent too large", e.span);
                return std::nullopt;
            }
            int k = std::stoi(e.text);
            (void)op;
            RationalFunction r(1);
            for (int j = 0; j < k; ++j) r *= *base;
            *base = r;
        }
        return base;
    }

    std::optional<RationalFunction> atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::integer: {
                advance();
                return RationalFunction(
                    GaussianRational(BigRational::from_string(t.text)));
            }
            case Tok::imag:
                advance();
                return RationalFunction(GaussianRational::i());
            case Tok::yprime:
                advance();
                return RationalFunction::variable(Var::z);
            case Tok::var: {
                advance();
                Var v = *var_from_name(t.text);
                if (v == Var::s && !allow_s_) {
                    fail("variable 's' is not allowed here", t.span);
                    return std::nullopt;
                }
                return RationalFunction::variable(v);
            }
            case Tok::lparen: {
                advance();
                auto inner = expr();
                if (!inner) return std::nullopt;
                if (!at(Tok::rparen)) {
                    fail("unbalanced parenthesis", t.span);
                    return std::nullopt;
                }
                advance();
                return inner;
            }
            case Tok::ypp:
                fail("y'' may only appear on the left of the equation", t.span);
                return std::nullopt;
            default:
                fail("expected a value", t.span);
                return std::nullopt;
        }
    }

    const std::vector<Token>& toks_;
    bool allow_s_;
    std::vector<ParseDiagnostic>& diags_;
    size_t pos_ = 0;
};

}  // namespace detail

// Parses a rational expression over {x, y, z, y', i} (plus s when allowed).
inline ParseResult<RationalFunction> parse_ratfunc(const std::string& text,
                                                   bool allow_s = true) {
    ParseResult<RationalFunction> result;
    auto toks = detail::lex(text, result.diagnostics);
    if (!result.diagnostics.empty()) return result;
    detail::ExprParser p(toks, allow_s, result.diagnostics);
    size_t pos = 0;
    auto v = p.parse_full(pos);
    if (!v) return result;
    if (toks[pos].kind != detail::Tok::end) {
        result.diagnostics.push_back({"unexpected trailing input", toks[pos].span});
        return result;
    }
    result.value = std::move(v);
    return result;
}

// Parses a polynomial: a rational expression whose denominator is constant.
inline ParseResult<MultiPoly> parse_poly(const std::string& text, bool allow_s = true) {
    ParseResult<MultiPoly> result;
    auto rf = parse_ratfunc(text, allow_s);
    result.diagnostics = rf.diagnostics;
    if (!rf.ok()) return result;
    if (!rf.value->is_polynomial()) {
        if (rf.value->den().is_constant()) {
            result.value = rf.value->num().scaled(rf.value->den().constant_value().inverse());
            return result;
        }
        result.diagnostics.push_back({"expression is not a polynomial", {0, text.size()}});
        return result;
    }
    result.value = rf.value->num();
    return result;
}

// Parses "y'' = <rational expression in x, y, y'/z>" and normalizes.
inline ParseResult<Rational2ODE> parse_ode(const std::string& text) {
    ParseResult<Rational2ODE> result;
    auto toks = detail::lex(text, result.diagnostics);
    if (!result.diagnostics.empty()) return result;
    size_t pos = 0;
    if (toks[pos].kind != detail::Tok::ypp) {
        result.diagnostics.push_back({"expected y'' on the left-hand side", toks[pos].span});
        return result;
    }
    ++pos;
    if (toks[pos].kind != detail::Tok::equals) {
        result.diagnostics.push_back({"expected '=' after y''", toks[pos].span});
        return result;
    }
    ++pos;
    detail::ExprParser p(toks, /*allow_s=*/false, result.diagnostics);
    auto rhs = p.parse_full(pos);
    if (!rhs) return result;
    if (toks[pos].kind != detail::Tok::end) {
        result.diagnostics.push_back({"unexpected trailing input", toks[pos].span});
        return result;
    }
    result.value = build_ode(rhs->num(), rhs->den());
    return result;
}

}  // namespace liesym
