#pragma once

#include <string>

#include "liesym/ratfunc.hpp"

namespace liesym {

namespace detail {

inline std::string mono_str(const Mono& m) {
    std::string out;
    for (int i = 0; i < kNumVars; ++i) {
        if (m.e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += var_name(static_cast<Var>(i));
        if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
    }
    return out;
}

// Renders one term.  Complex coefficients with both parts keep their own
// parentheses and never donate a sign to the joining operator.
struct TermText {
    std::string body;  // without leading sign
    bool negative;     // sign extracted into the join
};

inline TermText term_str(const Mono& m, const GaussianRational& c) {
    std::string mono = mono_str(m);
    bool has_both = !c.re().is_zero() && !c.im().is_zero();
    if (mono.empty()) {
        if (has_both) return {"(" + c.str() + ")", false};
        bool neg = (c.re().is_zero() ? c.im() : c.re()).sign() < 0;
        GaussianRational a = neg ? -c : c;
        return {a.str(), neg};
    }
    if (has_both) return {"(" + c.str() + ")*" + mono, false};
    bool neg = (c.re().is_zero() ? c.im() : c.re()).sign() < 0;
    GaussianRational a = neg ? -c : c;
    if (a.is_one()) return {mono, neg};
    return {a.str() + "*" + mono, neg};
}

}  // namespace detail

// Canonical text: terms in ascending graded-lex order, explicit * and ^,
// e.g. "x^2 + 4*x*y*z + 4*y^2*z^2 + 4*y^4".
inline std::string to_string(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        detail::TermText t = detail::term_str(it->first, it->second);
        if (first) {
            out = (t.negative ? "-" : "") + t.body;
            first = false;
        } else {
            out += (t.negative ? " - " : " + ") + t.body;
        }
    }
    return out;
}

namespace detail {

inline bool numerator_needs_parens(const MultiPoly& p) { return p.term_count() > 1; }

// A denominator can stay bare only when it re-parses as one factor: a single
// term, coefficient 1, a single variable (any power).
inline bool denominator_needs_parens(const MultiPoly& p) {
    if (p.term_count() != 1) return true;
    const auto& [m, c] = *p.terms().begin();
    if (!c.is_one()) return true;
    int used = 0;
    for (int i = 0; i < kNumVars; ++i)
        if (m.e[i] > 0) ++used;
    return used != 1;
}

}  // namespace detail

inline std::string to_string(const RationalFunction& f) {
    if (f.is_polynomial()) return to_string(f.num());
    std::string num = to_string(f.num());
    if (detail::numerator_needs_parens(f.num())) num = "(" + num + ")";
    std::string den = to_string(f.den());
    if (detail::denominator_needs_parens(f.den())) den = "(" + den + ")";
    return num + "/" + den;
}

inline std::string to_string(const GaussianRational& c) { return c.str(); }

}  // namespace liesym
