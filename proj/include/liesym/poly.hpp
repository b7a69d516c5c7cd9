#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liesym/gaussian.hpp"

namespace liesym {

// The fixed variable universe.  x, y, z live on the jet space (z stands for
// y'); s is the extra coordinate used by the eigenpolynomial operator.
enum class Var : int { x = 0, y = 1, z = 2, s = 3 };

inline constexpr int kNumVars = 4;

inline const char* var_name(Var v) {
    switch (v) {
        case Var::x: return "x";
        case Var::y: return "y";
        case Var::z: return "z";
        case Var::s: return "s";
    }
    return "?";
}

inline std::optional<Var> var_from_name(const std::string& name) {
    if (name == "x") return Var::x;
    if (name == "y") return Var::y;
    if (name == "z" || name == "y'") return Var::z;
    if (name == "s") return Var::s;
    return std::nullopt;
}

// Exponent vector over (x, y, z, s).
struct Mono {
    std::array<uint16_t, kNumVars> e{0, 0, 0, 0};

    int degree() const { return e[0] + e[1] + e[2] + e[3]; }
    int operator[](Var v) const { return e[static_cast<int>(v)]; }

    static Mono one() { return Mono{}; }
    static Mono var(Var v, int k = 1) {
        Mono m;
        m.e[static_cast<int>(v)] = static_cast<uint16_t>(k);
        return m;
    }

    Mono operator*(const Mono& o) const {
        Mono r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }
    bool divides(const Mono& o) const {
        for (int i = 0; i < kNumVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    // Requires this->divides(o).
    Mono quotient_into(const Mono& o) const {
        Mono r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = o.e[i] - e[i];
        return r;
    }
    bool operator==(const Mono& o) const { return e == o.e; }
    bool operator!=(const Mono& o) const { return e != o.e; }
};

// Graded lexicographic order with x > y > z > s; "greater" form so that a
// map's begin() is the leading monomial.
struct MonoGrlexGreater {
    bool operator()(const Mono& a, const Mono& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        for (int i = 0; i < kNumVars; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
        return false;
    }
};

inline bool grlex_greater(const Mono& a, const Mono& b) { return MonoGrlexGreater{}(a, b); }

// Sparse exact multivariate polynomial over Q(i) in (x, y, z, s).  Terms are
// stored leading-first in graded-lex order and never hold a zero coefficient.
class MultiPoly {
  public:
    using TermMap = std::map<Mono, GaussianRational, MonoGrlexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(const GaussianRational& c) {
        if (!c.is_zero()) terms_[Mono::one()] = c;
    }
    MultiPoly(long n) : MultiPoly(GaussianRational(n)) {}

    static MultiPoly zero() { return MultiPoly(); }
    static MultiPoly one() { return MultiPoly(GaussianRational(1)); }
    static MultiPoly variable(Var v) { return monomial(Mono::var(v), GaussianRational(1)); }
    static MultiPoly monomial(const Mono& m, const GaussianRational& c) {
        MultiPoly p;
        if (!c.is_zero()) p.terms_[m] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono::one());
    }
    size_t term_count() const { return terms_.size(); }

    GaussianRational constant_value() const {
        if (terms_.empty()) return GaussianRational();
        return terms_.begin()->second;
    }

    int total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }
    int degree_in(Var v) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
        return d;
    }
    bool uses(Var v) const {
        for (const auto& [m, c] : terms_)
            if (m[v] > 0) return true;
        return false;
    }

    const Mono& leading_mono() const { return terms_.begin()->first; }
    const GaussianRational& leading_coeff() const { return terms_.begin()->second; }

    GaussianRational coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    void add_term(const Mono& m, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MultiPoly operator-() const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    MultiPoly operator+(const MultiPoly& o) const {
        MultiPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    MultiPoly operator-(const MultiPoly& o) const {
        MultiPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    MultiPoly operator*(const MultiPoly& o) const {
        MultiPoly r;
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(const GaussianRational& k) const {
        MultiPoly r;
        if (k.is_zero()) return r;
        for (const auto& [m, c] : terms_) r.terms_[m] = c * k;
        return r;
    }

    MultiPoly pow(int k) const {
        MultiPoly r = one();
        MultiPoly base = *this;
        while (k > 0) {
            if (k & 1) r *= base;
            base = (k >>= 1) ? base * base : base;
        }
        return r;
    }

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Canonical order for deterministic result lists: grlex on the term
    // sequence, then coefficients.
    bool less_canonical(const MultiPoly& o) const {
        auto a = terms_.begin(), b = o.terms_.begin();
        for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
            if (a->first != b->first) return grlex_greater(a->first, b->first);
            if (a->second != b->second) return a->second < b->second;
        }
        return a == terms_.end() && b != o.terms_.end();
    }

    // Formal partial derivative.
    MultiPoly diff(Var v) const {
        MultiPoly r;
        int vi = static_cast<int>(v);
        for (const auto& [m, c] : terms_) {
            if (m.e[vi] == 0) continue;
            Mono d = m;
            d.e[vi] -= 1;
            r.add_term(d, c * GaussianRational(m.e[vi]));
        }
        return r;
    }

    // Exact evaluation at a point.
    GaussianRational eval(const std::array<GaussianRational, kNumVars>& pt) const {
        GaussianRational acc;
        for (const auto& [m, c] : terms_) {
            GaussianRational t = c;
            for (int i = 0; i < kNumVars; ++i)
                for (int k = 0; k < m.e[i]; ++k) t *= pt[i];
            acc += t;
        }
        return acc;
    }

    // Substitutes a constant for one variable.
    MultiPoly subst(Var v, const GaussianRational& value) const {
        MultiPoly r;
        int vi = static_cast<int>(v);
        for (const auto& [m, c] : terms_) {
            GaussianRational t = c;
            for (int k = 0; k < m.e[vi]; ++k) t *= value;
            Mono reduced = m;
            reduced.e[vi] = 0;
            r.add_term(reduced, t);
        }
        return r;
    }

    // Renames variables through a permutation-like map (used by the
    // auxiliary-1ODE constructions).  Two sources may not map to one target.
    MultiPoly rename(const std::array<Var, kNumVars>& to) const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) {
            Mono t;
            for (int i = 0; i < kNumVars; ++i)
                t.e[static_cast<int>(to[i])] += m.e[i];
            r.add_term(t, c);
        }
        return r;
    }

    MultiPoly monic() const {
        if (is_zero()) return *this;
        return scaled(leading_coeff().inverse());
    }

  private:
    TermMap terms_;
};

inline MultiPoly operator*(const GaussianRational& k, const MultiPoly& p) { return p.scaled(k); }

// Division by a single divisor in graded-lex order.  When the divisor divides
// exactly, the remainder is zero and the quotient is returned.
inline bool try_exact_div(const MultiPoly& a, const MultiPoly& b, MultiPoly& quotient) {
    if (b.is_zero()) throw division_by_zero();
    MultiPoly q, r = a;
    const Mono& lb = b.leading_mono();
    const GaussianRational& cb = b.leading_coeff();
    while (!r.is_zero()) {
        const Mono& lr = r.leading_mono();
        if (!lb.divides(lr)) return false;  // a = q*b + r' with r' != 0
        Mono qm = lb.quotient_into(lr);
        GaussianRational qc = r.leading_coeff() / cb;
        q.add_term(qm, qc);
        r -= MultiPoly::monomial(qm, qc) * b;
    }
    quotient = q;
    return true;
}

inline MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly q;
    if (!try_exact_div(a, b, q)) throw inexact_division();
    return q;
}

inline bool divides(const MultiPoly& b, const MultiPoly& a) {
    if (a.is_zero()) return true;
    MultiPoly q;
    return try_exact_div(a, b, q);
}

namespace detail {

// Univariate view of p in v: coefficient polynomials by degree.
inline std::vector<MultiPoly> coeffs_in(const MultiPoly& p, Var v) {
    std::vector<MultiPoly> out(static_cast<size_t>(p.degree_in(v)) + 1);
    int vi = static_cast<int>(v);
    for (const auto& [m, c] : p.terms()) {
        Mono rest = m;
        int d = rest.e[vi];
        rest.e[vi] = 0;
        out[d].add_term(rest, c);
    }
    return out;
}

inline MultiPoly from_coeffs_in(const std::vector<MultiPoly>& cs, Var v) {
    MultiPoly p;
    for (size_t d = 0; d < cs.size(); ++d)
        p += cs[d] * MultiPoly::monomial(Mono::var(v, static_cast<int>(d)), GaussianRational(1));
    return p;
}

inline MultiPoly leading_coeff_in(const MultiPoly& p, Var v) {
    auto cs = coeffs_in(p, v);
    return cs.back();
}

// Pseudo-remainder of a by b with respect to v (deg_v a >= deg_v b >= 1).
inline MultiPoly pseudo_rem(MultiPoly a, const MultiPoly& b, Var v) {
    int db = b.degree_in(v);
    MultiPoly lb = leading_coeff_in(b, v);
    while (!a.is_zero()) {
        int da = a.degree_in(v);
        if (da < db) break;
        MultiPoly la = leading_coeff_in(a, v);
        MultiPoly shift = MultiPoly::monomial(Mono::var(v, da - db), GaussianRational(1));
        a = lb * a - la * shift * b;
    }
    return a;
}

}  // namespace detail

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

namespace detail {

// gcd of the v-coefficients of p (the content of p as a univariate in v).
inline MultiPoly content_in(const MultiPoly& p, Var v) {
    MultiPoly g;
    for (const auto& c : coeffs_in(p, v)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : poly_gcd(g, c);
        if (g.is_constant()) return MultiPoly::one();
    }
    return g.is_zero() ? MultiPoly::one() : g;
}

}  // namespace detail

// Monic greatest common divisor (primitive PRS, recursing through the
// variable list).  gcd(0, 0) is 0 by convention.
inline MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() && b.is_zero()) return MultiPoly::zero();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return MultiPoly::one();

    Var v = Var::x;
    for (int i = 0; i < kNumVars; ++i) {
        v = static_cast<Var>(i);
        if (a.uses(v) || b.uses(v)) break;
    }
    if (!a.uses(v)) return detail::content_in(b, v).is_constant()
                               ? MultiPoly::one()
                               : poly_gcd(a, detail::content_in(b, v));
    if (!b.uses(v)) return detail::content_in(a, v).is_constant()
                               ? MultiPoly::one()
                               : poly_gcd(b, detail::content_in(a, v));

    MultiPoly ca = detail::content_in(a, v);
    MultiPoly cb = detail::content_in(b, v);
    MultiPoly pa = exact_div(a, ca);
    MultiPoly pb = exact_div(b, cb);
    MultiPoly cg = poly_gcd(ca, cb);

    MultiPoly r0 = pa, r1 = pb;
    if (r0.degree_in(v) < r1.degree_in(v)) std::swap(r0, r1);
    while (true) {
        MultiPoly r2 = detail::pseudo_rem(r0, r1, v);
        if (r2.is_zero()) break;
        if (!r2.uses(v)) {  // nontrivial remainder free of v: primitive gcd is 1
            r1 = MultiPoly::one();
            break;
        }
        r0 = r1;
        r1 = exact_div(r2, detail::content_in(r2, v));
    }
    MultiPoly pg = r1.is_constant() ? MultiPoly::one() : exact_div(r1, detail::content_in(r1, v));
    return (cg * pg).monic();
}

// Enumerates monomials of the given variables with total degree <= bound
// (ascending grlex within each degree, degrees ascending).
inline std::vector<Mono> monomials_up_to(const std::vector<Var>& vars, int bound) {
    std::vector<Mono> out;
    std::vector<Mono> cur{Mono::one()};
    out.push_back(Mono::one());
    for (int d = 1; d <= bound; ++d) {
        std::vector<Mono> next;
        for (const auto& m : cur)
            for (Var v : vars) next.push_back(m * Mono::var(v));
        std::sort(next.begin(), next.end(),
                  [](const Mono& a, const Mono& b) { return grlex_greater(b, a); });
        next.erase(std::unique(next.begin(), next.end()), next.end());
        out.insert(out.end(), next.begin(), next.end());
        cur = std::move(next);
    }
    return out;
}

inline std::vector<Mono> monomials_of_degree(const std::vector<Var>& vars, int degree) {
    std::vector<Mono> out;
    for (const auto& m : monomials_up_to(vars, degree))
        if (m.degree() == degree) out.push_back(m);
    return out;
}

}  // namespace liesym
