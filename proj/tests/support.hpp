#pragma once

#include <random>
#include <string>

#include "liesym/parser.hpp"
#include "liesym/printer.hpp"

namespace liesym::test {

inline MultiPoly P(const std::string& text) {
    auto r = parse_poly(text);
    if (!r.ok()) throw error("test fixture failed to parse poly: " + text);
    return *r.value;
}

inline RationalFunction R(const std::string& text) {
    auto r = parse_ratfunc(text);
    if (!r.ok()) throw error("test fixture failed to parse ratfunc: " + text);
    return *r.value;
}

inline Rational2ODE ODE(const std::string& text) {
    auto r = parse_ode(text);
    if (!r.ok()) throw error("test fixture failed to parse ode: " + text);
    return *r.value;
}

// Example 1, Eq. y'' = (2y - 3zy + z^2 y - zx + z^2 x) / (y (y - x)).
inline Rational2ODE example1() {
    return ODE("y'' = (2*y - 3*z*y + z^2*y - z*x + z^2*x)/(y*(y - x))");
}

// Example 2, y'' = -(x^2 + 4y^4 + 2y^2) / (4y^3); no Lie point symmetries.
inline Rational2ODE example2() {
    return ODE("y'' = -(x^2 + 4*y^4 + 2*y^2)/(4*y^3)");
}

// Deterministic random generators for property tests.
struct Rng {
    std::mt19937_64 g;
    explicit Rng(uint64_t seed = 0) : g(seed) {}

    long int_in(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(g);
    }

    BigRational rational() {
        long den = int_in(1, 9);
        return BigRational(int_in(-9, 9), den);
    }

    GaussianRational gaussian() { return GaussianRational(rational(), rational()); }

    GaussianRational nonzero_gaussian() {
        while (true) {
            GaussianRational v = gaussian();
            if (!v.is_zero()) return v;
        }
    }

    Mono mono(int max_deg, bool with_s = false) {
        Mono m;
        int budget = static_cast<int>(int_in(0, max_deg));
        int nvars = with_s ? 4 : 3;
        for (int k = 0; k < budget; ++k)
            m.e[int_in(0, nvars - 1)] += 1;
        return m;
    }

    MultiPoly poly(int max_terms = 4, int max_deg = 3, bool with_s = false) {
        MultiPoly p;
        int n = static_cast<int>(int_in(0, max_terms));
        for (int k = 0; k < n; ++k) p.add_term(mono(max_deg, with_s), gaussian());
        return p;
    }

    MultiPoly nonzero_poly(int max_terms = 4, int max_deg = 3, bool with_s = false) {
        while (true) {
            MultiPoly p = poly(max_terms, max_deg, with_s);
            if (!p.is_zero()) return p;
        }
    }

    RationalFunction ratfunc(int max_terms = 3, int max_deg = 2) {
        return rat_normalize(poly(max_terms, max_deg), nonzero_poly(max_terms, max_deg));
    }
};

}  // namespace liesym::test
