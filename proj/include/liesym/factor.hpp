#pragma once

#include <algorithm>
#include <vector>

#include "liesym/poly.hpp"
#include "liesym/solver.hpp"

namespace liesym {

struct FactorPart {
    MultiPoly factor;  // monic
    int multiplicity = 1;
    // Set when irreducibility could not be certified within the ansatz
    // bounds (factor too large for the degree bound, or budget ran out).
    bool possibly_reducible = false;
};

struct Factorization {
    GaussianRational scalar{1};
    std::vector<FactorPart> parts;
    bool budget_exceeded = false;

    MultiPoly remultiplied() const {
        MultiPoly p(scalar);
        for (const auto& part : parts) p *= part.factor.pow(part.multiplicity);
        return p;
    }
};

namespace detail {

inline std::vector<Var> vars_of(const MultiPoly& p) {
    std::vector<Var> out;
    for (int i = 0; i < kNumVars; ++i)
        if (p.uses(static_cast<Var>(i))) out.push_back(static_cast<Var>(i));
    return out;
}

// One undetermined-coefficient split attempt: p = f * g with deg f = d,
// f monic at a chosen leading monomial.  Returns the first split found.
inline bool try_split(const MultiPoly& p, int d, long budget, bool& exhausted,
                      MultiPoly& f_out, MultiPoly& g_out) {
    const Mono& lead = p.leading_mono();
    int dp = p.total_degree();
    std::vector<Var> vars = vars_of(p);
    for (const Mono& mf : monomials_of_degree(vars, d)) {
        if (!mf.divides(lead)) continue;
        Mono mg = mf.quotient_into(lead);

        // f = mf + sum of unknowns over monomials below mf; g likewise below
        // mg with its leading coefficient pinned to lc(p).
        std::vector<Mono> f_support, g_support;
        for (const Mono& m : monomials_up_to(vars, d))
            if (grlex_greater(mf, m)) f_support.push_back(m);
        for (const Mono& m : monomials_up_to(vars, dp - d))
            if (grlex_greater(mg, m)) g_support.push_back(m);

        int nf = static_cast<int>(f_support.size());
        int ng = static_cast<int>(g_support.size());
        auto f_unknown = [&](int k) { return k; };
        auto g_unknown = [&](int k) { return nf + k; };

        // Coefficient-match f*g - p over the monomials that can occur.
        std::map<Mono, SolverPoly, MonoGrlexGreater> eqs;
        auto add = [&](const Mono& m, const SolverPoly& t) {
            auto [it, inserted] = eqs.emplace(m, t);
            if (!inserted) it->second = it->second + t;
        };
        SolverPoly one(GaussianRational(1));
        SolverPoly lcp(p.leading_coeff());
        add(mf * mg, one * lcp);
        for (int k = 0; k < ng; ++k)
            add(mf * g_support[static_cast<size_t>(k)], SolverPoly::unknown(g_unknown(k)));
        for (int j = 0; j < nf; ++j) {
            add(f_support[static_cast<size_t>(j)] * mg,
                SolverPoly::unknown(f_unknown(j)) * lcp);
            for (int k = 0; k < ng; ++k)
                add(f_support[static_cast<size_t>(j)] * g_support[static_cast<size_t>(k)],
                    SolverPoly::unknown(f_unknown(j)) * SolverPoly::unknown(g_unknown(k)));
        }
        for (const auto& [m, c] : p.terms()) add(m, SolverPoly(-c));

        BilinearSystem sys;
        for (int j = 0; j < nf + ng; ++j) sys.unknowns.push_back("c" + std::to_string(j));
        for (auto& [m, e] : eqs)
            if (!e.is_zero()) sys.equations.push_back(e);

        SolverOutcome outcome = bilinear_solve(sys, budget);
        if (outcome.budget_exceeded) exhausted = true;
        for (const auto& sol : outcome.solutions) {
            MultiPoly f = MultiPoly::monomial(mf, GaussianRational(1));
            for (int j = 0; j < nf; ++j)
                f.add_term(f_support[static_cast<size_t>(j)], sol[static_cast<size_t>(j)]);
            MultiPoly g = MultiPoly::monomial(mg, p.leading_coeff());
            for (int k = 0; k < ng; ++k)
                g.add_term(g_support[static_cast<size_t>(k)],
                           sol[static_cast<size_t>(nf + k)]);
            if (f.is_constant() || g.is_constant()) continue;
            if (f * g == p) {
                f_out = f;
                g_out = g;
                return true;
            }
        }
    }
    return false;
}

inline void factor_rec(const MultiPoly& p, int max_factor_degree, long budget,
                       Factorization& out);

// p squarefree (and free of monomial content): split or certify.
inline void factor_squarefree(const MultiPoly& p, int max_factor_degree, long budget,
                              Factorization& out) {
    int dp = p.total_degree();
    if (dp <= 1) {
        out.parts.push_back({p.monic(), 1, false});
        out.scalar *= p.leading_coeff();
        return;
    }
    bool exhausted = false;
    int d_max = std::min(max_factor_degree, dp / 2);
    for (int d = 1; d <= d_max; ++d) {
        MultiPoly f, g;
        if (try_split(p, d, budget, exhausted, f, g)) {
            factor_rec(f, max_factor_degree, budget, out);
            factor_rec(g, max_factor_degree, budget, out);
            return;
        }
    }
    bool certified = !exhausted && max_factor_degree >= dp / 2;
    if (exhausted) out.budget_exceeded = true;
    out.parts.push_back({p.monic(), 1, !certified});
    out.scalar *= p.leading_coeff();
}

inline void factor_rec(const MultiPoly& p, int max_factor_degree, long budget,
                       Factorization& out) {
    if (p.is_constant()) {
        out.scalar *= p.constant_value();
        return;
    }
    // Monomial content: each variable is an irreducible factor.
    Mono content;
    for (int i = 0; i < kNumVars; ++i) content.e[i] = UINT16_MAX;
    for (const auto& [m, c] : p.terms())
        for (int i = 0; i < kNumVars; ++i) content.e[i] = std::min(content.e[i], m.e[i]);
    if (content.degree() > 0) {
        MultiPoly reduced;
        for (const auto& [m, c] : p.terms()) reduced.add_term(content.quotient_into(m), c);
        for (int i = 0; i < kNumVars; ++i)
            for (int k = 0; k < content.e[i]; ++k)
                out.parts.push_back({MultiPoly::variable(static_cast<Var>(i)), 1, false});
        factor_rec(reduced, max_factor_degree, budget, out);
        return;
    }
    // Repeated or variable-disjoint factors come out through gcd with the
    // partials; what remains is squarefree in every variable.
    for (int i = 0; i < kNumVars; ++i) {
        Var v = static_cast<Var>(i);
        if (!p.uses(v)) continue;
        MultiPoly dp = p.diff(v);
        if (dp.is_zero()) continue;
        MultiPoly g = poly_gcd(p, dp);
        if (!g.is_constant()) {
            factor_rec(g, max_factor_degree, budget, out);
            factor_rec(exact_div(p, g), max_factor_degree, budget, out);
            return;
        }
    }
    factor_squarefree(p, max_factor_degree, budget, out);
}

}  // namespace detail

// Bounded-degree factorization: squarefree decomposition first, then
// undetermined-coefficient splits with factor degree <= max_factor_degree.
// The product of the returned factors (with multiplicities) times the scalar
// reproduces the input exactly; inconclusive splits are flagged rather than
// guessed.
inline Factorization poly_factor_limited(const MultiPoly& p, int max_factor_degree = 2,
                                         long budget = 10000) {
    if (p.is_zero()) throw error("cannot factor the zero polynomial");
    Factorization out;
    detail::factor_rec(p, max_factor_degree, budget, out);

    // Merge equal factors and sort canonically.
    std::sort(out.parts.begin(), out.parts.end(), [](const FactorPart& a, const FactorPart& b) {
        return a.factor.less_canonical(b.factor);
    });
    std::vector<FactorPart> merged;
    for (auto& part : out.parts) {
        if (!merged.empty() && merged.back().factor == part.factor) {
            merged.back().multiplicity += part.multiplicity;
            merged.back().possibly_reducible |= part.possibly_reducible;
        } else {
            merged.push_back(part);
        }
    }
    out.parts = std::move(merged);
    return out;
}

// Monic irreducible factors without multiplicities (the candidate-pool view).
inline std::vector<MultiPoly> irreducible_factors(const MultiPoly& p,
                                                  int max_factor_degree = 2,
                                                  long budget = 10000) {
    std::vector<MultiPoly> out;
    for (const auto& part : poly_factor_limited(p, max_factor_degree, budget).parts)
        out.push_back(part.factor);
    return out;
}

}  // namespace liesym
