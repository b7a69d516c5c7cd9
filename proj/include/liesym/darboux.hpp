#pragma once

#include <algorithm>
#include <vector>

#include "liesym/factor.hpp"
#include "liesym/linsolve.hpp"
#include "liesym/ode.hpp"
#include "liesym/solver.hpp"

namespace liesym {

// p monic, D[p] = q * p exactly.
struct DarbouxPair {
    MultiPoly p;
    MultiPoly q;
    bool possibly_reducible = false;
};

struct DarbouxSearchResult {
    std::vector<DarbouxPair> pairs;
    bool budget_exceeded = false;
    long abandoned_branches = 0;
};

// a*s + b with script-D[a s + b] = (N^2 s + lambda0)(a s + b), a != 0.
struct LinearSEigenpoly {
    MultiPoly a;
    MultiPoly b;
    MultiPoly lambda0;
};

struct LinearSSearchResult {
    std::vector<LinearSEigenpoly> eigenpolys;
    bool budget_exceeded = false;
    long abandoned_branches = 0;
};

namespace detail {

// Ansatz support below a pinned leading monomial.
inline std::vector<Mono> support_below(const std::vector<Var>& vars, int bound,
                                       const Mono& lead) {
    std::vector<Mono> out;
    for (const Mono& m : monomials_up_to(vars, bound))
        if (grlex_greater(lead, m)) out.push_back(m);
    return out;
}

// Builds coefficient-match equations for sum_over_terms == 0, where each
// term is (known MultiPoly) * (SolverPoly in the unknowns).
class EquationAccumulator {
  public:
    void add(const MultiPoly& known, const SolverPoly& factor) {
        for (const auto& [m, c] : known.terms()) {
            auto [it, inserted] = rows_.emplace(m, factor.scaled(c));
            if (!inserted) it->second = it->second + factor.scaled(c);
        }
    }
    std::vector<SolverPoly> equations() const {
        std::vector<SolverPoly> out;
        for (const auto& [m, e] : rows_)
            if (!e.is_zero()) out.push_back(e);
        return out;
    }

  private:
    std::map<Mono, SolverPoly, MonoGrlexGreater> rows_;
};

}  // namespace detail

// Finds the monic Darboux polynomials of D with deg p <= max_deg by the
// undetermined-coefficient ansatz: for every leading monomial (enumerated in
// graded-lex order, degree by degree) pin p's leading coefficient to 1 and
// coefficient-match D[p] - q*p = 0 as a bilinear system in the remaining
// coefficients of p and the cofactor q.
inline DarbouxSearchResult find_darboux(const Derivation& D, int max_deg,
                                        long budget = 10000,
                                        int factor_degree_bound = 2) {
    if (max_deg < 1) throw error("find_darboux requires max_deg >= 1");
    DarbouxSearchResult result;
    const std::vector<Var>& vars = D.vars();
    int cofactor_bound = std::max(0, D.max_coeff_degree() - 1);
    std::vector<Mono> q_support = monomials_up_to(vars, cofactor_bound);
    long budget_left = budget;

    std::vector<MultiPoly> seen;
    for (int d = 1; d <= max_deg; ++d) {
        std::vector<Mono> leads = monomials_of_degree(vars, d);
        std::sort(leads.begin(), leads.end(), grlex_greater);
        for (const Mono& lead : leads) {
            std::vector<Mono> p_support = detail::support_below(vars, d, lead);
            int np = static_cast<int>(p_support.size());
            int nq = static_cast<int>(q_support.size());

            // Unknowns: p coefficients then q coefficients.
            detail::EquationAccumulator acc;
            MultiPoly lead_poly = MultiPoly::monomial(lead, GaussianRational(1));
            acc.add(D.apply(lead_poly), SolverPoly(GaussianRational(1)));
            for (int j = 0; j < np; ++j)
                acc.add(D.apply(MultiPoly::monomial(p_support[static_cast<size_t>(j)],
                                                    GaussianRational(1))),
                        SolverPoly::unknown(j));
            for (int k = 0; k < nq; ++k) {
                MultiPoly qk = MultiPoly::monomial(q_support[static_cast<size_t>(k)],
                                                   GaussianRational(1));
                acc.add(-(qk * lead_poly), SolverPoly::unknown(np + k));
                for (int j = 0; j < np; ++j)
                    acc.add(-(qk * MultiPoly::monomial(p_support[static_cast<size_t>(j)],
                                                       GaussianRational(1))),
                            SolverPoly::unknown(np + k) * SolverPoly::unknown(j));
            }

            BilinearSystem sys;
            for (int j = 0; j < np + nq; ++j) sys.unknowns.push_back("c" + std::to_string(j));
            sys.equations = acc.equations();
            SolverOutcome out = bilinear_solve(sys, budget_left);
            result.budget_exceeded |= out.budget_exceeded;
            result.abandoned_branches += out.abandoned_branches;
            budget_left = std::max<long>(1, budget_left - out.branches_used);

            for (const auto& sol : out.solutions) {
                MultiPoly p = lead_poly;
                for (int j = 0; j < np; ++j)
                    p.add_term(p_support[static_cast<size_t>(j)], sol[static_cast<size_t>(j)]);
                MultiPoly q;
                for (int k = 0; k < nq; ++k)
                    q.add_term(q_support[static_cast<size_t>(k)],
                               sol[static_cast<size_t>(np + k)]);
                if (D.apply(p) != q * p) continue;  // re-verify, always

                // Split reducible results; every irreducible factor of a
                // Darboux polynomial is Darboux with its own cofactor.
                Factorization fac = poly_factor_limited(p, factor_degree_bound, budget);
                for (const auto& part : fac.parts) {
                    MultiPoly fq;
                    if (!try_exact_div(D.apply(part.factor), part.factor, fq)) continue;
                    bool dup = false;
                    for (const auto& s : seen)
                        if (s == part.factor) dup = true;
                    if (dup) continue;
                    seen.push_back(part.factor);
                    result.pairs.push_back({part.factor, fq, part.possibly_reducible});
                }
            }
        }
    }
    std::sort(result.pairs.begin(), result.pairs.end(),
              [](const DarbouxPair& a, const DarbouxPair& b) {
                  return a.p.less_canonical(b.p);
              });
    return result;
}

// Degree bound for the s-free part of the eigenpolynomial cofactor.
inline int lambda0_degree_bound(const Rational2ODE& ode) {
    const MultiPoly& N = ode.N();
    const MultiPoly& M = ode.M();
    MultiPoly gamma1 = N * M.diff(Var::z) - M * N.diff(Var::z);
    MultiPoly gamma0 = M * N.diff(Var::y) - N * M.diff(Var::y);
    Derivation D = build_D(ode);
    int bound = N.total_degree() + D.max_coeff_degree() - 1;
    bound = std::max(bound, gamma1.total_degree());
    bound = std::max(bound, gamma0.total_degree());
    return std::max(0, bound);
}

namespace detail {

// How far deg b may exceed deg a in an eigenpolynomial a*s + b.  The top
// coefficient of N^2 b^2 in the cross-multiplied identity is an exact square,
// so it must be degree-matched by one of the other terms; solving each match
// for k = deg b - deg a gives the bound.
inline int b_degree_excess_bound(const Rational2ODE& ode) {
    const MultiPoly& N = ode.N();
    const MultiPoly& M = ode.M();
    MultiPoly gamma1 = N * M.diff(Var::z) - M * N.diff(Var::z);
    MultiPoly gamma0 = M * N.diff(Var::y) - N * M.diff(Var::y);
    int n = N.total_degree();
    int mc = build_D(ode).max_coeff_degree();
    int k = 0;
    k = std::max(k, mc - n - 1);
    if (!gamma1.is_zero()) k = std::max(k, gamma1.total_degree() - 2 * n);
    if (!gamma0.is_zero()) {
        int diff = gamma0.total_degree() - 2 * n;
        k = std::max(k, diff >= 0 ? diff / 2 : 0);
    }
    return k;
}

// The symmetry PDE is linear in eta_bar, so rational symmetry candidates
// num/B with an enumerated Darboux-product denominator are a sparse exact
// kernel computation.  Each kernel vector W yields the S-function
// -D_x[W]/W, and through it an eigenpolynomial candidate (den S) s - num S.
// This is a discovery accelerator in front of the budgeted sweep: the sweep
// alone would have to search the same solutions through far more branching.
//
// The residual is cleared to pure polynomial form up front: with
// U = D[num] B - num D[B], the symmetry PDE for num/B times N^3 B^3 reads
//   D[U] N B - U (D[N] B + 2 N D[B] + B Gamma1) + num N B^2 Gamma0 = 0,
// linear in the coefficients of num with no rational arithmetic at all.
inline void rational_symmetry_scan(const Rational2ODE& ode, int max_deg,
                                   long budget,
                                   std::vector<std::pair<MultiPoly, MultiPoly>>& out) {
    int pool_deg = std::min(max_deg, 3);
    if (pool_deg < 1) pool_deg = 1;
    DarbouxSearchResult darboux = find_darboux(build_D(ode), pool_deg, budget);
    std::vector<MultiPoly> pool;
    for (const auto& pair : darboux.pairs) pool.push_back(pair.p);
    int npool = static_cast<int>(pool.size());
    if (npool > 8) {
        pool.resize(8);  // denominators beyond this are out of scan reach
        npool = 8;
    }

    const MultiPoly& N = ode.N();
    const MultiPoly& M = ode.M();
    MultiPoly gamma1 = N * M.diff(Var::z) - M * N.diff(Var::z);
    MultiPoly gamma0 = M * N.diff(Var::y) - N * M.diff(Var::y);
    Derivation D = build_D(ode);
    std::vector<Var> vars{Var::x, Var::y, Var::z};
    std::vector<Mono> num_support = monomials_up_to(vars, max_deg);
    int nn = static_cast<int>(num_support.size());

    // Exponent vectors for B, ascending total weight, bounded count.
    std::vector<std::vector<int>> exps;
    std::vector<int> cur(static_cast<size_t>(npool), 0);
    while (true) {
        exps.push_back(cur);
        int i = 0;
        for (; i < npool; ++i) {
            if (cur[static_cast<size_t>(i)] < 2) {
                ++cur[static_cast<size_t>(i)];
                break;
            }
            cur[static_cast<size_t>(i)] = 0;
        }
        if (i == npool) break;
    }
    std::sort(exps.begin(), exps.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  int sa = 0, sb = 0;
                  for (int v : a) sa += v;
                  for (int v : b) sb += v;
                  if (sa != sb) return sa < sb;
                  return a < b;
              });
    if (exps.size() > 400) exps.resize(400);

    for (const auto& e : exps) {
        MultiPoly B = MultiPoly::one();
        for (int i = 0; i < npool; ++i)
            for (int k = 0; k < e[static_cast<size_t>(i)]; ++k)
                B *= pool[static_cast<size_t>(i)];
        if (B.total_degree() > max_deg) continue;

        MultiPoly DB = D.apply(B);
        MultiPoly DN = D.apply(N);
        MultiPoly NB = N * B;
        MultiPoly U_factor = DN * B + MultiPoly(GaussianRational(2)) * N * DB + B * gamma1;
        MultiPoly num_factor = N * B * B * gamma0;

        std::map<Mono, LinearRow, MonoGrlexGreater> rows;
        for (int mi = 0; mi < nn; ++mi) {
            MultiPoly m = MultiPoly::monomial(num_support[static_cast<size_t>(mi)],
                                              GaussianRational(1));
            MultiPoly U = D.apply(m) * B - m * DB;
            MultiPoly R = D.apply(U) * NB - U * U_factor + m * num_factor;
            for (const auto& [mono, c] : R.terms()) rows[mono].coeffs[mi] += c;
        }
        std::vector<LinearRow> sys;
        for (auto& [m, row] : rows) sys.push_back(std::move(row));
        LinearSolution sol = solve_linear(std::move(sys), nn);
        if (!sol.consistent) continue;
        for (const auto& vec : sol.kernel) {
            MultiPoly num;
            for (int mi = 0; mi < nn; ++mi)
                num.add_term(num_support[static_cast<size_t>(mi)],
                             vec[static_cast<size_t>(mi)]);
            if (num.is_zero()) continue;
            RationalFunction W = rat_normalize(num, B);
            RationalFunction dW = apply_Dx(ode, W);
            if (dW.is_zero()) {
                out.emplace_back(MultiPoly::one(), MultiPoly::zero());
                continue;
            }
            RationalFunction S = -(dW / W);
            const MultiPoly& Q = S.den();
            MultiPoly P = S.num();
            if (Q.total_degree() > max_deg || P.total_degree() > max_deg) continue;
            out.emplace_back(Q, -P);
        }
    }
}

}  // namespace detail

// Searches for eigenpolynomials of script-D linear in s: a*s + b with
// cofactor N^2 s + lambda0.  Matching powers of s reduces the eigenpolynomial
// condition to the pair
//     N D[a] + a Gamma1 - N^2 b = lambda0 a        (s^1)
//     N D[b] + a Gamma0         = lambda0 b        (s^0)
// Cross-multiplying the two eliminates lambda0 up front:
//     b (N D[a] + a Gamma1 - N^2 b) - a (N D[b] + a Gamma0) = 0,
// a quadratic system in the coefficients of a and b alone, solved per leading
// monomial of a, degree by degree.  lambda0 is recovered by exact division
// and both original equations are re-verified on every solution.
inline LinearSSearchResult find_linear_s_eigenpolys(const Rational2ODE& ode, int max_deg,
                                                    long budget = 10000) {
    if (max_deg < 1) throw error("find_linear_s_eigenpolys requires max_deg >= 1");
    LinearSSearchResult result;
    const MultiPoly& N = ode.N();
    const MultiPoly& M = ode.M();
    MultiPoly gamma1 = N * M.diff(Var::z) - M * N.diff(Var::z);
    MultiPoly gamma0 = M * N.diff(Var::y) - N * M.diff(Var::y);
    MultiPoly N2 = N * N;
    Derivation D = build_D(ode);

    std::vector<std::pair<MultiPoly, MultiPoly>> seen;
    // Reduces, recovers lambda0, verifies both equations and dedups; the one
    // gate every candidate passes regardless of which search produced it.
    auto absorb = [&](MultiPoly a, MultiPoly b) {
        if (a.is_zero()) return;
        MultiPoly g = b.is_zero() ? a.monic() : poly_gcd(a, b);
        if (!g.is_constant()) {
            MultiPoly a_red = exact_div(a, g);
            MultiPoly b_red = b.is_zero() ? MultiPoly::zero() : exact_div(b, g);
            GaussianRational lc = a_red.leading_coeff();
            a = a_red.scaled(lc.inverse());
            b = b_red.scaled(lc.inverse());
        } else if (!a.leading_coeff().is_one()) {
            GaussianRational lc = a.leading_coeff();
            a = a.scaled(lc.inverse());
            b = b.scaled(lc.inverse());
        }
        if (a.total_degree() > max_deg || b.total_degree() > max_deg) return;
        MultiPoly lambda0;
        MultiPoly lhs1 = N * D.apply(a) + a * gamma1 - N2 * b;
        if (!try_exact_div(lhs1, a, lambda0)) return;
        if (N * D.apply(b) + a * gamma0 != lambda0 * b) return;
        for (const auto& [sa, sb] : seen)
            if (sa == a && sb == b) return;
        seen.emplace_back(a, b);
        result.eigenpolys.push_back({a, b, lambda0});
    };

    // Stage one: rational symmetries with Darboux-product denominators give
    // eigenpolynomial candidates through a linear kernel computation.
    std::vector<std::pair<MultiPoly, MultiPoly>> scan;
    detail::rational_symmetry_scan(ode, max_deg, budget, scan);
    for (auto& [a, b] : scan) absorb(a, b);

    // Stage two: the budgeted sweep over leading monomials of a.
    std::vector<Var> vars{Var::x, Var::y, Var::z};
    int k_bound = detail::b_degree_excess_bound(ode);
    long budget_left = budget;

    for (int d = 0; d <= max_deg; ++d) {
        std::vector<Mono> b_support =
            monomials_up_to(vars, std::min(max_deg, d + k_bound));
        int nb = static_cast<int>(b_support.size());
        auto b_mono = [&](int k) {
            return MultiPoly::monomial(b_support[static_cast<size_t>(k)], GaussianRational(1));
        };
        std::vector<Mono> leads = monomials_of_degree(vars, d);
        std::sort(leads.begin(), leads.end(), grlex_greater);
        for (const Mono& lead : leads) {
            std::vector<Mono> a_support = detail::support_below(vars, d, lead);
            int na = static_cast<int>(a_support.size());
            auto a_mono = [&](int j) {
                return MultiPoly::monomial(a_support[static_cast<size_t>(j)],
                                           GaussianRational(1));
            };
            MultiPoly lead_poly = MultiPoly::monomial(lead, GaussianRational(1));
            // Unknown layout: a coefficients, then b coefficients.
            auto ua = [&](int j) { return SolverPoly::unknown(j); };
            auto ub = [&](int k) { return SolverPoly::unknown(na + k); };

            detail::EquationAccumulator acc;
            // b * N D[a]  and  Gamma1 a b  and  -N a D[b]:
            for (int k = 0; k < nb; ++k) {
                MultiPoly bk = b_mono(k);
                acc.add(N * bk * D.apply(lead_poly) + gamma1 * lead_poly * bk -
                            N * lead_poly * D.apply(bk),
                        ub(k));
                for (int j = 0; j < na; ++j)
                    acc.add(N * bk * D.apply(a_mono(j)) + gamma1 * a_mono(j) * bk -
                                N * a_mono(j) * D.apply(bk),
                            ua(j) * ub(k));
            }
            // -N^2 b^2:
            for (int k = 0; k < nb; ++k)
                for (int k2 = k; k2 < nb; ++k2) {
                    MultiPoly known = -(N2 * b_mono(k) * b_mono(k2));
                    if (k2 > k) known += known;
                    acc.add(known, ub(k) * ub(k2));
                }
            // -Gamma0 a^2:
            acc.add(-(gamma0 * lead_poly * lead_poly), SolverPoly(GaussianRational(1)));
            for (int j = 0; j < na; ++j)
                acc.add(-(gamma0 * lead_poly * a_mono(j) * MultiPoly(GaussianRational(2))),
                        ua(j));
            for (int j = 0; j < na; ++j)
                for (int j2 = j; j2 < na; ++j2) {
                    MultiPoly known = -(gamma0 * a_mono(j) * a_mono(j2));
                    if (j2 > j) known += known;
                    acc.add(known, ua(j) * ua(j2));
                }

            PolySystemSolver solver(na + nb, acc.equations(), budget_left);
            SolverOutcome out = solver.run();
            result.budget_exceeded |= out.budget_exceeded;
            result.abandoned_branches += out.abandoned_branches;
            budget_left = std::max<long>(1, budget_left - out.branches_used);

            for (const auto& sol : out.solutions) {
                MultiPoly a = lead_poly;
                for (int j = 0; j < na; ++j)
                    a.add_term(a_support[static_cast<size_t>(j)], sol[static_cast<size_t>(j)]);
                MultiPoly b;
                for (int k = 0; k < nb; ++k)
                    b.add_term(b_support[static_cast<size_t>(k)],
                               sol[static_cast<size_t>(na + k)]);
                absorb(std::move(a), std::move(b));
            }
        }
    }
    return result;
}

}  // namespace liesym
