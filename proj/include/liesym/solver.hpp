#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "liesym/gaussian.hpp"

namespace liesym {

// --- polynomials in an arbitrary list of unknowns -------------------------
//
// The undetermined coefficients of a Darboux ansatz live here, not in
// MultiPoly: the geometric variables are already matched away when these
// systems are written down.  Monomials pack into one machine word: eight
// byte slots holding unknown-index + 1, sorted descending.  That caps the
// total degree of any intermediate at eight, which the solver treats as a
// branch-abandon condition (tracked, never silent).

struct SolverMono {
    unsigned __int128 bits = 0;

    static constexpr int kSlots = 16;

    int slot(int k) const {
        return static_cast<int>((bits >> (8 * (kSlots - 1 - k))) & 0xff);
    }

    static SolverMono from_slots(const int* vals, int count) {
        SolverMono m;
        for (int k = 0; k < count; ++k)
            m.bits |= static_cast<unsigned __int128>(vals[k] & 0xff)
                      << (8 * (kSlots - 1 - k));
        return m;
    }

    static SolverMono one() { return SolverMono{}; }
    static SolverMono unknown(int u) {
        int v = u + 1;
        return from_slots(&v, 1);
    }

    bool empty() const { return bits == 0; }

    int degree() const {
        int d = 0;
        for (int k = 0; k < kSlots; ++k)
            if (slot(k) != 0) ++d;
        return d;
    }

    int degree_in(int u) const {
        int d = 0;
        for (int k = 0; k < kSlots; ++k)
            if (slot(k) == u + 1) ++d;
        return d;
    }

    // Multiplication fails (returns false) when the product degree exceeds
    // the eight packed slots.
    bool try_mul(const SolverMono& o, SolverMono& out) const {
        int merged[2 * kSlots];
        int n = 0;
        int i = 0, j = 0;
        while (i < kSlots || j < kSlots) {
            int a = i < kSlots ? slot(i) : 0;
            int b = j < kSlots ? o.slot(j) : 0;
            if (a == 0 && b == 0) break;
            if (a >= b) {
                merged[n++] = a;
                ++i;
            } else {
                merged[n++] = b;
                ++j;
            }
        }
        if (n > kSlots) return false;
        out = from_slots(merged, n);
        return true;
    }

    SolverMono without(int u) const {
        int vals[kSlots];
        int n = 0;
        for (int k = 0; k < kSlots; ++k) {
            int v = slot(k);
            if (v != 0 && v != u + 1) vals[n++] = v;
        }
        return from_slots(vals, n);
    }

    SolverMono without_one(int u) const {
        int vals[kSlots];
        int n = 0;
        bool dropped = false;
        for (int k = 0; k < kSlots; ++k) {
            int v = slot(k);
            if (v == 0) continue;
            if (!dropped && v == u + 1) {
                dropped = true;
                continue;
            }
            vals[n++] = v;
        }
        return from_slots(vals, n);
    }

    void collect(std::set<int>& out) const {
        for (int k = 0; k < kSlots; ++k)
            if (slot(k) != 0) out.insert(slot(k) - 1);
    }

    bool operator==(const SolverMono& o) const { return bits == o.bits; }
    bool operator<(const SolverMono& o) const { return bits > o.bits; }  // big first
};

// Per-row statistics the solver consults constantly; computed once per
// immutable row and shared by copies.
struct RowMeta {
    struct UnknownInfo {
        int u;
        int max_deg;
        int occurrences;  // monomials containing u
        int bare;         // monomials that are exactly u^1
    };
    std::vector<UnknownInfo> unknowns;  // sorted by u
    std::vector<int> linear_const;      // u: occurrences == 1 and bare == 1
};

class SolverPoly {
  public:
    using Terms = std::map<SolverMono, GaussianRational>;

    SolverPoly() = default;
    explicit SolverPoly(const GaussianRational& c) {
        if (!c.is_zero()) terms_[SolverMono::one()] = c;
    }
    static SolverPoly unknown(int u) {
        SolverPoly p;
        p.terms_[SolverMono::unknown(u)] = GaussianRational(1);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool overflowed() const { return overflow_; }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    GaussianRational constant_value() const {
        return terms_.empty() ? GaussianRational() : terms_.begin()->second;
    }
    size_t term_count() const { return terms_.size(); }

    void add_term(const SolverMono& m, const GaussianRational& c) {
        if (c.is_zero()) return;
        meta_.reset();
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const RowMeta& meta() const {
        if (!meta_) {
            auto meta = std::make_shared<RowMeta>();
            std::map<int, RowMeta::UnknownInfo> stats;
            for (const auto& [m, c] : terms_) {
                bool bare = m.degree() == 1;
                for (int k = 0; k < SolverMono::kSlots; ++k) {
                    int v = m.slot(k);
                    if (v == 0) break;
                    if (k > 0 && m.slot(k - 1) == v) continue;  // counted already
                    auto& info = stats[v - 1];
                    info.u = v - 1;
                    info.max_deg = std::max(info.max_deg, m.degree_in(v - 1));
                    info.occurrences += 1;
                    if (bare) info.bare += 1;
                }
            }
            for (auto& [u, info] : stats) {
                if (info.occurrences == 1 && info.bare == 1)
                    meta->linear_const.push_back(u);
                meta->unknowns.push_back(info);
            }
            meta_ = std::move(meta);
        }
        return *meta_;
    }

    SolverPoly operator+(const SolverPoly& o) const {
        SolverPoly r = *this;
        r.overflow_ |= o.overflow_;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    SolverPoly operator-(const SolverPoly& o) const {
        SolverPoly r = *this;
        r.overflow_ |= o.overflow_;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    SolverPoly operator*(const SolverPoly& o) const {
        SolverPoly r;
        r.overflow_ = overflow_ || o.overflow_;
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) {
                SolverMono m;
                if (!ma.try_mul(mb, m)) {
                    r.overflow_ = true;
                    continue;
                }
                r.add_term(m, ca * cb);
            }
        return r;
    }
    SolverPoly scaled(const GaussianRational& k) const {
        SolverPoly r;
        r.overflow_ = overflow_;
        if (k.is_zero()) return r;
        for (const auto& [m, c] : terms_) r.terms_[m] = c * k;
        return r;
    }
    SolverPoly operator-() const { return scaled(GaussianRational(-1)); }

    SolverPoly monic() const {
        if (is_zero() || terms_.begin()->second.is_one()) return *this;
        return scaled(terms_.begin()->second.inverse());
    }

    bool operator==(const SolverPoly& o) const { return terms_ == o.terms_; }

    int degree_in(int u) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(u));
        return d;
    }
    bool contains(int u) const {
        for (const auto& [m, c] : terms_)
            if (m.degree_in(u) > 0) return true;
        return false;
    }

    void collect_unknowns(std::set<int>& out) const {
        for (const auto& [m, c] : terms_) m.collect(out);
    }

    // Unknowns u for which this polynomial reads c*u + (terms without u),
    // c a nonzero constant: u's only occurrence is the bare degree-1 monomial.
    void linear_const_candidates(std::set<int>& out) const {
        std::map<int, std::pair<int, int>> stats;  // u -> (occurrences, bare)
        for (const auto& [m, c] : terms_) {
            std::set<int> us;
            m.collect(us);
            bool bare = us.size() == 1 && m.degree() == 1;
            for (int u : us) {
                auto& s = stats[u];
                s.first += 1;
                if (bare) s.second += 1;
            }
        }
        for (const auto& [u, s] : stats)
            if (s.first == 1 && s.second == 1) out.insert(u);
    }

    // Coefficients of powers of u (index = exponent), u removed.
    std::vector<SolverPoly> coeffs_in(int u) const {
        std::vector<SolverPoly> out(static_cast<size_t>(degree_in(u)) + 1);
        for (auto& p : out) p.overflow_ = overflow_;
        for (const auto& [m, c] : terms_) out[m.degree_in(u)].add_term(m.without(u), c);
        return out;
    }

    SolverPoly subst(int u, const SolverPoly& repl) const {
        if (repl.is_zero()) {  // drop every monomial containing u
            SolverPoly r;
            r.overflow_ = overflow_;
            for (const auto& [m, c] : terms_)
                if (m.degree_in(u) == 0) r.terms_.emplace_hint(r.terms_.end(), m, c);
            return r;
        }
        auto cs = coeffs_in(u);
        if (cs.size() == 2) {  // linear in u: one product, one merge
            SolverPoly r = cs[1] * repl;
            for (const auto& [m, c] : cs[0].terms_) r.add_term(m, c);
            return r;
        }
        SolverPoly acc;  // Horner
        for (size_t j = cs.size(); j-- > 0;) acc = acc * repl + cs[j];
        return acc;
    }

    // Clears the rational substitution u -> num/den: returns den^k * this|sub.
    SolverPoly subst_cleared(int u, const SolverPoly& num, const SolverPoly& den) const {
        auto cs = coeffs_in(u);
        size_t k = cs.size() - 1;
        SolverPoly out;
        SolverPoly num_pow(GaussianRational(1));
        std::vector<SolverPoly> den_pows(k + 1, SolverPoly(GaussianRational(1)));
        for (size_t j = 1; j <= k; ++j) den_pows[j] = den_pows[j - 1] * den;
        for (size_t j = 0; j < cs.size(); ++j) {
            out = out + cs[j] * num_pow * den_pows[k - j];
            if (j + 1 < cs.size()) num_pow = num_pow * num;
        }
        return out;
    }

    GaussianRational eval(const std::vector<GaussianRational>& vals) const {
        GaussianRational acc;
        for (const auto& [m, c] : terms_) {
            GaussianRational t = c;
            for (int k = 0; k < SolverMono::kSlots; ++k) {
                int v = m.slot(k);
                if (v == 0) break;
                t *= vals[static_cast<size_t>(v - 1)];
            }
            acc += t;
        }
        return acc;
    }

    bool less_canonical(const SolverPoly& o) const {
        auto a = terms_.begin(), b = o.terms_.begin();
        for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
            if (!(a->first == b->first)) return a->first < b->first;
            if (a->second != b->second) return a->second < b->second;
        }
        return a == terms_.end() && b != o.terms_.end();
    }

  private:
    Terms terms_;
    bool overflow_ = false;
    mutable std::shared_ptr<const RowMeta> meta_;
};

// --- the budgeted branching solver ----------------------------------------

struct SolverOutcome {
    std::vector<std::vector<GaussianRational>> solutions;  // sorted, verified
    bool budget_exceeded = false;
    long abandoned_branches = 0;  // branches no safe rule could advance
    long branches_used = 0;
    long last_find_branch = -1;  // branch index of the latest solution found
};

namespace detail {

// Exact roots in Q(i) of a univariate SolverPoly (degree <= 2 after common
// powers of u are factored out).  Returns false when roots cannot be
// enumerated within this fragment; true means the root list is exhaustive.
inline bool univariate_roots(const SolverPoly& p, int u,
                             std::vector<GaussianRational>& roots) {
    auto cs = p.coeffs_in(u);
    for (const auto& c : cs)
        if (!c.is_constant()) return false;
    size_t lo = 0;
    while (lo < cs.size() && cs[lo].is_zero()) ++lo;
    if (lo > 0) roots.push_back(GaussianRational());
    size_t deg = cs.size() - 1 - lo;
    auto at = [&](size_t j) { return cs[lo + j].constant_value(); };
    if (deg == 0) return true;  // c*u^k: only the factored-out root
    if (deg == 1) {
        roots.push_back(-at(0) / at(1));
        return true;
    }
    if (deg == 2) {
        GaussianRational a = at(2), b = at(1), c = at(0);
        GaussianRational disc = b * b - GaussianRational(4) * a * c;
        GaussianRational d;
        if (!disc.sqrt(d)) return true;  // no roots in Q(i) beyond u = 0
        GaussianRational two_a = GaussianRational(2) * a;
        roots.push_back((-b + d) / two_a);
        GaussianRational r2 = (-b - d) / two_a;
        if (r2 != roots.back()) roots.push_back(r2);
        return true;
    }
    return false;
}

}  // namespace detail

// Solves a polynomial system over Q(i) by triangular substitution with
// branching: substitute equations linear in one unknown, branch on factorable
// or univariate equations and on pivots with non-constant coefficients,
// abandon a branch on contradiction.  Branches whose intermediates outgrow
// the size guards are abandoned and counted, never silently dropped.
// Solution families are sampled at the zero and one-hot assignments of their
// free unknowns; everything emitted is re-verified against the original
// system.
// Size guards: a branch is abandoned when an equation outgrows term_guard or
// a packed monomial overflows; a substitution is deferred to branching when
// its projected fill-in exceeds fill_guard; a rational pivot is not expanded
// when its coefficient has more than pivot_guard terms.
struct SolverLimits {
    size_t term_guard = 100000;
    long fill_guard = 8000;
    size_t pivot_guard = 200;
    size_t small_pivot = 4;   // rational pivots at most this size beat zero splits
    bool zero_split = true;   // Rule E on dense states
};

class PolySystemSolver {
  public:
    PolySystemSolver(int num_unknowns, std::vector<SolverPoly> equations, long budget,
                     SolverLimits limits = {})
        : n_(num_unknowns), budget_(budget), limits_(limits) {
        for (auto& e : equations)
            original_.push_back(std::make_shared<const SolverPoly>(std::move(e)));
    }

    SolverOutcome run() {
        SolverOutcome out;
        State init;
        init.eqs = original_;
        init.assigned.assign(static_cast<size_t>(n_), 0);
        init.committed_nonzero.assign(static_cast<size_t>(n_), 0);
        std::vector<State> work;
        work.push_back(std::move(init));
        std::vector<std::vector<GaussianRational>> found;
        while (!work.empty()) {
            if (out.branches_used >= budget_) {
                out.budget_exceeded = true;
                break;
            }
            ++out.branches_used;
            State st = std::move(work.back());
            work.pop_back();
            int verdict = simplify(st);
            if (verdict < 0) continue;  // contradiction
            if (verdict > 0) {
                ++out.abandoned_branches;  // a size guard tripped
                continue;
            }
            if (st.eqs.empty()) {
                size_t before = found.size();
                emit(st, found);
                if (found.size() > before) out.last_find_branch = out.branches_used;
                continue;
            }
            std::vector<State> children;
            int rc = branch(st, children);
            if (rc < 0) {
                ++out.abandoned_branches;
                continue;
            }
            out.abandoned_branches += rc;  // guarded-off pivot expansions
            for (auto it = children.rbegin(); it != children.rend(); ++it)
                work.push_back(std::move(*it));
        }
        std::sort(found.begin(), found.end(), value_vec_less);
        found.erase(std::unique(found.begin(), found.end()), found.end());
        for (auto& cand : found) {
            bool ok = true;
            for (const auto& e : original_)
                if (!e->eval(cand).is_zero()) {
                    ok = false;
                    break;
                }
            if (ok) out.solutions.push_back(std::move(cand));
        }
        return out;
    }

  private:
    using Row = std::shared_ptr<const SolverPoly>;

    struct StackEntry {
        int u;
        SolverPoly num;
        SolverPoly den;  // constant 1 for plain substitutions
    };
    struct State {
        std::vector<Row> eqs;
        std::vector<StackEntry> stack;
        std::vector<SolverPoly> nonzero;
        std::vector<char> assigned;
        std::vector<char> committed_nonzero;
    };

    static bool value_vec_less(const std::vector<GaussianRational>& a,
                               const std::vector<GaussianRational>& b) {
        for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return a.size() < b.size();
    }

    static Row make_row(SolverPoly p) {
        SolverPoly m = p.monic();
        return std::make_shared<const SolverPoly>(std::move(m));
    }

    // Returns -1 contradiction, +1 abandoned by a size guard, 0 fine.
    int simplify(State& st) {
        int since_sort = 0;
        bool sorted = false;
        while (true) {
            std::vector<Row> cleaned;
            cleaned.reserve(st.eqs.size());
            for (auto& e : st.eqs) {
                if (e->overflowed() || e->term_count() > limits_.term_guard) return +1;
                if (e->is_zero()) continue;
                if (e->is_constant()) return -1;
                cleaned.push_back(e);
            }
            st.eqs = std::move(cleaned);
            if (!sorted || since_sort >= 8) {
                std::sort(st.eqs.begin(), st.eqs.end(), [](const Row& a, const Row& b) {
                    if (a == b) return false;
                    return a->less_canonical(*b);
                });
                st.eqs.erase(std::unique(st.eqs.begin(), st.eqs.end(),
                                         [](const Row& a, const Row& b) {
                                             return a == b || *a == *b;
                                         }),
                             st.eqs.end());
                sorted = true;
                since_sort = 0;
            }

            // Rule A: equations of the form c*u + rest, c a nonzero constant,
            // u absent from rest.  Choose the pivot minimizing estimated
            // fill-in; when even the best projected fill is too large, leave
            // the decision to the branching rules instead of swelling.
            std::vector<int> occ(static_cast<size_t>(n_), 0);
            for (const auto& e : st.eqs)
                for (const auto& info : e->meta().unknowns)
                    ++occ[static_cast<size_t>(info.u)];
            long best_cost = -1;
            int best_eq = -1, best_u = -1;
            for (size_t ei = 0; ei < st.eqs.size(); ++ei) {
                for (int u : st.eqs[ei]->meta().linear_const) {
                    long cost = static_cast<long>(occ[static_cast<size_t>(u)] - 1) *
                                static_cast<long>(st.eqs[ei]->term_count() - 1);
                    if (best_eq < 0 || cost < best_cost ||
                        (cost == best_cost && u < best_u)) {
                        best_cost = cost;
                        best_eq = static_cast<int>(ei);
                        best_u = u;
                    }
                }
            }
            if (best_eq < 0) return sorted && since_sort == 0 ? 0 : resort_and_check(st);
            if (best_cost > limits_.fill_guard && st.eqs.size() > 1)
                return sorted && since_sort == 0 ? 0 : resort_and_check(st);

            const SolverPoly& e = *st.eqs[static_cast<size_t>(best_eq)];
            auto cs = e.coeffs_in(best_u);
            SolverPoly repl = cs[0].scaled(-cs[1].constant_value().inverse());
            st.eqs.erase(st.eqs.begin() + best_eq);
            subst_rows(st, best_u, repl);
            ++since_sort;
        }
    }

    // Final canonical pass so branching sees a deterministic equation order.
    int resort_and_check(State& st) {
        std::sort(st.eqs.begin(), st.eqs.end(), [](const Row& a, const Row& b) {
            if (a == b) return false;
            return a->less_canonical(*b);
        });
        st.eqs.erase(std::unique(st.eqs.begin(), st.eqs.end(),
                                 [](const Row& a, const Row& b) {
                                     return a == b || *a == *b;
                                 }),
                     st.eqs.end());
        return 0;
    }

    void subst_rows(State& st, int u, const SolverPoly& repl) {
        for (auto& e : st.eqs)
            if (e->contains(u)) e = make_row(e->subst(u, repl));
        st.stack.push_back({u, repl, SolverPoly(GaussianRational(1))});
        st.assigned[static_cast<size_t>(u)] = 1;
    }

    // Returns -1 when stuck, otherwise the number of guarded-off expansions.
    int branch(const State& st, std::vector<State>& children) {
        // Rule B: a univariate equation -> enumerate its exact roots.
        for (size_t ei = 0; ei < st.eqs.size(); ++ei) {
            if (st.eqs[ei]->meta().unknowns.size() != 1) continue;
            int u = st.eqs[ei]->meta().unknowns[0].u;
            std::vector<GaussianRational> roots;
            if (!detail::univariate_roots(*st.eqs[ei], u, roots)) continue;
            for (const auto& r : roots) {
                State child = st;
                child.eqs.erase(child.eqs.begin() + static_cast<long>(ei));
                subst_rows(child, u, SolverPoly(r));
                children.push_back(std::move(child));
            }
            return 0;  // the root list is exhaustive (possibly empty)
        }

        // Rule C: an equation with a common unknown factor (or a single
        // monomial): branch each shared unknown to zero, plus the quotient.
        for (size_t ei = 0; ei < st.eqs.size(); ++ei) {
            const SolverPoly& e = *st.eqs[ei];
            std::set<int> common;
            for (const auto& info : e.meta().unknowns)
                if (info.occurrences == static_cast<int>(e.term_count())) common.insert(info.u);
            if (common.empty()) continue;
            for (int u : common) {
                State child = st;
                child.eqs.erase(child.eqs.begin() + static_cast<long>(ei));
                subst_rows(child, u, SolverPoly());
                children.push_back(std::move(child));
            }
            std::map<int, int> shared;
            for (int u : common) {
                int e_min = INT32_MAX;
                for (const auto& [m2, c2] : e.terms())
                    e_min = std::min(e_min, m2.degree_in(u));
                shared[u] = e_min;
            }
            SolverPoly quotient;
            for (const auto& [m, c] : e.terms()) {
                SolverMono reduced = m;
                for (const auto& [u, k] : shared)
                    for (int t = 0; t < k; ++t) reduced = reduced.without_one(u);
                quotient.add_term(reduced, c);
            }
            if (!quotient.is_constant()) {
                State child = st;
                child.eqs[ei] = make_row(quotient);
                children.push_back(std::move(child));
            }
            return 0;
        }

        // Rule D candidates: an equation linear in u with polynomial
        // coefficient C lets us branch on C = 0 versus u = -R/C.
        int best_eq = -1, best_u = -1;
        size_t best_c = 0, best_e = 0;
        for (size_t ei = 0; ei < st.eqs.size(); ++ei) {
            const SolverPoly& e = *st.eqs[ei];
            for (const auto& info : e.meta().unknowns) {
                if (info.max_deg != 1) continue;
                size_t csize = static_cast<size_t>(info.occurrences);
                if (best_eq < 0 || csize < best_c ||
                    (csize == best_c && e.term_count() < best_e)) {
                    best_eq = static_cast<int>(ei);
                    best_u = info.u;
                    best_c = csize;
                    best_e = e.term_count();
                }
            }
        }

        // Rule E: exhaustive zero split on the most frequent uncommitted
        // unknown (zero side first, walking the sparse corner of the solution
        // lattice early).  Preferred over fat rational pivots, which swell.
        bool small_pivot = best_eq >= 0 && best_c <= limits_.small_pivot;
        if (!small_pivot && limits_.zero_split) {
            std::vector<int> occ(static_cast<size_t>(n_), 0);
            for (const auto& e : st.eqs)
                for (const auto& info : e->meta().unknowns)
                    ++occ[static_cast<size_t>(info.u)];
            int pick = -1;
            for (int u = 0; u < n_; ++u) {
                if (st.committed_nonzero[static_cast<size_t>(u)] ||
                    occ[static_cast<size_t>(u)] == 0)
                    continue;
                if (pick < 0 || occ[static_cast<size_t>(u)] > occ[static_cast<size_t>(pick)])
                    pick = u;
            }
            if (pick >= 0) {
                {
                    State child = st;
                    subst_rows(child, pick, SolverPoly());
                    children.push_back(std::move(child));
                }
                {
                    State child = st;
                    child.committed_nonzero[static_cast<size_t>(pick)] = 1;
                    child.nonzero.push_back(SolverPoly::unknown(pick));
                    children.push_back(std::move(child));
                }
                return 0;
            }
        }

        if (best_eq >= 0) {
            const SolverPoly& e = *st.eqs[static_cast<size_t>(best_eq)];
            auto cs = e.coeffs_in(best_u);
            SolverPoly C = cs[1], R = cs[0];
            int guarded = 0;
            {
                // C = 0 side; the pivot equation loses its u-term.
                State child = st;
                child.eqs[static_cast<size_t>(best_eq)] = make_row(R);
                child.eqs.push_back(make_row(C));
                children.push_back(std::move(child));
            }
            if (C.term_count() <= limits_.pivot_guard) {
                // C != 0 side: substitute u = -R/C, clearing denominators.
                State child = st;
                child.eqs.erase(child.eqs.begin() + best_eq);
                SolverPoly num = -R;
                for (auto& f : child.eqs)
                    if (f->contains(best_u))
                        f = make_row(f->subst_cleared(best_u, num, C));
                child.stack.push_back({best_u, num, C});
                child.assigned[static_cast<size_t>(best_u)] = 1;
                child.nonzero.push_back(C);
                children.push_back(std::move(child));
            } else {
                guarded = 1;
            }
            return guarded;
        }
        return -1;
    }

    void emit(const State& st, std::vector<std::vector<GaussianRational>>& found) {
        std::vector<int> free;
        for (int u = 0; u < n_; ++u)
            if (!st.assigned[static_cast<size_t>(u)]) free.push_back(u);

        std::vector<std::vector<GaussianRational>> candidates;
        candidates.emplace_back(static_cast<size_t>(n_));
        for (int u : free) {
            std::vector<GaussianRational> one(static_cast<size_t>(n_));
            one[static_cast<size_t>(u)] = GaussianRational(1);
            candidates.push_back(std::move(one));
        }

        for (auto& cand : candidates) {
            bool ok = true;
            for (auto it = st.stack.rbegin(); it != st.stack.rend() && ok; ++it) {
                GaussianRational d = it->den.eval(cand);
                if (d.is_zero()) {
                    ok = false;
                    break;
                }
                cand[static_cast<size_t>(it->u)] = it->num.eval(cand) / d;
            }
            if (!ok) continue;
            for (const auto& nz : st.nonzero)
                if (nz.eval(cand).is_zero()) {
                    ok = false;
                    break;
                }
            if (ok) found.push_back(cand);
        }
    }

    int n_;
    std::vector<Row> original_;
    long budget_;
    SolverLimits limits_;
};

// --- the public bilinear surface -------------------------------------------

struct BilinearSystem {
    std::vector<std::string> unknowns;  // ordered symbols
    std::vector<SolverPoly> equations;  // degree <= 2, bilinear across groups
};

// Validates that equations are at most bilinear: total degree <= 2, no
// squares, and the cross-term graph is two-colorable into disjoint groups.
inline void validate_bilinear(const BilinearSystem& sys) {
    int n = static_cast<int>(sys.unknowns.size());
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (const auto& e : sys.equations) {
        for (const auto& [m, c] : e.terms()) {
            if (m.degree() > 2)
                throw non_bilinear_system("equation has a term of degree > 2");
            std::set<int> us;
            m.collect(us);
            if (m.degree() == 2 && us.size() == 1)
                throw non_bilinear_system("equation has a squared unknown: " +
                                          sys.unknowns[static_cast<size_t>(*us.begin())]);
            if (us.size() == 2) {
                int a = *us.begin();
                int b = *std::next(us.begin());
                adj[static_cast<size_t>(a)].push_back(b);
                adj[static_cast<size_t>(b)].push_back(a);
            }
        }
    }
    std::vector<int> color(static_cast<size_t>(n), -1);
    for (int start = 0; start < n; ++start) {
        if (color[static_cast<size_t>(start)] != -1) continue;
        color[static_cast<size_t>(start)] = 0;
        std::vector<int> queue{start};
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int w : adj[static_cast<size_t>(v)]) {
                if (color[static_cast<size_t>(w)] == -1) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                    queue.push_back(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                    throw non_bilinear_system("unknowns cannot be split into two groups");
                }
            }
        }
    }
}

inline SolverOutcome bilinear_solve(const BilinearSystem& sys, long budget) {
    if (budget < 1) throw error("solver budget must be >= 1");
    validate_bilinear(sys);
    PolySystemSolver solver(static_cast<int>(sys.unknowns.size()), sys.equations, budget);
    return solver.run();
}

}  // namespace liesym
