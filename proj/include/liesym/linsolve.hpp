#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "liesym/gaussian.hpp"

namespace liesym {

// Sparse exact linear algebra over Q(i).  Rows read  sum c_u x_u + constant = 0.
struct LinearRow {
    std::map<int, GaussianRational> coeffs;
    GaussianRational constant;
};

struct LinearSolution {
    bool consistent = false;
    std::vector<GaussianRational> particular;            // free unknowns at 0
    std::vector<std::vector<GaussianRational>> kernel;   // one basis vector per free unknown
    std::vector<int> free_unknowns;
};

// Gaussian elimination with Markowitz-style pivoting (least fill-in first),
// fully reduced so every pivot variable is expressed in the free ones.
inline LinearSolution solve_linear(std::vector<LinearRow> rows, int num_unknowns) {
    std::vector<int> pivot_of_col(static_cast<size_t>(num_unknowns), -1);
    std::vector<char> row_done(rows.size(), 0);

    while (true) {
        // Column occupancy for Markowitz scoring.
        std::map<int, int> col_count;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (row_done[r]) continue;
            for (const auto& [c, v] : rows[r].coeffs) ++col_count[c];
        }
        long best_score = -1;
        int best_r = -1, best_c = -1;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (row_done[r] || rows[r].coeffs.empty()) continue;
            for (const auto& [c, v] : rows[r].coeffs) {
                long score = static_cast<long>(rows[r].coeffs.size() - 1) *
                             static_cast<long>(col_count[c] - 1);
                if (best_r < 0 || score < best_score ||
                    (score == best_score && (c < best_c || (c == best_c && static_cast<int>(r) < best_r)))) {
                    best_score = score;
                    best_r = static_cast<int>(r);
                    best_c = c;
                }
            }
        }
        if (best_r < 0) break;

        LinearRow& prow = rows[static_cast<size_t>(best_r)];
        GaussianRational inv = prow.coeffs[best_c].inverse();
        for (auto& [c, v] : prow.coeffs) v *= inv;
        prow.constant *= inv;
        pivot_of_col[static_cast<size_t>(best_c)] = best_r;
        row_done[static_cast<size_t>(best_r)] = 1;

        for (size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == best_r) continue;
            auto it = rows[r].coeffs.find(best_c);
            if (it == rows[r].coeffs.end()) continue;
            GaussianRational factor = it->second;
            rows[r].coeffs.erase(it);
            for (const auto& [c, v] : prow.coeffs) {
                if (c == best_c) continue;
                auto [jt, inserted] = rows[r].coeffs.emplace(c, -(factor * v));
                if (!inserted) {
                    jt->second -= factor * v;
                    if (jt->second.is_zero()) rows[r].coeffs.erase(jt);
                }
            }
            rows[r].constant -= factor * prow.constant;
        }
    }

    LinearSolution out;
    for (size_t r = 0; r < rows.size(); ++r)
        if (!row_done[r] && rows[r].coeffs.empty() && !rows[r].constant.is_zero())
            return out;  // inconsistent
    out.consistent = true;
    out.particular.assign(static_cast<size_t>(num_unknowns), GaussianRational());
    for (int c = 0; c < num_unknowns; ++c)
        if (pivot_of_col[static_cast<size_t>(c)] < 0) out.free_unknowns.push_back(c);

    for (int c = 0; c < num_unknowns; ++c) {
        int r = pivot_of_col[static_cast<size_t>(c)];
        if (r >= 0) out.particular[static_cast<size_t>(c)] = -rows[static_cast<size_t>(r)].constant;
    }
    for (int f : out.free_unknowns) {
        std::vector<GaussianRational> vec(static_cast<size_t>(num_unknowns));
        vec[static_cast<size_t>(f)] = GaussianRational(1);
        for (int c = 0; c < num_unknowns; ++c) {
            int r = pivot_of_col[static_cast<size_t>(c)];
            if (r < 0) continue;
            auto it = rows[static_cast<size_t>(r)].coeffs.find(f);
            if (it != rows[static_cast<size_t>(r)].coeffs.end())
                vec[static_cast<size_t>(c)] = -it->second;
        }
        out.kernel.push_back(std::move(vec));
    }
    return out;
}

}  // namespace liesym
