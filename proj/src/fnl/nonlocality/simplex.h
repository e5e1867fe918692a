// Copyright 2026 The fnl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FNL_NONLOCALITY_SIMPLEX_H
#define FNL_NONLOCALITY_SIMPLEX_H

#include <cmath>
#include <cstddef>
#include <sstream>
#include <type_traits>
#include <vector>

#include "fnl/errors.h"
#include "fnl/numkit/rational.h"

namespace fnl {

struct SimplexOptions {
    double pivot_tol = 1e-10;           ///< float mode: smallest usable pivot / improving reduced cost
    std::size_t tableau_cap = 40'000'000;  ///< max tableau entries
    std::size_t max_pivots = 0;         ///< 0 picks 50·(rows + columns)
};

template <typename T>
struct SimplexResult {
    T objective = T(0);
    std::vector<T> x;  ///< primal, one per column
    std::vector<T> y;  ///< dual, one per row
    std::size_t pivots = 0;
};

/// max Σ_j c_j x_j subject to A x ≤ b, x ≥ 0, with b ≥ 0 so the slack basis is
/// feasible. Dense tableau, Bland's rule. A is row-major m×N. Exact for
/// BigRational; for double, entries within pivot_tol of zero are treated as zero.
template <typename T>
SimplexResult<T> solve_packing_lp(const std::vector<T> &a, std::size_t m, std::size_t ncols, const std::vector<T> &b,
                                  const std::vector<T> &c, const SimplexOptions &opts = {}) {
    constexpr bool kFloat = std::is_floating_point_v<T>;
    const double eps = kFloat ? opts.pivot_tol : 0.0;
    auto positive = [&](const T &v) {
        if constexpr (kFloat) {
            return v > eps;
        } else {
            return sgn(v) > 0;
        }
    };
    if (a.size() != m * ncols || b.size() != m || c.size() != ncols) {
        throw ValidationError("solve_packing_lp: inconsistent shapes");
    }
    const std::size_t width = ncols + m + 1;  // columns, slacks, rhs
    if ((m + 1) * width > opts.tableau_cap) {
        std::ostringstream msg;
        msg << "LP tableau of " << (m + 1) << " x " << width << " entries exceeds the cap " << opts.tableau_cap;
        throw ResourceError(msg.str());
    }
    for (std::size_t i = 0; i < m; i++) {
        if (b[i] < 0) {
            throw ValidationError("solve_packing_lp: negative right-hand side");
        }
    }
    std::vector<T> t((m + 1) * width, T(0));
    auto at = [&](std::size_t r, std::size_t col) -> T & { return t[r * width + col]; };
    for (std::size_t i = 0; i < m; i++) {
        for (std::size_t j = 0; j < ncols; j++) {
            at(i, j) = a[i * ncols + j];
        }
        at(i, ncols + i) = T(1);
        at(i, width - 1) = b[i];
    }
    // Row m holds reduced costs; its rhs entry holds the current objective.
    for (std::size_t j = 0; j < ncols; j++) {
        at(m, j) = c[j];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; i++) {
        basis[i] = ncols + i;
    }

    std::size_t max_pivots = opts.max_pivots ? opts.max_pivots : 50 * (m + ncols) + 100;
    SimplexResult<T> res;
    T ratio(0);
    T best(0);
    T factor;
    while (true) {
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; j++) {
            if (positive(at(m, j))) {
                enter = j;
                break;
            }
        }
        if (enter == width) {
            break;
        }
        std::size_t leave = m;
        for (std::size_t i = 0; i < m; i++) {
            if (!positive(at(i, enter))) {
                continue;
            }
            ratio = at(i, width - 1) / at(i, enter);
            bool take;
            if (leave == m) {
                take = true;
            } else if constexpr (kFloat) {
                take = ratio < best - 1e-15 || (std::abs(ratio - best) <= 1e-15 && basis[i] < basis[leave]);
            } else {
                take = ratio < best || (ratio == best && basis[i] < basis[leave]);
            }
            if (take) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) {
            throw SolverError("solve_packing_lp: objective unbounded");
        }
        if (++res.pivots > max_pivots) {
            std::ostringstream msg;
            msg << "solve_packing_lp: no convergence after " << max_pivots << " pivots";
            throw SolverError(msg.str());
        }
        // Pivot on (leave, enter).
        T piv = at(leave, enter);
        for (std::size_t j = 0; j < width; j++) {
            at(leave, j) /= piv;
        }
        for (std::size_t i = 0; i <= m; i++) {
            if (i == leave) {
                continue;
            }
            factor = at(i, enter);
            if (factor == 0) {
                continue;
            }
            for (std::size_t j = 0; j < width; j++) {
                const T &pv = at(leave, j);
                if (pv != 0) {
                    at(i, j) -= factor * pv;
                }
            }
            if constexpr (kFloat) {
                at(i, enter) = 0;
            }
        }
        basis[leave] = enter;
    }

    res.x.assign(ncols, T(0));
    for (std::size_t i = 0; i < m; i++) {
        if (basis[i] < ncols) {
            res.x[basis[i]] = at(i, width - 1);
        }
    }
    res.y.resize(m);
    for (std::size_t i = 0; i < m; i++) {
        res.y[i] = -at(m, ncols + i);
    }
    res.objective = -at(m, width - 1);
    return res;
}

}  // namespace fnl

#endif
