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

#include "fnl/nonlocality/local_content.h"

#include <sstream>
#include <type_traits>

#include "fnl/errors.h"
#include "fnl/nonlocality/simplex.h"

namespace fnl {

namespace {

template <typename T>
bool is_zero_cell(const T &p, const Tolerances &tol) {
    if constexpr (std::is_floating_point_v<T>) {
        return p <= tol.lp_zero;
    } else {
        return sgn(p) == 0;
    }
}

template <typename T>
LcResult<T> solve(const BehaviorTable<T> &b, const Limits &limits, const Tolerances &tol) {
    constexpr bool kFloat = std::is_floating_point_v<T>;
    validate_behavior(b, tol.probability_sum);
    auto ns = check_nonsignaling(b);
    if (ns.max_residual() > (kFloat ? tol.nonsignaling : 0.0)) {
        std::ostringstream msg;
        msg << "behavior is signaling (residual " << ns.max_residual() << "); local content needs a non-signaling table";
        throw ValidationError(msg.str());
    }
    const auto &dims = b.dims();
    std::uint64_t cap = limits.deterministic_cap;

    LcResult<T> res;
    res.exact = !kFloat;
    res.strategies_total = strategy_count(dims, cap);

    std::size_t cells = dims.cell_count();
    std::vector<char> zero(cells);
    for (std::size_t k = 0; k < cells; k++) {
        zero[k] = is_zero_cell(b.values()[k], tol);
    }

    // Presolve: a strategy touching a zero cell must have weight 0.
    std::vector<std::uint64_t> kept;
    for_each_strategy(dims, cap, [&](const DeterministicStrategy &s, std::uint64_t index) {
        for (int x = 0; x < dims.n; x++) {
            for (int y = 0; y < dims.np; y++) {
                if (zero[b.index(s.alpha[x], s.beta[y], x, y)]) {
                    return;
                }
            }
        }
        kept.push_back(index);
    });
    res.strategies_kept = kept.size();

    std::vector<std::size_t> row_of(cells, cells);
    std::vector<std::size_t> rows;
    for (std::size_t k = 0; k < cells; k++) {
        if (!zero[k]) {
            row_of[k] = rows.size();
            rows.push_back(k);
        }
    }
    std::size_t m = rows.size();
    std::size_t ncols = kept.size();

    res.dual.assign(cells, T(0));
    for (std::size_t k = 0; k < cells; k++) {
        if (zero[k]) {
            res.dual[k] = T(1);
        }
    }
    if (ncols == 0) {
        res.lc = T(0);
    } else {
        std::vector<T> a(m * ncols, T(0));
        std::vector<T> rhs(m);
        std::vector<T> c(ncols, T(1));
        for (std::size_t i = 0; i < m; i++) {
            rhs[i] = b.values()[rows[i]];
        }
        for (std::size_t j = 0; j < ncols; j++) {
            auto s = decode_strategy(dims, kept[j]);
            for (int x = 0; x < dims.n; x++) {
                for (int y = 0; y < dims.np; y++) {
                    a[row_of[b.index(s.alpha[x], s.beta[y], x, y)] * ncols + j] = T(1);
                }
            }
        }
        SimplexOptions opts;
        opts.pivot_tol = tol.lp_pivot;
        auto sol = solve_packing_lp(a, m, ncols, rhs, c, opts);
        res.pivots = sol.pivots;
        res.lc = sol.objective;
        for (std::size_t j = 0; j < ncols; j++) {
            bool nonzero;
            if constexpr (kFloat) {
                nonzero = sol.x[j] > 0;
            } else {
                nonzero = sgn(sol.x[j]) != 0;
            }
            if (nonzero) {
                res.weights.emplace_back(decode_strategy(dims, kept[j]), sol.x[j]);
            }
        }
        for (std::size_t i = 0; i < m; i++) {
            res.dual[rows[i]] = sol.y[i];
        }
    }
    res.dual_objective = T(0);
    for (std::size_t k = 0; k < cells; k++) {
        res.dual_objective += res.dual[k] * b.values()[k];
    }
    res.gap = to_double(T(res.dual_objective - res.lc));

    if (res.lc < 1) {
        std::vector<T> pnl(b.values());
        for (const auto &[s, w] : res.weights) {
            for (int x = 0; x < dims.n; x++) {
                for (int y = 0; y < dims.np; y++) {
                    pnl[b.index(s.alpha[x], s.beta[y], x, y)] -= w;
                }
            }
        }
        T scale = T(1) - res.lc;
        for (auto &v : pnl) {
            v /= scale;
            if constexpr (kFloat) {
                if (v < 0 && v > -1e-12) {
                    v = 0;
                }
            }
        }
        res.residual.emplace(dims, std::move(pnl));
    }
    res.certified = verify_lc_certificate(b, res, cap, kFloat ? 1e-8 : 0.0);
    return res;
}

}  // namespace

template <typename T>
bool verify_lc_certificate(const BehaviorTable<T> &b, const LcResult<T> &r, std::uint64_t cap, double gap_tol) {
    constexpr bool kFloat = std::is_floating_point_v<T>;
    const double feas = kFloat ? 1e-9 : 0.0;
    const auto &dims = b.dims();
    std::vector<T> used(dims.cell_count(), T(0));
    T total(0);
    for (const auto &[s, w] : r.weights) {
        if (w < -feas) {
            return false;
        }
        total += w;
        for (int x = 0; x < dims.n; x++) {
            for (int y = 0; y < dims.np; y++) {
                used[b.index(s.alpha[x], s.beta[y], x, y)] += w;
            }
        }
    }
    for (std::size_t k = 0; k < used.size(); k++) {
        if (used[k] - b.values()[k] > feas) {
            return false;
        }
        if (r.dual[k] < -feas) {
            return false;
        }
    }
    bool dual_ok = true;
    for_each_strategy(dims, cap, [&](const DeterministicStrategy &s, std::uint64_t) {
        if (!dual_ok) {
            return;
        }
        T sum(0);
        for (int x = 0; x < dims.n; x++) {
            for (int y = 0; y < dims.np; y++) {
                sum += r.dual[b.index(s.alpha[x], s.beta[y], x, y)];
            }
        }
        if (sum < 1 - feas) {
            dual_ok = false;
        }
    });
    if (!dual_ok) {
        return false;
    }
    T dual_obj(0);
    for (std::size_t k = 0; k < used.size(); k++) {
        dual_obj += r.dual[k] * b.values()[k];
    }
    if constexpr (kFloat) {
        return std::abs(dual_obj - total) <= gap_tol && std::abs(total - r.lc) <= gap_tol;
    } else {
        return dual_obj == total && total == r.lc;
    }
}

template bool verify_lc_certificate<double>(const RealBehavior &, const RealLcResult &, std::uint64_t, double);
template bool verify_lc_certificate<BigRational>(const RationalBehavior &, const RationalLcResult &, std::uint64_t,
                                                 double);

RationalLcResult local_content_lp(const RationalBehavior &b, const Limits &limits, const Tolerances &tol) {
    return solve(b, limits, tol);
}

RealLcResult local_content_lp(const RealBehavior &b, const Limits &limits, const Tolerances &tol) {
    return solve(b, limits, tol);
}

}  // namespace fnl
