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

#ifndef FNL_QUANTUM_BEHAVIOR_H
#define FNL_QUANTUM_BEHAVIOR_H

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <type_traits>
#include <sstream>
#include <vector>

#include "fnl/errors.h"
#include "fnl/numkit/rational.h"

namespace fnl {

/// Bell scenario size: n settings for Alice, np for Bob, ma / mb outcomes.
struct ScenarioDims {
    int n = 0;
    int np = 0;
    int ma = 0;
    int mb = 0;

    std::size_t cell_count() const {
        return static_cast<std::size_t>(n) * np * ma * mb;
    }
    bool operator==(const ScenarioDims &) const = default;
};

/// One entry (a, b | x, y) of a behavior.
struct Cell {
    int a = 0;
    int b = 0;
    int x = 0;
    int y = 0;
    bool operator==(const Cell &) const = default;
};

/// Conditional distribution p(a,b|x,y). T is double or BigRational.
template <typename T>
class BehaviorTable {
   public:
    BehaviorTable() = default;
    explicit BehaviorTable(ScenarioDims dims) : dims_(dims), probs_(checked_size(dims), T(0)) {
    }
    BehaviorTable(ScenarioDims dims, std::vector<T> probs) : dims_(dims), probs_(std::move(probs)) {
        if (probs_.size() != checked_size(dims)) {
            throw ValidationError("BehaviorTable: " + std::to_string(probs_.size()) + " entries, expected " +
                                  std::to_string(dims.cell_count()));
        }
    }

    const ScenarioDims &dims() const { return dims_; }

    std::size_t index(int a, int b, int x, int y) const {
        return ((static_cast<std::size_t>(x) * dims_.np + y) * dims_.ma + a) * dims_.mb + b;
    }
    std::size_t index(const Cell &c) const { return index(c.a, c.b, c.x, c.y); }
    Cell cell_at(std::size_t index) const {
        Cell c;
        c.b = static_cast<int>(index % dims_.mb);
        index /= dims_.mb;
        c.a = static_cast<int>(index % dims_.ma);
        index /= dims_.ma;
        c.y = static_cast<int>(index % dims_.np);
        c.x = static_cast<int>(index / dims_.np);
        return c;
    }

    T &at(int a, int b, int x, int y) { return probs_[index(a, b, x, y)]; }
    const T &at(int a, int b, int x, int y) const { return probs_[index(a, b, x, y)]; }
    const std::vector<T> &values() const { return probs_; }

    /// Σ_b p(a,b|x,y)
    T alice_marginal(int a, int x, int y) const {
        T s(0);
        for (int b = 0; b < dims_.mb; b++) {
            s += at(a, b, x, y);
        }
        return s;
    }
    /// Σ_a p(a,b|x,y)
    T bob_marginal(int b, int x, int y) const {
        T s(0);
        for (int a = 0; a < dims_.ma; a++) {
            s += at(a, b, x, y);
        }
        return s;
    }

    bool operator==(const BehaviorTable &) const = default;

   private:
    static std::size_t checked_size(const ScenarioDims &d) {
        if (d.n <= 0 || d.np <= 0 || d.ma <= 0 || d.mb <= 0) {
            std::ostringstream msg;
            msg << "BehaviorTable: dims (n=" << d.n << ", np=" << d.np << ", ma=" << d.ma << ", mb=" << d.mb
                << ") must be positive";
            throw ValidationError(msg.str());
        }
        return d.cell_count();
    }

    ScenarioDims dims_;
    std::vector<T> probs_;
};

using RealBehavior = BehaviorTable<double>;
using RationalBehavior = BehaviorTable<BigRational>;

struct NonsignalingReport {
    double alice_residual = 0;  ///< max |Σ_b p(a,b|x,y) - Σ_b p(a,b|x,y')|
    double bob_residual = 0;
    bool exact = false;         ///< computed in rational arithmetic

    double max_residual() const { return std::max(alice_residual, bob_residual); }
};

/// Max over (a,x,y,y') of |Σ_b p(a,b|x,y) - Σ_b p(a,b|x,y')| and the Bob analogue.
template <typename T>
NonsignalingReport check_nonsignaling(const BehaviorTable<T> &b) {
    const auto &d = b.dims();
    T worst_a(0);
    T worst_b(0);
    for (int x = 0; x < d.n; x++) {
        for (int a = 0; a < d.ma; a++) {
            T lo = b.alice_marginal(a, x, 0);
            T hi = lo;
            for (int y = 1; y < d.np; y++) {
                T m = b.alice_marginal(a, x, y);
                lo = std::min(lo, m);
                hi = std::max(hi, m);
            }
            worst_a = std::max(worst_a, T(hi - lo));
        }
    }
    for (int y = 0; y < d.np; y++) {
        for (int bb = 0; bb < d.mb; bb++) {
            T lo = b.bob_marginal(bb, 0, y);
            T hi = lo;
            for (int x = 1; x < d.n; x++) {
                T m = b.bob_marginal(bb, x, y);
                lo = std::min(lo, m);
                hi = std::max(hi, m);
            }
            worst_b = std::max(worst_b, T(hi - lo));
        }
    }
    return NonsignalingReport{to_double(worst_a), to_double(worst_b), !std::is_floating_point_v<T>};
}

/// Checks nonnegativity and per-(x,y) normalization; throws ValidationError
/// naming the first offending setting pair. Rational tables are checked exactly.
template <typename T>
void validate_behavior(const BehaviorTable<T> &b, double tol = 1e-9) {
    const auto &d = b.dims();
    for (int x = 0; x < d.n; x++) {
        for (int y = 0; y < d.np; y++) {
            T total(0);
            for (int a = 0; a < d.ma; a++) {
                for (int bb = 0; bb < d.mb; bb++) {
                    const T &p = b.at(a, bb, x, y);
                    bool negative;
                    if constexpr (std::is_floating_point_v<T>) {
                        negative = !(p >= -tol);
                    } else {
                        negative = p < 0;
                    }
                    if (negative) {
                        std::ostringstream msg;
                        msg << "behavior entry p(" << a << "," << bb << "|" << x << "," << y
                            << ") is negative: " << to_double(p);
                        throw ValidationError(msg.str());
                    }
                    total += p;
                }
            }
            bool off;
            if constexpr (std::is_floating_point_v<T>) {
                off = !(std::abs(total - 1) <= tol);
            } else {
                off = total != 1;
            }
            if (off) {
                std::ostringstream msg;
                msg.precision(17);
                msg << "behavior block (x=" << x << ", y=" << y << ") sums to " << to_double(total) << ", not 1";
                throw ValidationError(msg.str());
            }
        }
    }
}

inline RealBehavior to_real(const RationalBehavior &b) {
    std::vector<double> v;
    v.reserve(b.values().size());
    for (const auto &q : b.values()) {
        v.push_back(q.get_d());
    }
    return RealBehavior(b.dims(), std::move(v));
}

/// Exact copy of a float table whose entries are all within tol of rationals
/// with denominator ≤ max_den; nullopt otherwise.
std::optional<RationalBehavior> snap_behavior(const RealBehavior &b, long max_den = 64, double tol = 1e-9);

}  // namespace fnl

#endif
