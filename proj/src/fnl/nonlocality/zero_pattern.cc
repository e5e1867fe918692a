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

#include "fnl/nonlocality/zero_pattern.h"

#include <algorithm>
#include <cmath>

#include "fnl/errors.h"

namespace fnl {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) {
        return UINT64_MAX;
    }
    return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) { return b > UINT64_MAX - a ? UINT64_MAX : a + b; }

ZeroPatternReport check(const ScenarioDims &dims, const std::vector<char> &zero, std::uint64_t cap,
                        std::uint64_t witness_limit) {
    ZeroPatternReport r;
    BehaviorTable<char> idx(dims, zero);
    for (std::size_t k = 0; k < zero.size(); k++) {
        if (zero[k]) {
            r.zeros.push_back(idx.cell_at(k));
        }
    }
    try {
        r.strategy_count = strategy_count(dims, cap);
    } catch (const ResourceError &) {
        // Bob's side factorizes, so only Alice's strategies have to fit under the cap.
        alice_strategy_count(dims, cap);
        r.strategy_count_saturated = true;
        r.strategy_count = UINT64_MAX;
    }

    if (!r.strategy_count_saturated && r.strategy_count <= witness_limit) {
        r.witnesses_enumerated = true;
        r.witness.assign(r.strategy_count, -1);
        for_each_strategy(dims, cap, [&](const DeterministicStrategy &s, std::uint64_t index) {
            for (int x = 0; x < dims.n; x++) {
                for (int y = 0; y < dims.np; y++) {
                    std::size_t k = idx.index(s.alpha[x], s.beta[y], x, y);
                    if (zero[k]) {
                        r.witness[index] = static_cast<std::int64_t>(k);
                        return;
                    }
                }
            }
            if (r.unwitnessed++ == 0) {
                r.first_unwitnessed = s;
            }
        });
    } else {
        // Count escaping β per α as a product of per-y allowed-outcome counts.
        for_each_alice_strategy(dims, cap, [&](const std::vector<int> &alpha, std::uint64_t) {
            std::uint64_t escaping = 1;
            std::vector<int> first_beta(dims.np, -1);
            for (int y = 0; y < dims.np && escaping; y++) {
                std::uint64_t allowed = 0;
                for (int b = 0; b < dims.mb; b++) {
                    bool ok = true;
                    for (int x = 0; x < dims.n && ok; x++) {
                        ok = !zero[idx.index(alpha[x], b, x, y)];
                    }
                    if (ok) {
                        if (first_beta[y] < 0) {
                            first_beta[y] = b;
                        }
                        allowed++;
                    }
                }
                escaping = saturating_mul(escaping, allowed);
            }
            if (escaping && !r.first_unwitnessed) {
                r.first_unwitnessed = DeterministicStrategy{alpha, first_beta};
            }
            r.unwitnessed = saturating_add(r.unwitnessed, escaping);
        });
    }
    r.fully_nonlocal = r.unwitnessed == 0;
    return r;
}

std::vector<char> zero_mask(const RealBehavior &b, double zero_tol) {
    std::vector<char> z;
    for (double p : b.values()) {
        z.push_back(p <= zero_tol);
    }
    return z;
}

std::vector<char> zero_mask(const RationalBehavior &b) {
    std::vector<char> z;
    for (const auto &p : b.values()) {
        z.push_back(sgn(p) == 0);
    }
    return z;
}

BellFunctional functional(const ScenarioDims &dims, const std::vector<char> &zero, std::uint64_t cap) {
    BellFunctional f;
    f.dims = dims;
    for (char z : zero) {
        f.coeffs.push_back(z ? -1.0 : 0.0);
    }
    alice_strategy_count(dims, cap);
    BehaviorTable<double> coeff(dims, f.coeffs);
    // w_L = max_α Σ_y max_b Σ_x I(α_x, b|x, y).
    double best = -INFINITY;
    for_each_alice_strategy(dims, cap, [&](const std::vector<int> &alpha, std::uint64_t) {
        double total = 0;
        std::vector<int> beta(dims.np);
        for (int y = 0; y < dims.np; y++) {
            double best_b = -INFINITY;
            for (int b = 0; b < dims.mb; b++) {
                double s = 0;
                for (int x = 0; x < dims.n; x++) {
                    s += coeff.at(alpha[x], b, x, y);
                }
                if (s > best_b) {
                    best_b = s;
                    beta[y] = b;
                }
            }
            total += best_b;
        }
        if (total > best) {
            best = total;
            f.best_local = DeterministicStrategy{alpha, beta};
        }
    });
    f.w_local = best;
    f.w_nonsignaling = 0;
    return f;
}

template <typename T>
T strategy_min(const BehaviorTable<T> &b, const DeterministicStrategy &s) {
    const auto &d = b.dims();
    if (static_cast<int>(s.alpha.size()) != d.n || static_cast<int>(s.beta.size()) != d.np) {
        throw ValidationError("strategy length does not match the scenario");
    }
    T best = b.at(s.alpha[0], s.beta[0], 0, 0);
    for (int x = 0; x < d.n; x++) {
        for (int y = 0; y < d.np; y++) {
            if (s.alpha[x] < 0 || s.alpha[x] >= d.ma || s.beta[y] < 0 || s.beta[y] >= d.mb) {
                throw ValidationError("strategy outcome out of range");
            }
            best = std::min(best, b.at(s.alpha[x], s.beta[y], x, y));
        }
    }
    return best;
}

}  // namespace

ZeroPatternReport zero_pattern_check(const RealBehavior &b, double zero_tol, std::uint64_t cap,
                                     std::uint64_t witness_limit) {
    return check(b.dims(), zero_mask(b, zero_tol), cap, witness_limit);
}

ZeroPatternReport zero_pattern_check(const RationalBehavior &b, std::uint64_t cap, std::uint64_t witness_limit) {
    return check(b.dims(), zero_mask(b), cap, witness_limit);
}

double BellFunctional::evaluate(const RealBehavior &p) const {
    if (p.dims() != dims) {
        throw ValidationError("behavior dimensions do not match the functional");
    }
    double s = 0;
    for (std::size_t k = 0; k < coeffs.size(); k++) {
        s += coeffs[k] * p.values()[k];
    }
    return s;
}

BellFunctional bell_functional_from_zeros(const RealBehavior &b, double zero_tol, std::uint64_t cap) {
    return functional(b.dims(), zero_mask(b, zero_tol), cap);
}

BellFunctional bell_functional_from_zeros(const RationalBehavior &b, std::uint64_t cap) {
    return functional(b.dims(), zero_mask(b), cap);
}

double local_bound_by_enumeration(const BellFunctional &f, std::uint64_t cap) {
    BehaviorTable<double> coeff(f.dims, f.coeffs);
    double best = -INFINITY;
    for_each_strategy(f.dims, cap, [&](const DeterministicStrategy &s, std::uint64_t) {
        double v = 0;
        for (int x = 0; x < f.dims.n; x++) {
            for (int y = 0; y < f.dims.np; y++) {
                v += coeff.at(s.alpha[x], s.beta[y], x, y);
            }
        }
        best = std::max(best, v);
    });
    return best;
}

double lower_bound_from_strategy(const RealBehavior &b, const DeterministicStrategy &s) {
    return strategy_min(b, s);
}

BigRational lower_bound_from_strategy(const RationalBehavior &b, const DeterministicStrategy &s) {
    return strategy_min(b, s);
}

}  // namespace fnl
