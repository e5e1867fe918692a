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

#ifndef FNL_NONLOCALITY_ZERO_PATTERN_H
#define FNL_NONLOCALITY_ZERO_PATTERN_H

#include <cstdint>
#include <optional>
#include <vector>

#include "fnl/nonlocality/strategy.h"
#include "fnl/quantum/behavior.h"

namespace fnl {

struct ZeroPatternReport {
    std::vector<Cell> zeros;  ///< cells with p ≤ zero_tol (exactly 0 for rational tables)
    /// Per strategy (lexicographic index): index of the first zero cell it hits in (x, y)
    /// order, or -1. Filled only when the strategy count is at most witness_limit.
    std::vector<std::int64_t> witness;
    bool witnesses_enumerated = false;
    std::uint64_t strategy_count = 0;   ///< UINT64_MAX when saturated
    bool strategy_count_saturated = false;  ///< m_A^n · m_B^{n'} exceeds the cap; only Alice's part was enumerated
    std::uint64_t unwitnessed = 0;  ///< strategies hitting no zero cell (saturating)
    std::optional<DeterministicStrategy> first_unwitnessed;
    bool fully_nonlocal = false;
};

/// Full nonlocality by zero pattern: true iff every deterministic strategy puts
/// weight on some cell with p ≤ zero_tol. For each α the test is factorized:
/// (α, β) escapes iff every y has an outcome b with p(α_x, b|x, y) > 0 for all x.
ZeroPatternReport zero_pattern_check(const RealBehavior &b, double zero_tol = 1e-9, std::uint64_t cap = 10'000'000,
                                     std::uint64_t witness_limit = 1'000'000);
ZeroPatternReport zero_pattern_check(const RationalBehavior &b, std::uint64_t cap = 10'000'000,
                                     std::uint64_t witness_limit = 1'000'000);

/// Coefficients I = −1 on zero cells and 0 elsewhere, with its local and
/// non-signaling maxima.
struct BellFunctional {
    ScenarioDims dims;
    std::vector<double> coeffs;  ///< behavior index order
    double w_local = 0;          ///< max over deterministic strategies of Σ I·D
    double w_nonsignaling = 0;   ///< 0: every coefficient is ≤ 0 and the generating behavior attains it
    std::optional<DeterministicStrategy> best_local;

    double evaluate(const RealBehavior &p) const;
};

BellFunctional bell_functional_from_zeros(const RealBehavior &b, double zero_tol = 1e-9, std::uint64_t cap = 10'000'000);
BellFunctional bell_functional_from_zeros(const RationalBehavior &b, std::uint64_t cap = 10'000'000);

/// max over deterministic strategies of Σ I·D by full enumeration (reference path).
double local_bound_by_enumeration(const BellFunctional &f, std::uint64_t cap = 10'000'000);

/// min_{x,y} p(α_x, β_y|x, y), a lower bound on the local content.
double lower_bound_from_strategy(const RealBehavior &b, const DeterministicStrategy &s);
BigRational lower_bound_from_strategy(const RationalBehavior &b, const DeterministicStrategy &s);

}  // namespace fnl

#endif
