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

#ifndef FNL_NONLOCALITY_LOCAL_CONTENT_H
#define FNL_NONLOCALITY_LOCAL_CONTENT_H

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fnl/config.h"
#include "fnl/nonlocality/strategy.h"
#include "fnl/quantum/behavior.h"

namespace fnl {

/// Optimal local/nonlocal split p = lc·p_L + (1−lc)·p_NL.
template <typename T>
struct LcResult {
    T lc = T(0);
    std::vector<std::pair<DeterministicStrategy, T>> weights;  ///< nonzero weights only
    std::optional<BehaviorTable<T>> residual;                   ///< p_NL, present when lc < 1
    std::vector<T> dual;   ///< one multiplier per cell (behavior index order); feasible for the dual LP
    T dual_objective = T(0);
    bool certified = false;  ///< primal and dual feasible with matching objectives
    double gap = 0;          ///< dual − primal objective
    std::uint64_t strategies_total = 0;
    std::uint64_t strategies_kept = 0;  ///< after removing strategies that touch zero cells
    std::size_t pivots = 0;
    bool exact = false;
};

using RationalLcResult = LcResult<BigRational>;
using RealLcResult = LcResult<double>;

/// Local content by LP over deterministic strategies. The table must be a
/// valid, non-signaling behavior (ValidationError otherwise).
RationalLcResult local_content_lp(const RationalBehavior &b, const Limits &limits = {}, const Tolerances &tol = {});
RealLcResult local_content_lp(const RealBehavior &b, const Limits &limits = {}, const Tolerances &tol = {});

/// Independent optimality check: w ≥ 0 with Σ w D ≤ p, y ≥ 0 with Σ_{x,y} y(α_x,β_y,x,y) ≥ 1 for
/// every strategy, and equal objectives (within gap_tol in float mode).
template <typename T>
bool verify_lc_certificate(const BehaviorTable<T> &b, const LcResult<T> &r, std::uint64_t cap, double gap_tol);

}  // namespace fnl

#endif
