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

#ifndef FNL_NONLOCALITY_STRATEGY_H
#define FNL_NONLOCALITY_STRATEGY_H

#include <cstdint>
#include <functional>
#include <vector>

#include "fnl/quantum/behavior.h"

namespace fnl {

/// Local deterministic strategy: Alice outputs alpha[x], Bob outputs beta[y].
struct DeterministicStrategy {
    std::vector<int> alpha;
    std::vector<int> beta;

    bool operator==(const DeterministicStrategy &) const = default;
};

/// m_A^n · m_B^{n'}; throws ResourceError when it exceeds cap (the message carries the count).
std::uint64_t strategy_count(const ScenarioDims &dims, std::uint64_t cap);

/// m_A^n; throws ResourceError above cap.
std::uint64_t alice_strategy_count(const ScenarioDims &dims, std::uint64_t cap);

/// Lexicographic index: alpha[0] is the most significant digit, beta[n'-1] the least.
DeterministicStrategy decode_strategy(const ScenarioDims &dims, std::uint64_t index);
std::uint64_t encode_strategy(const ScenarioDims &dims, const DeterministicStrategy &s);

/// Calls f(strategy, index) for every strategy in lexicographic order.
void for_each_strategy(const ScenarioDims &dims, std::uint64_t cap,
                       const std::function<void(const DeterministicStrategy &, std::uint64_t)> &f);

/// Alice's part only: every alpha ∈ [m_A]^n in lexicographic order.
void for_each_alice_strategy(const ScenarioDims &dims, std::uint64_t cap,
                             const std::function<void(const std::vector<int> &, std::uint64_t)> &f);

/// D_{α,β}(a,b|x,y) = δ(α_x,a) δ(β_y,b) as an exact table.
RationalBehavior deterministic_behavior(const ScenarioDims &dims, const DeterministicStrategy &s);

}  // namespace fnl

#endif
