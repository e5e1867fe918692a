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

#include "fnl/nonlocality/strategy.h"

#include <sstream>

#include "fnl/errors.h"

namespace fnl {

namespace {

std::uint64_t checked_power_product(const std::vector<std::pair<int, int>> &factors, std::uint64_t cap,
                                    const std::string &what) {
    // Exact count as long double for the error message; overflow beyond 2^64 is irrelevant there.
    long double exact = 1;
    std::uint64_t count = 1;
    bool over = false;
    for (auto [base, exp] : factors) {
        for (int k = 0; k < exp; k++) {
            exact *= base;
            if (!over && count > cap / static_cast<std::uint64_t>(base)) {
                over = true;
            }
            if (!over) {
                count *= base;
            }
        }
    }
    if (over || count > cap) {
        std::ostringstream msg;
        msg.precision(0);
        msg << std::fixed << what << " = " << exact << " exceeds the cap " << cap;
        throw ResourceError(msg.str());
    }
    return count;
}

}  // namespace

std::uint64_t strategy_count(const ScenarioDims &dims, std::uint64_t cap) {
    std::ostringstream what;
    what << "deterministic strategy count " << dims.ma << "^" << dims.n << " * " << dims.mb << "^" << dims.np;
    return checked_power_product({{dims.ma, dims.n}, {dims.mb, dims.np}}, cap, what.str());
}

std::uint64_t alice_strategy_count(const ScenarioDims &dims, std::uint64_t cap) {
    std::ostringstream what;
    what << "Alice strategy count " << dims.ma << "^" << dims.n;
    return checked_power_product({{dims.ma, dims.n}}, cap, what.str());
}

DeterministicStrategy decode_strategy(const ScenarioDims &dims, std::uint64_t index) {
    DeterministicStrategy s;
    s.alpha.resize(dims.n);
    s.beta.resize(dims.np);
    for (int y = dims.np - 1; y >= 0; y--) {
        s.beta[y] = static_cast<int>(index % dims.mb);
        index /= dims.mb;
    }
    for (int x = dims.n - 1; x >= 0; x--) {
        s.alpha[x] = static_cast<int>(index % dims.ma);
        index /= dims.ma;
    }
    return s;
}

std::uint64_t encode_strategy(const ScenarioDims &dims, const DeterministicStrategy &s) {
    std::uint64_t index = 0;
    for (int a : s.alpha) {
        index = index * dims.ma + a;
    }
    for (int b : s.beta) {
        index = index * dims.mb + b;
    }
    return index;
}

void for_each_strategy(const ScenarioDims &dims, std::uint64_t cap,
                       const std::function<void(const DeterministicStrategy &, std::uint64_t)> &f) {
    std::uint64_t count = strategy_count(dims, cap);
    DeterministicStrategy s{std::vector<int>(dims.n, 0), std::vector<int>(dims.np, 0)};
    for (std::uint64_t index = 0; index < count; index++) {
        f(s, index);
        // Odometer increment, least significant digit last.
        int y = dims.np - 1;
        while (y >= 0 && ++s.beta[y] == dims.mb) {
            s.beta[y--] = 0;
        }
        if (y < 0) {
            int x = dims.n - 1;
            while (x >= 0 && ++s.alpha[x] == dims.ma) {
                s.alpha[x--] = 0;
            }
        }
    }
}

void for_each_alice_strategy(const ScenarioDims &dims, std::uint64_t cap,
                             const std::function<void(const std::vector<int> &, std::uint64_t)> &f) {
    std::uint64_t count = alice_strategy_count(dims, cap);
    std::vector<int> alpha(dims.n, 0);
    for (std::uint64_t index = 0; index < count; index++) {
        f(alpha, index);
        int x = dims.n - 1;
        while (x >= 0 && ++alpha[x] == dims.ma) {
            alpha[x--] = 0;
        }
    }
}

RationalBehavior deterministic_behavior(const ScenarioDims &dims, const DeterministicStrategy &s) {
    RationalBehavior b(dims);
    for (int x = 0; x < dims.n; x++) {
        for (int y = 0; y < dims.np; y++) {
            b.at(s.alpha[x], s.beta[y], x, y) = 1;
        }
    }
    return b;
}

}  // namespace fnl
