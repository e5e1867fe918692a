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

#include "fnl/quantum/behavior.h"

namespace fnl {

std::optional<RationalBehavior> snap_behavior(const RealBehavior &b, long max_den, double tol) {
    std::vector<BigRational> exact;
    exact.reserve(b.values().size());
    for (double p : b.values()) {
        auto q = snap_to_rational(p, max_den, tol);
        if (!q) {
            return std::nullopt;
        }
        exact.push_back(*q);
    }
    return RationalBehavior(b.dims(), std::move(exact));
}

}  // namespace fnl
