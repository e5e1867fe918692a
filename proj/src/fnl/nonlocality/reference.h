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

#ifndef FNL_NONLOCALITY_REFERENCE_H
#define FNL_NONLOCALITY_REFERENCE_H

#include <array>
#include <string>

#include "fnl/quantum/behavior.h"
#include "fnl/quantum/quantum.h"

namespace fnl {

/// p(a,b|x,y) = 1/2 if a ⊕ b = x·y, else 0 (all labels 0/1).
RationalBehavior pr_box();

/// Outcome labels of the magic-square game, index order as used in the behavior.
extern const std::array<std::string, 4> kMagicSquareAliceLabels;  // +++, +--, -+-, --+
extern const std::array<std::string, 4> kMagicSquareBobLabels;    // ---, -++, +-+, ++-

struct PeresMermin {
    BipartitePureState state;
    MeasurementSet alice;
    MeasurementSet bob;
    RealBehavior born;          ///< Born-rule table in floats
    RationalBehavior behavior;  ///< the same table snapped to dyadic rationals
};

/// Maximally entangled two-ququart state with the magic-square measurements.
PeresMermin peres_mermin_behavior();

/// Σ_{x,y} (1/9) Σ over winning (a,b) of p(a,b|x,y): Alice's row entry y must
/// equal Bob's column entry x.
BigRational magic_square_win_probability(const RationalBehavior &b);

}  // namespace fnl

#endif
