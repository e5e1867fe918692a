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

#include "fnl/nonlocality/reference.h"

#include <cmath>

#include "fnl/errors.h"

namespace fnl {

const std::array<std::string, 4> kMagicSquareAliceLabels{"+++", "+--", "-+-", "--+"};
const std::array<std::string, 4> kMagicSquareBobLabels{"---", "-++", "+-+", "++-"};

RationalBehavior pr_box() {
    RationalBehavior b(ScenarioDims{2, 2, 2, 2});
    for (int x = 0; x < 2; x++) {
        for (int y = 0; y < 2; y++) {
            for (int a = 0; a < 2; a++) {
                for (int bb = 0; bb < 2; bb++) {
                    if ((a ^ bb) == (x & y)) {
                        b.at(a, bb, x, y) = make_rational(1, 2);
                    }
                }
            }
        }
    }
    return b;
}

namespace {

// Unnormalized vectors; rows are outcomes, listed per setting.
using Vec4 = std::array<double, 4>;
const Vec4 kAlice[3][4] = {
    {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}},
    {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}},
    {{1, -1, -1, -1}, {1, 1, -1, 1}, {1, -1, 1, 1}, {1, 1, 1, -1}},
};
const Vec4 kBob[3][4] = {
    {{0, 1, 0, -1}, {0, 1, 0, 1}, {1, 0, -1, 0}, {1, 0, 1, 0}},
    {{0, 0, 1, -1}, {0, 0, 1, 1}, {1, -1, 0, 0}, {1, 1, 0, 0}},
    {{0, 1, -1, 0}, {0, 1, 1, 0}, {1, 0, 0, -1}, {1, 0, 0, 1}},
};

MeasurementSet build(const Vec4 (&table)[3][4]) {
    std::vector<Povm> povms;
    for (const auto &setting : table) {
        std::vector<ComplexVector> cols;
        for (const auto &v : setting) {
            cols.push_back(normalized(ComplexVector(v.begin(), v.end())));
        }
        povms.push_back(Povm::from_basis(ComplexMatrix::from_columns(cols)));
    }
    return MeasurementSet(std::move(povms));
}

}  // namespace

PeresMermin peres_mermin_behavior() {
    std::vector<double> lam(4, 0.25);
    auto state = BipartitePureState::from_schmidt(lam);
    auto alice = build(kAlice);
    auto bob = build(kBob);
    auto born = born_behavior(state, alice, bob);
    auto exact = snap_behavior(born, 64, 1e-9);
    if (!exact) {
        throw SolverError("Peres-Mermin probabilities did not snap to rationals");
    }
    return PeresMermin{state, alice, bob, born, *exact};
}

BigRational magic_square_win_probability(const RationalBehavior &b) {
    if (b.dims() != ScenarioDims{3, 3, 4, 4}) {
        throw ValidationError("magic-square scoring needs a (3,3,4,4) behavior");
    }
    BigRational win(0);
    for (int x = 0; x < 3; x++) {
        for (int y = 0; y < 3; y++) {
            for (int a = 0; a < 4; a++) {
                for (int bb = 0; bb < 4; bb++) {
                    if (kMagicSquareAliceLabels[a][y] == kMagicSquareBobLabels[bb][x]) {
                        win += b.at(a, bb, x, y);
                    }
                }
            }
        }
    }
    return win / 9;
}

}  // namespace fnl
