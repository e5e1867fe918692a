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

#include "fnl/quantum/quantum.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "fnl/errors.h"
#include "fnl/numkit/schmidt.h"

using namespace fnl;

namespace {

ComplexMatrix hadamard() {
    double h = 1 / std::sqrt(2.0);
    return ComplexMatrix{{h, h}, {h, -h}};
}

ComplexMatrix random_unitary(std::size_t d, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<ComplexVector> cols;
    for (std::size_t c = 0; c < d; c++) {
        ComplexVector v(d);
        for (auto &z : v) {
            z = Complex(g(rng), g(rng));
        }
        cols.push_back(v);
    }
    // Gram-Schmidt
    for (std::size_t c = 0; c < d; c++) {
        for (std::size_t p = 0; p < c; p++) {
            Complex o = inner(cols[p], cols[c]);
            for (std::size_t k = 0; k < d; k++) {
                cols[c][k] -= o * cols[p][k];
            }
        }
        cols[c] = normalized(cols[c]);
    }
    return ComplexMatrix::from_columns(cols);
}

std::vector<double> random_spectrum(std::size_t d, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.01, 1.0);
    std::vector<double> s(d);
    double total = 0;
    for (auto &x : s) {
        x = u(rng);
        total += x;
    }
    for (auto &x : s) {
        x /= total;
    }
    return s;
}

MeasurementSet random_bases(std::size_t settings, std::size_t d, std::mt19937_64 &rng) {
    std::vector<Povm> povms;
    for (std::size_t x = 0; x < settings; x++) {
        povms.push_back(Povm::from_basis(random_unitary(d, rng)));
    }
    return MeasurementSet(povms);
}

double overlap_modulus(const ComplexVector &u, const ComplexVector &v) {
    return std::abs(inner(u, v));
}

}  // namespace

TEST(post_measurement_states, qubit_family_z_basis) {
    double p = 0.7;
    std::vector<double> lam{p, 1 - p};
    auto state = BipartitePureState::from_schmidt(lam);
    MeasurementSet z({Povm::from_basis(ComplexMatrix::identity(2))});
    auto fam = post_measurement_states(state, z);
    EXPECT_NEAR(fam.at(0, 0).weight, p, 1e-14);
    EXPECT_NEAR(fam.at(0, 1).weight, 1 - p, 1e-14);
    EXPECT_NEAR(overlap_modulus(fam.at(0, 0).state, ComplexVector{1, 0}), 1, 1e-14);
    EXPECT_NEAR(overlap_modulus(fam.at(0, 1).state, ComplexVector{0, 1}), 1, 1e-14);
}

TEST(post_measurement_states, qubit_family_x_basis) {
    double p = 0.7;
    std::vector<double> lam{p, 1 - p};
    auto state = BipartitePureState::from_schmidt(lam);
    MeasurementSet x({Povm::from_basis(hadamard())});
    auto fam = post_measurement_states(state, x);
    ComplexVector plus{std::sqrt(p), std::sqrt(1 - p)};
    ComplexVector minus{std::sqrt(p), -std::sqrt(1 - p)};
    EXPECT_NEAR(overlap_modulus(fam.at(0, 0).state, plus), 1, 1e-14);
    EXPECT_NEAR(overlap_modulus(fam.at(0, 1).state, minus), 1, 1e-14);
    EXPECT_NEAR(fam.at(0, 0).weight, 0.5, 1e-14);
}

TEST(post_measurement_states, maximally_entangled_cross_overlaps) {
    // Cross-basis overlaps of Bob's states equal those of Alice's (conjugated) vectors.
    std::size_t d = 3;
    std::vector<double> lam(d, 1.0 / d);
    auto state = BipartitePureState::from_schmidt(lam);
    std::complex<double> w = std::polar(1.0, 2 * M_PI / 3);
    double s = 1 / std::sqrt(3.0);
    ComplexMatrix fourier{{s, s, s}, {s, s * w, s * w * w}, {s, s * w * w, s * w}};
    MeasurementSet alice({Povm::from_basis(ComplexMatrix::identity(3)), Povm::from_basis(fourier)});
    auto fam = post_measurement_states(state, alice);
    for (int a = 0; a < 3; a++) {
        for (int b = 0; b < 3; b++) {
            EXPECT_NEAR(overlap_modulus(fam.at(0, a).state, fam.at(1, b).state), s, 1e-12);
        }
    }
}

TEST(post_measurement_states, zero_weight_outcome_is_flagged) {
    std::vector<double> lam{1, 0};
    auto state = BipartitePureState::from_schmidt(lam);
    MeasurementSet z({Povm::from_basis(ComplexMatrix::identity(2))});
    auto fam = post_measurement_states(state, z);
    EXPECT_TRUE(fam.at(0, 0).realizable());
    EXPECT_FALSE(fam.at(0, 1).realizable());
    EXPECT_EQ(fam.realizable_outcomes(0), std::vector<int>{0});
}

TEST(post_measurement_states, rejects_rank_two_element) {
    std::vector<double> lam{0.5, 0.25, 0.25};
    auto state = BipartitePureState::from_schmidt(lam);
    ComplexMatrix p0(3, 3);
    p0(0, 0) = 1;
    ComplexMatrix p12(3, 3);
    p12(1, 1) = 1;
    p12(2, 2) = 1;
    MeasurementSet alice({Povm{{p0, p12}}});
    EXPECT_THROW(post_measurement_states(state, alice), UnsupportedError);
}

TEST(post_measurement_states, property_weights_match_alice_marginal) {
    std::mt19937_64 rng(31);
    for (std::size_t d = 2; d <= 5; d++) {
        auto lam = random_spectrum(d, rng);
        auto state = BipartitePureState::from_schmidt(lam, random_unitary(d, rng), random_unitary(d, rng));
        auto alice = random_bases(3, d, rng);
        auto bob = random_bases(2, d, rng);
        auto fam = post_measurement_states(state, alice);
        auto beh = born_behavior(state, alice, bob);
        for (int x = 0; x < 3; x++) {
            double total = 0;
            for (int a = 0; a < static_cast<int>(d); a++) {
                EXPECT_NEAR(fam.at(x, a).weight, beh.alice_marginal(a, x, 1), 1e-10);
                EXPECT_NEAR(norm(fam.at(x, a).state), 1, 1e-10);
                total += fam.at(x, a).weight;
            }
            EXPECT_NEAR(total, 1, 1e-9);
        }
    }
}

TEST(born_behavior, product_state_factorizes) {
    std::mt19937_64 rng(5);
    std::vector<double> lam{1, 0, 0};
    auto state = BipartitePureState::from_schmidt(lam);
    auto alice = random_bases(2, 3, rng);
    auto bob = random_bases(2, 3, rng);
    auto beh = born_behavior(state, alice, bob);
    for (int x = 0; x < 2; x++) {
        for (int y = 0; y < 2; y++) {
            for (int a = 0; a < 3; a++) {
                for (int b = 0; b < 3; b++) {
                    double pa = std::real(alice[x].elements[a](0, 0));
                    double pb = std::real(bob[y].elements[b](0, 0));
                    EXPECT_NEAR(beh.at(a, b, x, y), pa * pb, 1e-12);
                }
            }
        }
    }
}

TEST(born_behavior, bell_state_zz) {
    std::vector<double> lam{0.5, 0.5};
    auto state = BipartitePureState::from_schmidt(lam);
    MeasurementSet z({Povm::from_basis(ComplexMatrix::identity(2))});
    auto beh = born_behavior(state, z, z);
    EXPECT_NEAR(beh.at(0, 0, 0, 0), 0.5, 1e-15);
    EXPECT_NEAR(beh.at(1, 1, 0, 0), 0.5, 1e-15);
    EXPECT_NEAR(beh.at(0, 1, 0, 0), 0, 1e-15);
    EXPECT_NEAR(beh.at(1, 0, 0, 0), 0, 1e-15);
}

TEST(born_behavior, agrees_with_full_vector_expectation) {
    std::mt19937_64 rng(8);
    auto lam = random_spectrum(3, rng);
    auto state = BipartitePureState::from_schmidt(lam, random_unitary(3, rng), random_unitary(3, rng));
    auto alice = random_bases(2, 3, rng);
    auto bob = random_bases(2, 3, rng);
    auto beh = born_behavior(state, alice, bob);
    auto v = state.vector();
    for (int a = 0; a < 3; a++) {
        for (int b = 0; b < 3; b++) {
            double direct = expectation(kron(alice[1].elements[a], bob[0].elements[b]), v);
            EXPECT_NEAR(beh.at(a, b, 1, 0), direct, 1e-12);
        }
    }
}

TEST(born_behavior, rejects_dimension_mismatch) {
    std::vector<double> lam{0.5, 0.5};
    auto state = BipartitePureState::from_schmidt(lam);
    MeasurementSet z3({Povm::from_basis(ComplexMatrix::identity(3))});
    MeasurementSet z2({Povm::from_basis(ComplexMatrix::identity(2))});
    EXPECT_THROW(born_behavior(state, z3, z2), ValidationError);
}

TEST(born_behavior, property_normalized_and_nonsignaling) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 20; trial++) {
        std::size_t d = 2 + trial % 4;
        auto lam = random_spectrum(d, rng);
        auto state = BipartitePureState::from_schmidt(lam, random_unitary(d, rng), random_unitary(d, rng));
        auto beh = born_behavior(state, random_bases(3, d, rng), random_bases(2, d, rng));
        EXPECT_NO_THROW(validate_behavior(beh, 1e-9));
        EXPECT_LE(check_nonsignaling(beh).max_residual(), 1e-9);
    }
}

TEST(check_nonsignaling, perturbation_reported) {
    std::vector<double> lam{0.5, 0.5};
    auto state = BipartitePureState::from_schmidt(lam);
    MeasurementSet zx({Povm::from_basis(ComplexMatrix::identity(2)), Povm::from_basis(hadamard())});
    auto beh = born_behavior(state, zx, zx);
    beh.at(0, 0, 0, 0) += 0.1;
    auto report = check_nonsignaling(beh);
    EXPECT_NEAR(report.alice_residual, 0.1, 1e-12);
    EXPECT_NEAR(report.bob_residual, 0.1, 1e-12);
    EXPECT_FALSE(report.exact);
}

TEST(tensor_copies, single_copy_is_identity) {
    std::vector<double> lam{0.6, 0.4};
    auto state = BipartitePureState::from_schmidt(lam);
    auto one = tensor_copies(state, 1);
    EXPECT_EQ(one.coeffs(), state.coeffs());
}

TEST(tensor_copies, two_qubit_copies_match_expansion) {
    double p = 0.55;
    std::vector<double> lam{p, 1 - p};
    auto two = tensor_copies(BipartitePureState::from_schmidt(lam), 2);
    // (√p|00⟩+√q|11⟩)⊗(√p|00⟩+√q|11⟩) has terms p, √(pq), √(pq), q as amplitudes squared:
    std::vector<double> expect{p * p, p * (1 - p), p * (1 - p), (1 - p) * (1 - p)};
    ASSERT_EQ(two.dim(), 4);
    for (int i = 0; i < 4; i++) {
        EXPECT_NEAR(two.coeffs()[i], expect[i], 1e-15);
    }
}

TEST(tensor_copies, property_lambda_max_multiplicative_and_matches_schmidt) {
    std::mt19937_64 rng(4);
    for (int k = 1; k <= 4; k++) {
        auto lam = random_spectrum(2, rng);
        auto state = BipartitePureState::from_schmidt(lam, random_unitary(2, rng), random_unitary(2, rng));
        auto copies = tensor_copies(state, k);
        EXPECT_NEAR(copies.lambda_max(), std::pow(state.lambda_max(), k), 1e-12);

        // Build the explicit product vector with Alice's indices grouped first.
        std::size_t d = copies.dim();
        auto v1 = state.vector();
        ComplexVector v{1};
        std::size_t da = 1;
        for (int c = 0; c < k; c++) {
            ComplexVector next(v.size() * 4);
            for (std::size_t ia = 0; ia < da; ia++) {
                for (std::size_t ib = 0; ib < da; ib++) {
                    for (std::size_t ja = 0; ja < 2; ja++) {
                        for (std::size_t jb = 0; jb < 2; jb++) {
                            next[((ia * 2 + ja) * da * 2) + ib * 2 + jb] = v[ia * da + ib] * v1[ja * 2 + jb];
                        }
                    }
                }
            }
            v = next;
            da *= 2;
        }
        auto s = schmidt_decompose(v, d, d);
        for (std::size_t i = 0; i < d; i++) {
            EXPECT_NEAR(s.coeffs[i], copies.coeffs()[i], 1e-10);
        }
        auto back = copies.vector();
        double err = 0;
        for (std::size_t i = 0; i < v.size(); i++) {
            err = std::max(err, std::abs(back[i] - v[i]));
        }
        EXPECT_LT(err, 1e-10) << "k=" << k;
    }
}

TEST(tensor_copies, cap_exceeded_names_dimension) {
    std::vector<double> lam{0.5, 0.5};
    auto state = BipartitePureState::from_schmidt(lam);
    try {
        tensor_copies(state, 7, 64);
        FAIL();
    } catch (const ResourceError &e) {
        EXPECT_NE(std::string(e.what()).find("128"), std::string::npos) << e.what();
    }
}

TEST(bipartite_pure_state, from_vector_and_validation) {
    double h = 1 / std::sqrt(2.0);
    ComplexVector bell{h, 0, 0, h};
    auto s = BipartitePureState::from_vector(bell, 2);
    EXPECT_NEAR(s.lambda_max(), 0.5, 1e-14);
    std::vector<double> bad{0.7, 0.7};
    EXPECT_THROW(BipartitePureState::from_schmidt(bad), ValidationError);
    std::vector<double> neg{1.2, -0.2};
    EXPECT_THROW(BipartitePureState::from_schmidt(neg), ValidationError);
    std::vector<double> unsorted{0.2, 0.8};
    auto u = BipartitePureState::from_schmidt(unsorted);
    EXPECT_EQ(u.coeffs()[0], 0.8);
    EXPECT_NEAR(std::abs(u.basis_a()(1, 0)), 1, 0);
}

TEST(validate_povm, rejects_bad_sum_and_negative) {
    ComplexMatrix half{{0.5, 0}, {0, 0.5}};
    EXPECT_THROW(validate_povm(Povm{{half}}), ValidationError);
    ComplexMatrix neg{{1.5, 0}, {0, 1}};
    ComplexMatrix comp{{-0.5, 0}, {0, 0}};
    EXPECT_THROW(validate_povm(Povm{{neg, comp}}), ValidationError);
    EXPECT_NO_THROW(validate_povm(Povm::from_basis(hadamard())));
}

TEST(snap_behavior, dyadic_table_snaps_exactly) {
    std::vector<double> lam{0.5, 0.5};
    auto state = BipartitePureState::from_schmidt(lam);
    MeasurementSet zx({Povm::from_basis(ComplexMatrix::identity(2)), Povm::from_basis(hadamard())});
    auto beh = born_behavior(state, zx, zx);
    auto exact = snap_behavior(beh);
    ASSERT_TRUE(exact.has_value());
    EXPECT_EQ(exact->at(0, 0, 0, 1), make_rational(1, 4));
    EXPECT_EQ(check_nonsignaling(*exact).max_residual(), 0);
    EXPECT_TRUE(check_nonsignaling(*exact).exact);
}
