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

#include "fnl/certify/certificate.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "fnl/certify/bounds.h"
#include "fnl/errors.h"
#include "fnl/nonlocality/local_content.h"
#include "fnl/nonlocality/zero_pattern.h"

using namespace fnl;

namespace {

BipartitePureState schmidt(std::vector<double> lambda) { return BipartitePureState::from_schmidt(lambda); }

std::vector<double> two_copy(double p) { return {p * p, p * (1 - p), p * (1 - p), (1 - p) * (1 - p)}; }

CertifyOptions frobenius_only() {
    CertifyOptions o;
    o.method = CertifyMethod::frobenius;
    return o;
}

ComplexMatrix random_unitary(std::mt19937_64 &rng, int d) {
    std::normal_distribution<double> g;
    std::vector<ComplexVector> cols;
    for (int j = 0; j < d; j++) {
        ComplexVector v(d);
        for (auto &z : v) {
            z = Complex(g(rng), g(rng));
        }
        for (const auto &c : cols) {
            Complex ip = inner(c, v);
            for (int i = 0; i < d; i++) {
                v[i] -= ip * c[i];
            }
        }
        cols.push_back(normalized(v));
    }
    return ComplexMatrix::from_columns(cols);
}

}  // namespace

TEST(certify_full_nonlocality, ququart_maximally_entangled) {
    auto cert = certify_full_nonlocality(schmidt({0.25, 0.25, 0.25, 0.25}), standard_mubs(4), frobenius_only());
    EXPECT_EQ(cert.verdict, Verdict::certified);
    EXPECT_EQ(cert.evidence.size(), 1024u);
    EXPECT_EQ(cert.frobenius_passed, 1024u);
    EXPECT_TRUE(cert.failures.empty());
    EXPECT_TRUE(cert.excluded_outcomes.empty());
    EXPECT_EQ(cert.bob_settings, 1024);
}

TEST(certify_full_nonlocality, ququart_region) {
    double lmin = 0.5 - std::sqrt(3.0 / 32);
    double mid = (1 - 0.375 - lmin) / 2;
    for (auto lambda : {std::vector<double>{0.37, 0.22, 0.21, 0.20}, std::vector<double>{0.375, mid, mid, lmin}}) {
        auto cert = certify_full_nonlocality(schmidt(lambda), standard_mubs(4), frobenius_only());
        EXPECT_EQ(cert.verdict, Verdict::certified) << lambda[0];
        EXPECT_EQ(cert.frobenius_passed, 1024u);
    }
}

TEST(certify_full_nonlocality, single_qubit_copy_not_certified_by_frobenius) {
    auto cert = certify_full_nonlocality(schmidt({0.6, 0.4}), standard_mubs(2), frobenius_only());
    EXPECT_EQ(cert.verdict, Verdict::not_certified);
    EXPECT_FALSE(cert.failures.empty());
    for (const auto &[i, reason] : cert.failures) {
        EXPECT_EQ(cert.evidence[i].status, AlphaStatus::inconclusive);
        EXPECT_NE(reason.find("inconclusive"), std::string::npos);
    }
}

TEST(certify_full_nonlocality, two_copy_qubit_window) {
    auto base = BipartitePureState::from_schmidt(std::vector<double>{0.55, 0.45});
    auto two = tensor_copies(base, 2);
    for (std::size_t i = 0; i < 4; i++) {
        EXPECT_NEAR(two.coeffs()[i], two_copy(0.55)[i == 2 ? 1 : i], 1e-12);
    }
    auto cert = certify_full_nonlocality(two, standard_mubs(4), frobenius_only());
    EXPECT_EQ(cert.verdict, Verdict::certified);
}

TEST(certify_full_nonlocality, sdp_settles_what_frobenius_cannot) {
    // For the maximally entangled qutrit and 4 MUBs, some α-sets fail the Frobenius test.
    auto state = schmidt({1.0 / 3, 1.0 / 3, 1.0 / 3});
    auto fam = standard_mubs(3);
    auto frob = certify_full_nonlocality(state, fam, frobenius_only());
    CertifyOptions opts;
    opts.method = CertifyMethod::automatic;
    auto both = certify_full_nonlocality(state, fam, opts);
    EXPECT_EQ(both.frobenius_passed, frob.frobenius_passed);
    EXPECT_EQ(both.frobenius_passed + both.sdp_passed + both.failures.size(), both.evidence.size());
    for (const auto &ev : both.evidence) {
        if (ev.method == "sdp") {
            EXPECT_FALSE(ev.frobenius_pass);
            ASSERT_TRUE(ev.sdp_primal.has_value());
            EXPECT_LE(*ev.sdp_dual, *ev.sdp_primal + 1e-9);
        }
    }
}

TEST(certify_full_nonlocality, product_state_has_unrealizable_outcomes) {
    auto cert = certify_full_nonlocality(schmidt({1.0, 0.0}), standard_mubs(2), frobenius_only());
    ASSERT_EQ(cert.excluded_outcomes.size(), 1u);
    EXPECT_EQ(cert.excluded_outcomes[0], std::make_pair(0, 1));
    EXPECT_EQ(cert.evidence.size(), 4u);
    EXPECT_NE(cert.verdict, Verdict::certified);
}

TEST(certify_full_nonlocality, not_antidistinguishable_sets_reported) {
    CertifyOptions opts;
    opts.method = CertifyMethod::sdp;
    auto cert = certify_full_nonlocality(schmidt({0.9, 0.1}), standard_mubs(2), opts);
    EXPECT_EQ(cert.verdict, Verdict::not_certified);
    bool saw_negative = false;
    for (const auto &ev : cert.evidence) {
        saw_negative |= ev.status == AlphaStatus::not_antidistinguishable;
    }
    EXPECT_TRUE(saw_negative);
}

TEST(certify_full_nonlocality, result_independent_of_jobs) {
    auto state = schmidt({0.36, 0.23, 0.21, 0.20});
    CertifyOptions one;
    one.jobs = 1;
    CertifyOptions four = one;
    four.jobs = 4;
    auto a = certify_full_nonlocality(state, standard_mubs(4), one);
    auto b = certify_full_nonlocality(state, standard_mubs(4), four);
    ASSERT_EQ(a.evidence.size(), b.evidence.size());
    for (std::size_t i = 0; i < a.evidence.size(); i++) {
        EXPECT_EQ(a.evidence[i].alpha, b.evidence[i].alpha);
        EXPECT_EQ(a.evidence[i].gram_frobenius_sq, b.evidence[i].gram_frobenius_sq);
        EXPECT_EQ(a.evidence[i].bob_setting, b.evidence[i].bob_setting);
        EXPECT_EQ(a.evidence[i].status, b.evidence[i].status);
    }
    EXPECT_EQ(a.verdict, b.verdict);
}

TEST(certify_full_nonlocality, extracted_measurements_produce_fully_nonlocal_behavior) {
    auto state = schmidt({0.5, 0.5});
    auto two = tensor_copies(state, 2);
    auto fam = standard_mubs(4);
    CertifyOptions opts;
    opts.extract_measurements = true;
    opts.method = CertifyMethod::automatic;
    auto cert = certify_full_nonlocality(two, fam, opts);
    ASSERT_EQ(cert.verdict, Verdict::certified);
    EXPECT_LE(cert.bob_settings, 1024);
    EXPECT_EQ(static_cast<int>(cert.bob_measurements.size()), cert.bob_settings);

    std::vector<Povm> alice_povms;
    for (const auto &u : fam.bases) {
        alice_povms.push_back(Povm::from_basis(two.basis_a() * u));
    }
    auto behavior = born_behavior(two, MeasurementSet(alice_povms), MeasurementSet(cert.bob_measurements));
    for (const auto &ev : cert.evidence) {
        for (const auto &c : ev.zero_cells) {
            EXPECT_LE(behavior.at(c.a, c.b, c.x, c.y), 1e-6);
        }
    }
    auto zp = zero_pattern_check(behavior, 1e-6, 10'000'000);
    EXPECT_TRUE(zp.strategy_count_saturated);
    EXPECT_TRUE(zp.fully_nonlocal);
}

TEST(certify_full_nonlocality, validation) {
    EXPECT_THROW(certify_full_nonlocality(schmidt({0.5, 0.5}), standard_mubs(3)), ValidationError);
    CertifyOptions tiny;
    tiny.cap = 100;
    EXPECT_THROW(certify_full_nonlocality(schmidt({0.25, 0.25, 0.25, 0.25}), standard_mubs(4), tiny), ResourceError);
    EXPECT_EQ(parse_certify_method("auto"), CertifyMethod::automatic);
    EXPECT_THROW(parse_certify_method("magic"), ValidationError);
}

TEST(certify_full_nonlocality, quadratic_condition_implies_frobenius_certificate) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-1, 1);
    int checked = 0;
    for (int d : {4, 5}) {
        auto fam = standard_mubs(d);
        for (int t = 0; t < 400 && checked < 6 + 6 * (d == 5); t++) {
            std::vector<double> lambda(d);
            double s = 0;
            for (auto &l : lambda) {
                l = 1.0 / d + 0.06 * u(rng) / d;
                s += l;
            }
            for (auto &l : lambda) {
                l /= s;
            }
            if (!mub_condition(lambda, static_cast<int>(fam.count())).quadratic.pass) {
                continue;
            }
            checked++;
            auto cert = certify_full_nonlocality(schmidt(lambda), fam, frobenius_only());
            EXPECT_EQ(cert.verdict, Verdict::certified);
        }
    }
    EXPECT_GE(checked, 6);
    auto q = certify_full_nonlocality(schmidt({1.0 / 3, 1.0 / 3, 1.0 / 3}), standard_mubs(3), frobenius_only());
    EXPECT_TRUE(mub_condition(std::vector<double>(3, 1.0 / 3), 4).quadratic.pass);
    EXPECT_EQ(q.verdict, Verdict::certified);
}

TEST(certify_full_nonlocality, schmidt_alignment_makes_local_bases_irrelevant) {
    std::mt19937_64 rng(2);
    std::vector<double> lambda{0.37, 0.22, 0.21, 0.20};
    auto rotated = BipartitePureState::from_schmidt(lambda, random_unitary(rng, 4), random_unitary(rng, 4));
    auto a = certify_full_nonlocality(schmidt(lambda), standard_mubs(4), frobenius_only());
    auto b = certify_full_nonlocality(rotated, standard_mubs(4), frobenius_only());
    ASSERT_EQ(a.evidence.size(), b.evidence.size());
    for (std::size_t i = 0; i < a.evidence.size(); i++) {
        EXPECT_NEAR(a.evidence[i].gram_frobenius_sq, b.evidence[i].gram_frobenius_sq, 1e-9);
    }
}

TEST(qutrit_certify, region) {
    for (auto lambda : {std::vector<double>{1.0 / 3, 1.0 / 3, 1.0 / 3}, std::vector<double>{0.34, 0.33, 0.33}}) {
        ASSERT_TRUE(qutrit_condition(lambda));
        auto cert = qutrit_certify(schmidt(lambda), frobenius_only());
        EXPECT_EQ(cert.evidence.size(), 243u);
        EXPECT_EQ(cert.verdict, Verdict::certified);
        EXPECT_EQ(cert.frobenius_passed, 243u);
        for (const auto &ev : cert.evidence) {
            EXPECT_LE(ev.gram_frobenius_sq, 12.5 + 1e-12);
        }
    }
    EXPECT_THROW(qutrit_certify(schmidt({0.5, 0.5})), ValidationError);
}

TEST(check_overlap_bounds, random_spectra_respect_bounds) {
    std::mt19937_64 rng(41);
    std::gamma_distribution<double> g(0.8, 1.0);
    for (int t = 0; t < 40; t++) {
        int d = std::vector<int>{3, 4, 5, 7}[t % 4];
        std::vector<double> lambda(d);
        double s = 0;
        for (auto &l : lambda) {
            l = g(rng) + 1e-3;
            s += l;
        }
        for (auto &l : lambda) {
            l /= s;
        }
        auto c = check_overlap_bounds(schmidt(lambda), standard_mubs(d));
        EXPECT_LE(c.worst_excess_first, 1e-9);
        EXPECT_LE(c.worst_excess_other, 1e-9);
    }
}

TEST(check_overlap_bounds, consistency_with_local_content_bound) {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int t = 0; t < 20; t++) {
        std::vector<double> lambda(4);
        double s = 0;
        for (auto &l : lambda) {
            l = 0.25 + 0.04 * u(rng);
            s += l;
        }
        for (auto &l : lambda) {
            l /= s;
        }
        auto cert = certify_full_nonlocality(schmidt(lambda), standard_mubs(4), frobenius_only());
        if (cert.verdict == Verdict::certified) {
            EXPECT_EQ(lc_lower_bound(lambda, LcBoundMode::povm), 0);
        }
    }
}
