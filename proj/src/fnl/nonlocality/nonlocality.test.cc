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

#include <chrono>
#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "fnl/errors.h"
#include "fnl/nonlocality/local_content.h"
#include "fnl/nonlocality/reference.h"
#include "fnl/nonlocality/simplex.h"
#include "fnl/nonlocality/strategy.h"
#include "fnl/nonlocality/zero_pattern.h"

using namespace fnl;

namespace {

// Independent oracle: min pᵀy s.t. Σ_{x,y} y(α_x,β_y,x,y) ≥ 1 for all strategies, y ≥ 0,
// by a two-phase dense simplex (largest-coefficient rule with Bland fallback) on the
// equality form Aᵀy − s + r = 1 with artificials r.
double dual_lp_oracle(const RealBehavior &p) {
    const auto &d = p.dims();
    std::size_t cells = d.cell_count();
    std::uint64_t ns = strategy_count(d, 1'000'000);
    std::size_t rows = ns;
    std::size_t nvar = cells + rows + rows;  // y, surplus s, artificial r
    std::vector<std::vector<double>> t(rows + 1, std::vector<double>(nvar + 1, 0));
    for (std::uint64_t k = 0; k < ns; k++) {
        auto s = decode_strategy(d, k);
        for (int x = 0; x < d.n; x++) {
            for (int y = 0; y < d.np; y++) {
                t[k][p.index(s.alpha[x], s.beta[y], x, y)] += 1;
            }
        }
        t[k][cells + k] = -1;
        t[k][cells + rows + k] = 1;
        t[k][nvar] = 1;
    }
    std::vector<std::size_t> basis(rows);
    for (std::size_t k = 0; k < rows; k++) {
        basis[k] = cells + rows + k;
    }
    auto run = [&](std::vector<double> cost, std::size_t allowed) {
        // Minimize cost·v; objective row holds reduced costs.
        std::vector<double> obj(nvar + 1, 0);
        for (std::size_t j = 0; j < nvar; j++) {
            obj[j] = cost[j];
        }
        for (std::size_t i = 0; i < rows; i++) {
            double cb = cost[basis[i]];
            for (std::size_t j = 0; j <= nvar; j++) {
                obj[j] -= cb * t[i][j];
            }
        }
        for (int iter = 0; iter < 100000; iter++) {
            std::size_t enter = nvar;
            double most = -1e-11;
            for (std::size_t j = 0; j < allowed; j++) {
                if (obj[j] < most) {
                    most = obj[j];
                    enter = j;
                }
            }
            if (enter == nvar) {
                return -obj[nvar];
            }
            std::size_t leave = rows;
            double best = INFINITY;
            for (std::size_t i = 0; i < rows; i++) {
                if (t[i][enter] > 1e-11) {
                    double r = t[i][nvar] / t[i][enter];
                    if (r < best - 1e-13 || (std::abs(r - best) <= 1e-13 && basis[i] < basis[leave])) {
                        best = r;
                        leave = i;
                    }
                }
            }
            double piv = t[leave][enter];
            for (auto &v : t[leave]) {
                v /= piv;
            }
            for (std::size_t i = 0; i < rows; i++) {
                if (i != leave && t[i][enter] != 0) {
                    double f = t[i][enter];
                    for (std::size_t j = 0; j <= nvar; j++) {
                        t[i][j] -= f * t[leave][j];
                    }
                }
            }
            double f = obj[enter];
            for (std::size_t j = 0; j <= nvar; j++) {
                obj[j] -= f * t[leave][j];
            }
            basis[leave] = enter;
        }
        ADD_FAILURE() << "oracle did not converge";
        return std::nan("");
    };
    std::vector<double> phase1(nvar, 0);
    for (std::size_t k = 0; k < rows; k++) {
        phase1[cells + rows + k] = 1;
    }
    double infeas = run(phase1, nvar);
    EXPECT_NEAR(infeas, 0, 1e-9);
    std::vector<double> phase2(nvar, 0);
    for (std::size_t k = 0; k < cells; k++) {
        phase2[k] = p.values()[k];
    }
    return run(phase2, cells + rows);
}

RationalBehavior mix(const std::vector<std::pair<BigRational, RationalBehavior>> &parts) {
    RationalBehavior out(parts[0].second.dims());
    for (const auto &[w, b] : parts) {
        for (std::size_t k = 0; k < b.values().size(); k++) {
            auto c = b.cell_at(k);
            out.at(c.a, c.b, c.x, c.y) += w * b.values()[k];
        }
    }
    return out;
}

// PR box with outputs relabeled: a ↦ a ⊕ s_x, b ↦ b ⊕ t_y (and optionally inputs swapped).
RationalBehavior relabeled_pr(int code) {
    auto pr = pr_box();
    RationalBehavior out(pr.dims());
    for (int x = 0; x < 2; x++) {
        for (int y = 0; y < 2; y++) {
            for (int a = 0; a < 2; a++) {
                for (int b = 0; b < 2; b++) {
                    int a2 = a ^ ((code >> (x)) & 1);
                    int b2 = b ^ ((code >> (2 + y)) & 1);
                    out.at(a2, b2, x, y) = pr.at(a, b, x, y);
                }
            }
        }
    }
    return out;
}

RealBehavior to_real_table(const RationalBehavior &b) { return to_real(b); }

}  // namespace

TEST(enumerate_deterministic, counts_and_order) {
    EXPECT_EQ(strategy_count({2, 2, 2, 2}, 10'000'000), 16u);
    EXPECT_EQ(strategy_count({1, 1, 5, 5}, 10'000'000), 25u);
    EXPECT_EQ(strategy_count({3, 3, 4, 4}, 10'000'000), 4096u);
    ScenarioDims d{2, 3, 3, 2};
    std::uint64_t expected = 0;
    DeterministicStrategy prev;
    for_each_strategy(d, 1000, [&](const DeterministicStrategy &s, std::uint64_t index) {
        EXPECT_EQ(index, expected++);
        EXPECT_EQ(encode_strategy(d, s), index);
        EXPECT_EQ(decode_strategy(d, index), s);
        if (index > 0) {
            auto key = [](const DeterministicStrategy &t) {
                std::vector<int> k = t.alpha;
                k.insert(k.end(), t.beta.begin(), t.beta.end());
                return k;
            };
            EXPECT_LT(key(prev), key(s));
        }
        prev = s;
    });
    EXPECT_EQ(expected, 72u);
}

TEST(enumerate_deterministic, cap_exceeded_reports_count) {
    try {
        strategy_count({10, 10, 4, 4}, 10'000'000);
        FAIL();
    } catch (const ResourceError &e) {
        EXPECT_NE(std::string(e.what()).find("1099511627776"), std::string::npos) << e.what();
    }
    EXPECT_THROW(strategy_count({40, 40, 4, 4}, 10'000'000), ResourceError);
}

TEST(pr_box, table_values) {
    auto pr = pr_box();
    EXPECT_EQ(pr.at(0, 0, 0, 0), make_rational(1, 2));
    EXPECT_EQ(pr.at(0, 1, 0, 1), 0);
    EXPECT_EQ(pr.at(0, 1, 1, 1), make_rational(1, 2));
    EXPECT_EQ(pr.at(0, 0, 1, 1), 0);
    auto ns = check_nonsignaling(pr);
    EXPECT_EQ(ns.max_residual(), 0);
    EXPECT_TRUE(ns.exact);
}

TEST(local_content_lp, pr_box_is_fully_nonlocal) {
    auto r = local_content_lp(pr_box());
    EXPECT_EQ(r.lc, 0);
    EXPECT_TRUE(r.certified);
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.strategies_total, 16u);
    EXPECT_EQ(r.strategies_kept, 0u);
    ASSERT_TRUE(r.residual.has_value());
    EXPECT_EQ(*r.residual, pr_box());
}

TEST(local_content_lp, deterministic_behavior_has_unit_weight_on_itself) {
    ScenarioDims d{3, 2, 2, 3};
    DeterministicStrategy s{{1, 0, 1}, {2, 0}};
    auto r = local_content_lp(deterministic_behavior(d, s));
    EXPECT_EQ(r.lc, 1);
    ASSERT_EQ(r.weights.size(), 1u);
    EXPECT_EQ(r.weights[0].first, s);
    EXPECT_EQ(r.weights[0].second, 1);
    EXPECT_FALSE(r.residual.has_value());
    EXPECT_TRUE(r.certified);
}

TEST(local_content_lp, white_noise_is_local) {
    ScenarioDims d{2, 2, 3, 3};
    RationalBehavior noise(d, std::vector<BigRational>(d.cell_count(), make_rational(1, 9)));
    auto r = local_content_lp(noise);
    EXPECT_EQ(r.lc, 1);
    EXPECT_TRUE(r.certified);
    auto z = zero_pattern_check(noise);
    EXPECT_TRUE(z.zeros.empty());
    EXPECT_FALSE(z.fully_nonlocal);
    EXPECT_EQ(z.unwitnessed, 81u);
    for_each_strategy(d, 1000, [&](const DeterministicStrategy &s, std::uint64_t) {
        EXPECT_EQ(lower_bound_from_strategy(noise, s), make_rational(1, 9));
    });
}

TEST(local_content_lp, quarter_mixture_with_pr_matches_oracle) {
    // D outputs 0 everywhere and hits exactly one PR zero (x=y=1, a=b=0).
    DeterministicStrategy zero_strategy{{0, 0}, {0, 0}};
    auto q = make_rational(1, 4);
    auto p = mix({{q, deterministic_behavior({2, 2, 2, 2}, zero_strategy)}, {1 - q, pr_box()}});
    auto r = local_content_lp(p);
    EXPECT_EQ(r.lc, q);
    EXPECT_TRUE(r.certified);
    EXPECT_NEAR(dual_lp_oracle(to_real_table(p)), 0.25, 1e-9);
    // lc·p_L + (1−lc)·p_NL reproduces p exactly.
    ASSERT_TRUE(r.residual.has_value());
    RationalBehavior back(p.dims());
    for (const auto &[s, w] : r.weights) {
        for (int x = 0; x < 2; x++) {
            for (int y = 0; y < 2; y++) {
                back.at(s.alpha[x], s.beta[y], x, y) += w;
            }
        }
    }
    for (std::size_t k = 0; k < p.values().size(); k++) {
        auto c = p.cell_at(k);
        back.at(c.a, c.b, c.x, c.y) += (1 - r.lc) * r.residual->values()[k];
    }
    EXPECT_EQ(back, p);
    EXPECT_EQ(lower_bound_from_strategy(p, zero_strategy), q);
}

TEST(local_content_lp, property_matches_oracle_on_random_mixtures) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 25; trial++) {
        std::vector<std::pair<BigRational, RationalBehavior>> parts;
        int k = 1 + static_cast<int>(rng() % 4);
        std::vector<long> raw;
        long total = 0;
        for (int i = 0; i < k; i++) {
            raw.push_back(1 + static_cast<long>(rng() % 7));
            total += raw.back();
        }
        for (int i = 0; i < k; i++) {
            RationalBehavior part = (rng() % 2) ? relabeled_pr(static_cast<int>(rng() % 16))
                                                : deterministic_behavior({2, 2, 2, 2}, decode_strategy({2, 2, 2, 2}, rng() % 16));
            parts.emplace_back(make_rational(raw[i], total), part);
        }
        auto p = mix(parts);
        auto r = local_content_lp(p);
        EXPECT_TRUE(r.certified);
        EXPECT_NEAR(r.lc.get_d(), dual_lp_oracle(to_real_table(p)), 1e-9);
        auto fr = local_content_lp(to_real_table(p));
        EXPECT_TRUE(fr.certified);
        EXPECT_NEAR(fr.lc, r.lc.get_d(), 1e-9);
        EXPECT_LE(std::abs(fr.gap), 1e-8);
        // Zero-pattern equivalence and the strategy lower bound.
        EXPECT_EQ(zero_pattern_check(p).fully_nonlocal, r.lc == 0);
        for_each_strategy(p.dims(), 100, [&](const DeterministicStrategy &s, std::uint64_t) {
            EXPECT_LE(lower_bound_from_strategy(p, s), r.lc);
        });
    }
}

TEST(local_content_lp, rejects_signaling_table) {
    auto pr = to_real(pr_box());
    // Moves weight between Bob outcomes for (x,y) = (0,0) only, so Bob's marginal depends on x.
    pr.at(1, 1, 0, 0) -= 0.1;
    pr.at(1, 0, 0, 0) += 0.1;
    try {
        local_content_lp(pr);
        FAIL();
    } catch (const ValidationError &e) {
        EXPECT_NE(std::string(e.what()).find("signaling"), std::string::npos) << e.what();
    }
}

TEST(zero_pattern_check, pr_box_every_strategy_witnessed) {
    auto z = zero_pattern_check(pr_box());
    EXPECT_TRUE(z.fully_nonlocal);
    EXPECT_EQ(z.zeros.size(), 8u);
    ASSERT_TRUE(z.witnesses_enumerated);
    ASSERT_EQ(z.witness.size(), 16u);
    for (auto w : z.witness) {
        EXPECT_GE(w, 0);
        EXPECT_EQ(pr_box().values()[w], 0);
    }
}

TEST(zero_pattern_check, factorized_path_agrees_with_enumeration) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0, 1);
    for (int trial = 0; trial < 40; trial++) {
        ScenarioDims d{2 + trial % 2, 2 + (trial / 2) % 2, 2, 3};
        // Random support pattern; only the zero set matters here.
        std::vector<double> vals(d.cell_count());
        for (auto &v : vals) {
            v = u(rng) < 0.35 ? 0.0 : 0.5;
        }
        RealBehavior b(d, vals);
        auto full = zero_pattern_check(b, 1e-9, 10'000, 10'000);
        auto fast = zero_pattern_check(b, 1e-9, 10'000, 0);
        EXPECT_TRUE(full.witnesses_enumerated);
        EXPECT_FALSE(fast.witnesses_enumerated);
        EXPECT_EQ(full.fully_nonlocal, fast.fully_nonlocal);
        EXPECT_EQ(full.unwitnessed, fast.unwitnessed);
        auto f = bell_functional_from_zeros(b, 1e-9, 10'000);
        EXPECT_EQ(f.w_local, local_bound_by_enumeration(f, 10'000));
        EXPECT_EQ(full.fully_nonlocal, f.w_local <= -1);
    }
}

TEST(bell_functional_from_zeros, pr_box) {
    auto f = bell_functional_from_zeros(pr_box());
    EXPECT_EQ(f.w_local, -1);
    EXPECT_EQ(local_bound_by_enumeration(f), -1);
    EXPECT_EQ(f.w_nonsignaling, 0);
    EXPECT_EQ(f.evaluate(to_real(pr_box())), 0);
    // Every vertex of the two-setting binary non-signaling polytope scores ≤ 0.
    for (int code = 0; code < 16; code++) {
        EXPECT_LE(f.evaluate(to_real(relabeled_pr(code))), 0);
        EXPECT_LE(f.evaluate(to_real(deterministic_behavior({2, 2, 2, 2}, decode_strategy({2, 2, 2, 2}, code)))), 0);
    }
}

TEST(bell_functional_from_zeros, no_zeros_gives_zero_functional) {
    ScenarioDims d{2, 2, 2, 2};
    RationalBehavior noise(d, std::vector<BigRational>(16, make_rational(1, 4)));
    auto f = bell_functional_from_zeros(noise);
    for (double c : f.coeffs) {
        EXPECT_EQ(c, 0);
    }
    EXPECT_EQ(f.w_local, 0);
}

TEST(peres_mermin, wins_with_certainty_and_has_table_zeros) {
    auto pm = peres_mermin_behavior();
    EXPECT_EQ(magic_square_win_probability(pm.behavior), 1);
    EXPECT_EQ(check_nonsignaling(pm.behavior).max_residual(), 0);
    validate_behavior(pm.behavior);
    // x=1, y=2 (0-indexed 0, 1), a=+++: b=--- and b=-++ vanish.
    EXPECT_EQ(pm.behavior.at(0, 0, 0, 1), 0);
    EXPECT_EQ(pm.behavior.at(0, 1, 0, 1), 0);
    EXPECT_GT(pm.behavior.at(0, 2, 0, 1), 0);
    EXPECT_GT(pm.behavior.at(0, 3, 0, 1), 0);
    // The other marked cells: (x=2, a=-+-, b=+-+) and (x=3, a=+++, b=++-) at y=2.
    EXPECT_EQ(pm.behavior.at(2, 2, 1, 1), 0);
    EXPECT_EQ(pm.behavior.at(0, 3, 2, 1), 0);
    for (std::size_t k = 0; k < pm.born.values().size(); k++) {
        EXPECT_NEAR(pm.born.values()[k], pm.behavior.values()[k].get_d(), 1e-12);
    }
}

TEST(peres_mermin, local_content_zero) {
    auto pm = peres_mermin_behavior();
    auto start = std::chrono::steady_clock::now();
    auto r = local_content_lp(pm.behavior);
    EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 60);
    EXPECT_EQ(r.lc, 0);
    EXPECT_TRUE(r.certified);
    EXPECT_EQ(r.strategies_total, 4096u);
    EXPECT_TRUE(zero_pattern_check(pm.behavior).fully_nonlocal);
    auto f = bell_functional_from_zeros(pm.behavior);
    EXPECT_LE(f.w_local, -1);
    EXPECT_EQ(f.w_local, local_bound_by_enumeration(f));
}

TEST(solve_packing_lp, small_exact_problem) {
    // max x0 + x1 s.t. x0 + 2 x1 ≤ 4, 3 x0 + x1 ≤ 6 → x = (8/5, 6/5), value 14/5.
    std::vector<BigRational> a{1, 2, 3, 1};
    std::vector<BigRational> b{4, 6};
    std::vector<BigRational> c{1, 1};
    auto r = solve_packing_lp(a, 2, 2, b, c);
    EXPECT_EQ(r.objective, make_rational(14, 5));
    EXPECT_EQ(r.x[0], make_rational(8, 5));
    EXPECT_EQ(r.x[1], make_rational(6, 5));
    // Dual y = (2/5, 1/5): bᵀy = 14/5.
    EXPECT_EQ(r.y[0], make_rational(2, 5));
    EXPECT_EQ(r.y[1], make_rational(1, 5));
}

TEST(solve_packing_lp, tableau_cap) {
    std::vector<double> a(4, 1.0);
    SimplexOptions opts;
    opts.tableau_cap = 5;
    EXPECT_THROW(solve_packing_lp(a, 2, 2, std::vector<double>{1, 1}, std::vector<double>{1, 1}, opts), ResourceError);
}
