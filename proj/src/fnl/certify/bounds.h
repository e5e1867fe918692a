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

#ifndef FNL_CERTIFY_BOUNDS_H
#define FNL_CERTIFY_BOUNDS_H

#include <span>
#include <string>
#include <vector>

namespace fnl {

/// Throws ValidationError unless λ is nonnegative and sums to 1 within tol.
/// Returns a descending copy.
std::vector<double> validated_spectrum(std::span<const double> lambda, double tol = 1e-10);

/// f(μ) = Σ_j |λ_j − μ| + μ√d
double overlap_f(std::span<const double> lambda, double mu);

struct OverlapBounds {
    double sqrt_lambda_max = 0;  ///< bound for pairs involving the Schmidt-basis measurement
    double lmin_bound = 0;       ///< 1 − (d − √d) λ_min
    double fmin = 0;             ///< min_j f(λ_j), attained at the sign-change index
    int k = 0;                   ///< ⌈(d − √d)/2⌉, 1-based position in the ascending spectrum
};

OverlapBounds overlap_bounds(std::span<const double> lambda);

struct ConditionCheck {
    double lhs = 0;
    double rhs = 0;
    bool pass = false;
};

/// Sufficient conditions for full nonlocality with n MUBs in dimension d.
struct BoundReport {
    std::vector<double> lambda;  ///< descending
    int n = 0;
    int d = 0;
    OverlapBounds overlaps;
    bool applicable = false;     ///< false for n < 3
    std::string note;
    ConditionCheck quadratic;    ///< (2/n)λ_max + ((n−2)/n)(1−(d−√d)λ_min)² ≤ (n−2)/(2n−2)
    ConditionCheck max_form;     ///< max(√λ_max, 1−(d−√d)λ_min) ≤ √((n−2)/(2n−2))
    ConditionCheck refined;      ///< quadratic with min_j f(λ_j) in place of 1−(d−√d)λ_min
};

BoundReport mub_condition(std::span<const double> lambda, int n, double slack = 1e-12);

/// (22 − √259)/18
double qutrit_lambda_min_threshold();

/// (22 − √259)/18 ≤ λ_min ≤ 1/3 (with slack on both comparisons).
bool qutrit_condition(std::span<const double> lambda, double slack = 1e-12);

struct ActivationResult {
    double c = 0;          ///< max(√λ_max, 1 − (d − √d) λ_min)
    double threshold = 0;  ///< √((n−2)/(2n−2))
    int k = 0;             ///< smallest k with c^k ≤ threshold
};

/// Throws ValidationError for product states (λ_max = 1) and n < 3.
ActivationResult activation_copies(std::span<const double> lambda, int n, double slack = 1e-12);

enum class LcBoundMode { rank1, projective, povm };
std::string to_string(LcBoundMode m);
LcBoundMode parse_lc_bound_mode(const std::string &s);

/// Lower bound on the local content of the state's behaviors, max(0, amplitude bound)².
/// rank1 uses (m_a, m_b); projective and povm use the spectrum length as d.
double lc_lower_bound(std::span<const double> lambda, LcBoundMode mode, int m_a = 0, int m_b = 0);

}  // namespace fnl

#endif
