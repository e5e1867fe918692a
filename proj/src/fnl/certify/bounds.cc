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

#include "fnl/certify/bounds.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "fnl/errors.h"

namespace fnl {

std::vector<double> validated_spectrum(std::span<const double> lambda, double tol) {
    if (lambda.empty()) {
        throw ValidationError("spectrum is empty");
    }
    double total = 0;
    for (std::size_t i = 0; i < lambda.size(); i++) {
        if (!std::isfinite(lambda[i]) || lambda[i] < 0) {
            std::ostringstream msg;
            msg << "spectrum entry " << i << " is " << lambda[i] << "; must be finite and nonnegative";
            throw ValidationError(msg.str());
        }
        total += lambda[i];
    }
    if (std::abs(total - 1) > tol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "spectrum sums to " << total << ", not 1";
        throw ValidationError(msg.str());
    }
    std::vector<double> out(lambda.begin(), lambda.end());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

double overlap_f(std::span<const double> lambda, double mu) {
    double s = 0;
    for (double l : lambda) {
        s += std::abs(l - mu);
    }
    return s + mu * std::sqrt(static_cast<double>(lambda.size()));
}

OverlapBounds overlap_bounds(std::span<const double> lambda) {
    auto desc = validated_spectrum(lambda);
    std::vector<double> asc(desc.rbegin(), desc.rend());
    double d = static_cast<double>(asc.size());
    double sd = std::sqrt(d);
    OverlapBounds b;
    b.sqrt_lambda_max = std::sqrt(asc.back());
    b.lmin_bound = 1 - (d - sd) * asc.front();
    b.k = std::clamp(static_cast<int>(std::ceil((d - sd) / 2 - 1e-12)), 1, static_cast<int>(asc.size()));
    // Closed form at the k-th smallest coefficient: (2k − d + √d)λ_k + 1 − 2 Σ_{j≤k} λ_j.
    double lk = asc[b.k - 1];
    double partial = 0;
    for (int j = 0; j < b.k; j++) {
        partial += asc[j];
    }
    b.fmin = (2 * b.k - d + sd) * lk + 1 - 2 * partial;
    return b;
}

namespace {

ConditionCheck check(double lhs, double rhs, double slack) {
    return ConditionCheck{lhs, rhs, lhs <= rhs + slack};
}

}  // namespace

BoundReport mub_condition(std::span<const double> lambda, int n, double slack) {
    BoundReport r;
    r.lambda = validated_spectrum(lambda);
    r.n = n;
    r.d = static_cast<int>(r.lambda.size());
    r.overlaps = overlap_bounds(r.lambda);
    if (n < 3) {
        r.applicable = false;
        r.note = "conditions need n >= 3 measurements; the (n-2) factors vanish or turn negative below that";
        return r;
    }
    r.applicable = true;
    double lmax = r.lambda.front();
    double nn = n;
    double rhs = (nn - 2) / (2 * nn - 2);
    r.quadratic = check(2 / nn * lmax + (nn - 2) / nn * r.overlaps.lmin_bound * r.overlaps.lmin_bound, rhs, slack);
    r.refined = check(2 / nn * lmax + (nn - 2) / nn * r.overlaps.fmin * r.overlaps.fmin, rhs, slack);
    r.max_form = check(std::max(r.overlaps.sqrt_lambda_max, r.overlaps.lmin_bound), std::sqrt(rhs), slack);
    return r;
}

double qutrit_lambda_min_threshold() { return (22 - std::sqrt(259.0)) / 18; }

bool qutrit_condition(std::span<const double> lambda, double slack) {
    auto s = validated_spectrum(lambda);
    if (s.size() != 3) {
        throw ValidationError("qutrit condition needs a length-3 spectrum, got " + std::to_string(s.size()));
    }
    double lmin = s.back();
    return lmin >= qutrit_lambda_min_threshold() - slack && lmin <= 1.0 / 3 + slack;
}

ActivationResult activation_copies(std::span<const double> lambda, int n, double slack) {
    auto s = validated_spectrum(lambda);
    if (n < 3) {
        throw ValidationError("activation needs n >= 3 measurements, got " + std::to_string(n));
    }
    if (s.front() >= 1 - 1e-15) {
        throw ValidationError("product state (lambda_max = 1) is not activatable: no number of copies helps");
    }
    auto ob = overlap_bounds(s);
    ActivationResult r;
    r.c = std::max(ob.sqrt_lambda_max, ob.lmin_bound);
    r.threshold = std::sqrt((n - 2.0) / (2.0 * n - 2));
    if (r.c <= 0) {
        r.k = 1;
        return r;
    }
    double ck = r.c;
    r.k = 1;
    while (ck > r.threshold + slack) {
        ck *= r.c;
        r.k++;
    }
    return r;
}

std::string to_string(LcBoundMode m) {
    switch (m) {
        case LcBoundMode::rank1:
            return "rank1";
        case LcBoundMode::projective:
            return "projective";
        case LcBoundMode::povm:
            return "povm";
    }
    return "projective";
}

LcBoundMode parse_lc_bound_mode(const std::string &s) {
    if (s == "rank1") {
        return LcBoundMode::rank1;
    }
    if (s == "projective") {
        return LcBoundMode::projective;
    }
    if (s == "povm") {
        return LcBoundMode::povm;
    }
    throw ValidationError("unknown lc-bound mode '" + s + "' (expected rank1, projective or povm)");
}

double lc_lower_bound(std::span<const double> lambda, LcBoundMode mode, int m_a, int m_b) {
    auto s = validated_spectrum(lambda);
    if (s.size() < 2) {
        return 1;
    }
    double d = static_cast<double>(s.size());
    double a = std::sqrt(s[0]);
    double b = std::sqrt(s[1]);
    double amp = 0;
    switch (mode) {
        case LcBoundMode::rank1:
            if (m_a < 1 || m_b < 1) {
                throw ValidationError("rank1 mode needs outcome counts m_a, m_b >= 1");
            }
            amp = (a - b * std::sqrt((m_a - 1.0) * (m_b - 1.0))) / std::sqrt(static_cast<double>(m_a) * m_b);
            break;
        case LcBoundMode::projective:
            amp = (a - b * (d - 1)) / d;
            break;
        case LcBoundMode::povm:
            amp = (a - b * (d * d - 1)) / (d * d);
            break;
    }
    return amp > 0 ? amp * amp : 0.0;
}

}  // namespace fnl
