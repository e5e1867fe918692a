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

#ifndef FNL_CONFIG_H
#define FNL_CONFIG_H

#include <cstdint>

namespace fnl {

/// Numerical tolerances shared by every module. Defaults are the values the
/// library is tested against; callers may tighten or loosen them per run.
struct Tolerances {
    double hermitian = 1e-12;       ///< max |M_ij - conj(M_ji)| for Hermitian inputs
    double reconstruction = 1e-10;  ///< eigen/Schmidt reconstruction residual
    double normalization = 1e-10;   ///< |‖v‖ - 1| for state vectors
    double povm_sum = 1e-9;         ///< entrywise |Σ E - I|
    double povm_psd = 1e-10;        ///< allowed negative eigenvalue of a POVM element
    double probability_sum = 1e-9;  ///< per-setting normalization of behaviors
    double nonsignaling = 1e-9;
    double zero = 1e-9;             ///< float behavior entries at or below this count as zero
    double lp_zero = 1e-12;         ///< float LP: entries at or below this are structural zeros
    double lp_pivot = 1e-10;
    double sdp_decision = 1e-7;
    double threshold_slack = 1e-12; ///< slack on closed-form ≤ comparisons
    double mub = 1e-9;
    double rank = 1e-9;             ///< eigenvalues above this count toward operator rank
};

/// Resource caps. Environment variables FNL_DET_CAP and FNL_DIM_CAP override
/// the defaults in `Limits::from_environment`.
struct Limits {
    std::uint64_t deterministic_cap = 10'000'000;
    int dimension_cap = 64;
    int sdp_max_iterations = 50'000;

    static Limits from_environment();
};

struct Config {
    Tolerances tol;
    Limits limits;
};

}  // namespace fnl

#endif
