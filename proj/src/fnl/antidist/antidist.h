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

#ifndef FNL_ANTIDIST_ANTIDIST_H
#define FNL_ANTIDIST_ANTIDIST_H

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fnl/config.h"
#include "fnl/numkit/complex_matrix.h"
#include "fnl/quantum/quantum.h"

namespace fnl {

/// G_ij = ⟨ψ_i|ψ_j⟩.
struct GramMatrix {
    ComplexMatrix entries;

    std::size_t n() const { return entries.rows(); }
    double frobenius_squared() const;
    /// max_{i≠j} |G_ij|
    double max_offdiagonal() const;
};

/// Throws ValidationError if the vectors differ in dimension or are not unit norm.
GramMatrix gram(std::span<const ComplexVector> states, const Tolerances &tol = {});

struct FrobeniusReport {
    bool sufficient = false;         ///< ‖G‖_F ≤ n/√2
    double norm = 0;                 ///< ‖G‖_F
    double bound = 0;                ///< n/√2
    double pairwise_threshold = 0;   ///< √((n−2)/(2n−2)); pairwise overlaps below it imply sufficiency
    double max_overlap = 0;
};

/// Sufficient test for antidistinguishability, compared as ‖G‖² ≤ n²/2 + slack.
FrobeniusReport frobenius_criterion(const GramMatrix &g, double slack = 1e-12);

double pairwise_threshold(int n);

enum class SdpStatus { antidistinguishable, not_antidistinguishable, undecided };
std::string to_string(SdpStatus s);

struct SdpOptions {
    double decision_tol = 1e-7;
    double gap_tol = 1e-8;       ///< stop once primal − dual falls below this and the status is decided
    int max_iterations = 50'000;
    int check_every = 10;
    std::uint64_t seed = 0;      ///< recorded only; the iteration is deterministic
};

struct SdpResult {
    double primal_value = 0;     ///< Σ Tr[N_i ρ_i] for the returned measurement
    Povm measurement;            ///< n outcomes, a valid POVM
    double dual_value = 0;       ///< Tr Y for the returned witness
    ComplexMatrix dual_witness;  ///< Y with Y ⪯ ρ_i for all i
    SdpStatus status = SdpStatus::undecided;
    int iterations = 0;

    double gap() const { return primal_value - dual_value; }
};

/// min Σ Tr[M_i ρ_i] over POVMs {M_i}, with a matching dual certificate.
SdpResult solve_exclusion_sdp(std::span<const ComplexMatrix> rhos, const SdpOptions &opts = {},
                              const Tolerances &tol = {});
SdpResult solve_exclusion_sdp(std::span<const ComplexVector> states, const SdpOptions &opts = {},
                              const Tolerances &tol = {});

/// max_i λ_max(Y − ρ_i); Y is dual feasible iff this is ≤ 0.
double dual_infeasibility(const ComplexMatrix &y, std::span<const ComplexMatrix> rhos);

/// Groups the elements of an antidistinguishing measurement into n outcomes,
/// element k going to the lowest i with Tr[M_k ρ_i] ≤ tol. Throws
/// ValidationError naming the first element that annihilates no state.
Povm merge_to_exact_form(const Povm &measurement, std::span<const ComplexMatrix> rhos, double tol);

std::vector<ComplexMatrix> density_matrices(std::span<const ComplexVector> states);

}  // namespace fnl

#endif
