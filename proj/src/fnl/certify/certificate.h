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

#ifndef FNL_CERTIFY_CERTIFICATE_H
#define FNL_CERTIFY_CERTIFICATE_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fnl/antidist/antidist.h"
#include "fnl/config.h"
#include "fnl/mub/mub.h"
#include "fnl/quantum/behavior.h"
#include "fnl/quantum/quantum.h"

namespace fnl {

enum class CertifyMethod { frobenius, sdp, automatic };
std::string to_string(CertifyMethod m);
CertifyMethod parse_certify_method(const std::string &s);

struct CertifyOptions {
    CertifyMethod method = CertifyMethod::automatic;
    SdpOptions sdp;
    int jobs = 1;                       ///< worker threads for the per-α work; ≤ 0 uses all cores
    bool extract_measurements = false;  ///< solve for Bob's antidistinguishing measurements and deduplicate them
    bool align_to_schmidt = true;       ///< apply Alice's bases relative to the state's Schmidt basis
    std::uint64_t cap = 10'000'000;     ///< max number of α-sets
    double zero_weight = 1e-12;         ///< outcomes with p(a|x) at or below this are unrealizable
    Tolerances tol;
};

enum class AlphaStatus { antidistinguishable, inconclusive, not_antidistinguishable, undecided };
std::string to_string(AlphaStatus s);

struct AlphaEvidence {
    std::vector<int> alpha;          ///< Alice's outcome per setting
    std::string method;              ///< "frobenius" or "sdp": the method that settled it
    double gram_frobenius_sq = 0;    ///< ‖G‖_F²
    double gram_bound_sq = 0;        ///< n²/2
    bool frobenius_pass = false;
    std::optional<double> sdp_primal;
    std::optional<double> sdp_dual;
    std::optional<SdpStatus> sdp_status;
    int sdp_iterations = 0;
    AlphaStatus status = AlphaStatus::undecided;
    int bob_setting = -1;            ///< Bob's setting that excludes this α
    std::vector<Cell> zero_cells;    ///< p(α_x, b=x | x, y=bob_setting) = 0, one per x
};

enum class Verdict { certified, not_certified, undecided };
std::string to_string(Verdict v);

struct FnlCertificate {
    int d = 0;
    std::vector<double> lambda;
    int n = 0;                        ///< Alice's settings
    CertifyMethod method = CertifyMethod::automatic;
    std::vector<std::pair<int, int>> excluded_outcomes;  ///< unrealizable (x, a)
    std::vector<AlphaEvidence> evidence;                  ///< lexicographic over realizable α
    std::vector<Povm> bob_measurements;                   ///< present when extracted
    int bob_settings = 0;
    Verdict verdict = Verdict::undecided;
    std::vector<std::pair<std::size_t, std::string>> failures;  ///< evidence index, reason
    std::size_t frobenius_passed = 0;
    std::size_t sdp_passed = 0;
};

FnlCertificate certify_full_nonlocality(const BipartitePureState &state, const BasisFamily &alice,
                                        const CertifyOptions &opts = {});

/// certify_full_nonlocality with the five qutrit bases. Throws ValidationError unless d = 3.
FnlCertificate qutrit_certify(const BipartitePureState &state, const CertifyOptions &opts = {});

/// Sums, over all pairs of realizable α-sets' states, how many measured overlaps exceed
/// the analytic bounds; used by property tests.
struct OverlapCheck {
    double worst_excess_first = -1;  ///< max over pairs with the Schmidt-basis setting of |⟨·|·⟩| − √λ_max
    double worst_excess_other = -1;  ///< max over other pairs of |⟨·|·⟩| − min_j f(λ_j)
};
OverlapCheck check_overlap_bounds(const BipartitePureState &state, const BasisFamily &mubs);

}  // namespace fnl

#endif
