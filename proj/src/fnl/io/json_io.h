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

#ifndef FNL_IO_JSON_IO_H
#define FNL_IO_JSON_IO_H

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fnl/antidist/antidist.h"
#include "fnl/certify/bounds.h"
#include "fnl/certify/certificate.h"
#include "fnl/config.h"
#include "fnl/mub/mub.h"
#include "fnl/nonlocality/local_content.h"
#include "fnl/nonlocality/zero_pattern.h"
#include "fnl/quantum/behavior.h"
#include "fnl/quantum/quantum.h"

namespace fnl {

using Json = nlohmann::ordered_json;

inline constexpr const char *kVersion = "0.1.0";

/// Parses a file; throws ValidationError for unreadable files and malformed JSON.
Json read_json_file(const std::string &path);

Json to_json(Complex z);
Json to_json(const ComplexVector &v);
Json to_json(const ComplexMatrix &m);
Complex complex_from_json(const Json &j);
ComplexVector vector_from_json(const Json &j);
ComplexMatrix matrix_from_json(const Json &j);

Json to_json(const ScenarioDims &d);
ScenarioDims dims_from_json(const Json &j);

/// {dims, probs[x][y][a][b], exact}. Exact tables store "p/q" strings.
Json to_json(const RealBehavior &b);
Json to_json(const RationalBehavior &b);

struct ParsedBehavior {
    RealBehavior real;
    std::optional<RationalBehavior> exact;  ///< present when the file is marked exact
};
ParsedBehavior behavior_from_json(const Json &j);

/// {"dim", "schmidt", "basis_a", "basis_b"}.
Json to_json(const BipartitePureState &s);
/// Accepts {"schmidt": [...]} with optional "basis_a"/"basis_b", or {"vector": [...], "dim": d}.
BipartitePureState state_from_json(const Json &j, const Tolerances &tol = {});

/// {"states": [vector...]} or {"density_matrices": [matrix...]}; a bare array of vectors is also accepted.
struct StateList {
    std::vector<ComplexVector> vectors;      ///< pure states, if given as vectors
    std::vector<ComplexMatrix> densities;    ///< always filled
};
StateList state_list_from_json(const Json &j);

/// {"dim", "bases": [matrix...]}, basis vectors as matrix columns.
Json to_json(const BasisFamily &f);
BasisFamily basis_family_from_json(const Json &j);

Json to_json(const Povm &p);
Json to_json(const DeterministicStrategy &s);
Json to_json(const Cell &c);
Json to_json(const Tolerances &t);
Json to_json(const MubReport &r);
Json to_json(const FrobeniusReport &r);
Json to_json(const SdpResult &r, bool include_measurement = true);
Json to_json(const ZeroPatternReport &r);
Json to_json(const BellFunctional &f);
Json to_json(const RationalLcResult &r);
Json to_json(const RealLcResult &r);
Json to_json(const ConditionCheck &c);
Json to_json(const OverlapBounds &b);
Json to_json(const BoundReport &r);
Json to_json(const ActivationResult &r);
Json to_json(const AlphaEvidence &e);
Json to_json(const FnlCertificate &c);

struct RunManifest {
    std::vector<std::string> command;
    std::uint64_t seed = 0;
    Tolerances tolerances;
    std::string version = kVersion;
    double wall_time_seconds = 0;
};
Json to_json(const RunManifest &m);

}  // namespace fnl

#endif
