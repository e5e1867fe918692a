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

#ifndef FNL_MUB_MUB_H
#define FNL_MUB_MUB_H

#include <vector>

#include "fnl/numkit/complex_matrix.h"
#include "fnl/quantum/quantum.h"

namespace fnl {

/// Orthonormal bases of C^dim; the columns of each unitary are the basis vectors.
struct BasisFamily {
    std::size_t dim = 0;
    std::vector<ComplexMatrix> bases;

    std::size_t count() const { return bases.size(); }
    /// Rank-1 projective measurements, one setting per basis.
    MeasurementSet measurements() const;
};

struct MubReport {
    double max_overlap_deviation = 0;  ///< max over x≠x', a, a' of | |⟨e|f⟩| - 1/√d |
    double max_unitarity_residual = 0;  ///< max over x of max |U†U - I|
    bool unitary = false;
    bool unbiased = false;
};

MubReport verify_mub(const BasisFamily &family, double tol = 1e-9);

/// d+1 MUBs for prime d, computational basis first. Throws UnsupportedError otherwise.
BasisFamily prime_mubs(int d, int dimension_cap = 64);

/// Hard-coded complete set of 5 MUBs in d=4. Throws UnsupportedError for other d.
BasisFamily builtin_mubs(int d);

/// prime_mubs or builtin_mubs, whichever applies.
BasisFamily standard_mubs(int d, int dimension_cap = 64);

/// The five qutrit bases U1..U5 (U1 = identity). Not mutually unbiased.
BasisFamily qutrit_five_set();

/// Per-copy product bases: basis x of the result is U_x^{⊗k}.
BasisFamily tensor_power(const BasisFamily &family, int k);

/// Basis x of the result is U_x ⊗ V_x; the count is the smaller of the two.
/// Products of MUB families are MUB families in the product dimension.
BasisFamily product_mubs(const BasisFamily &a, const BasisFamily &b);

/// The first n bases.
BasisFamily truncate(const BasisFamily &family, std::size_t n);

bool is_prime(int n);

}  // namespace fnl

#endif
