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

#ifndef FNL_NUMKIT_SCHMIDT_H
#define FNL_NUMKIT_SCHMIDT_H

#include <span>
#include <vector>

#include "fnl/numkit/complex_matrix.h"

namespace fnl {

struct SchmidtDecomposition {
    std::vector<double> coeffs;  ///< descending λ_i, length min(d_A, d_B), Σ λ_i = 1
    ComplexMatrix basis_a;       ///< d_A × d_A unitary; column i pairs with coeffs[i]
    ComplexMatrix basis_b;       ///< d_B × d_B unitary
};

/// Schmidt form Σ_i √λ_i |a_i⟩|b_i⟩ of a normalized vector on C^{d_A} ⊗ C^{d_B}
/// (Alice's index most significant). Computed from the spectrum of the
/// reduced density matrix on A.
SchmidtDecomposition schmidt_decompose(std::span<const Complex> v, std::size_t dim_a, std::size_t dim_b,
                                       double normalization_tol = 1e-10);

/// Σ_i √coeffs[i] · basis_a[:,i] ⊗ basis_b[:,i]
ComplexVector schmidt_recompose(const SchmidtDecomposition &s);

/// Extends orthonormal columns to a full orthonormal basis of C^dim.
ComplexMatrix complete_orthonormal_basis(std::span<const ComplexVector> columns, std::size_t dim);

}  // namespace fnl

#endif
