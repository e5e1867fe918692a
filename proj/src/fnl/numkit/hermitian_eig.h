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

#ifndef FNL_NUMKIT_HERMITIAN_EIG_H
#define FNL_NUMKIT_HERMITIAN_EIG_H

#include <vector>

#include "fnl/numkit/complex_matrix.h"

namespace fnl {

struct EigenDecomposition {
    std::vector<double> values;  ///< ascending
    ComplexMatrix vectors;       ///< unitary; column k pairs with values[k]
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// Throws ValidationError when `m` is not square or when some entry differs
/// from the conjugate of its transpose partner by more than `hermitian_tol`;
/// the message names the offending entry.
EigenDecomposition hermitian_eig(const ComplexMatrix &m, double hermitian_tol = 1e-12);

/// Same as hermitian_eig but symmetrizes the input instead of validating it.
/// Meant for matrices that are Hermitian up to accumulated rounding.
EigenDecomposition hermitian_eig_of_part(const ComplexMatrix &m);

/// V diag(f(λ)) V†.
template <typename F>
ComplexMatrix spectral_map(const EigenDecomposition &eig, F &&f) {
    std::size_t n = eig.values.size();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; k++) {
        double w = f(eig.values[k]);
        if (w == 0) {
            continue;
        }
        for (std::size_t r = 0; r < n; r++) {
            Complex vr = eig.vectors(r, k) * w;
            for (std::size_t c = 0; c < n; c++) {
                out(r, c) += vr * std::conj(eig.vectors(c, k));
            }
        }
    }
    return out;
}

/// Nearest positive semidefinite matrix in Frobenius norm.
ComplexMatrix project_psd(const ComplexMatrix &m);

double min_eigenvalue(const ComplexMatrix &m);
double max_eigenvalue(const ComplexMatrix &m);

}  // namespace fnl

#endif
