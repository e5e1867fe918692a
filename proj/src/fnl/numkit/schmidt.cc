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

#include "fnl/numkit/schmidt.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fnl/errors.h"
#include "fnl/numkit/hermitian_eig.h"

namespace fnl {

ComplexMatrix complete_orthonormal_basis(std::span<const ComplexVector> columns, std::size_t dim) {
    std::vector<ComplexVector> basis(columns.begin(), columns.end());
    for (std::size_t e = 0; e < dim && basis.size() < dim; e++) {
        ComplexVector cand(dim);
        cand[e] = 1;
        // Two Gram-Schmidt passes keep the result orthonormal to rounding.
        for (int pass = 0; pass < 2; pass++) {
            for (const auto &b : basis) {
                Complex proj = inner(b, cand);
                for (std::size_t k = 0; k < dim; k++) {
                    cand[k] -= proj * b[k];
                }
            }
        }
        double n = norm(cand);
        if (n > 1e-6) {
            for (auto &z : cand) {
                z /= n;
            }
            basis.push_back(std::move(cand));
        }
    }
    return ComplexMatrix::from_columns(basis);
}

SchmidtDecomposition schmidt_decompose(std::span<const Complex> v, std::size_t dim_a, std::size_t dim_b,
                                       double normalization_tol) {
    if (v.size() != dim_a * dim_b || dim_a == 0 || dim_b == 0) {
        std::ostringstream msg;
        msg << "schmidt_decompose: vector of length " << v.size() << " does not match " << dim_a << "x" << dim_b;
        throw ValidationError(msg.str());
    }
    double n = norm(v);
    if (std::abs(n - 1) > normalization_tol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "schmidt_decompose: state is not normalized (norm = " << n << ")";
        throw ValidationError(msg.str());
    }

    ComplexMatrix psi(dim_a, dim_b, ComplexVector(v.begin(), v.end()));
    ComplexMatrix rho_a = psi * psi.adjoint();
    EigenDecomposition eig = hermitian_eig_of_part(rho_a);

    std::size_t r = std::min(dim_a, dim_b);
    SchmidtDecomposition out;
    std::vector<ComplexVector> cols_a;
    std::vector<ComplexVector> cols_b;
    for (std::size_t k = 0; k < dim_a; k++) {
        std::size_t idx = dim_a - 1 - k;  // descending
        ComplexVector u = eig.vectors.column(idx);
        double lambda = std::max(eig.values[idx], 0.0);
        if (k < r) {
            out.coeffs.push_back(lambda);
        }
        cols_a.push_back(u);
        if (k < r && lambda > 1e-14) {
            // b_i = Ψᵀ conj(u_i) / √λ_i
            ComplexVector b(dim_b);
            for (std::size_t j = 0; j < dim_a; j++) {
                Complex cu = std::conj(u[j]);
                for (std::size_t c = 0; c < dim_b; c++) {
                    b[c] += psi(j, c) * cu;
                }
            }
            cols_b.push_back(normalized(b));
        }
    }
    double total = 0;
    for (double l : out.coeffs) {
        total += l;
    }
    for (double &l : out.coeffs) {
        l /= total;
    }
    out.basis_a = ComplexMatrix::from_columns(cols_a);
    out.basis_b = complete_orthonormal_basis(cols_b, dim_b);
    return out;
}

ComplexVector schmidt_recompose(const SchmidtDecomposition &s) {
    std::size_t da = s.basis_a.rows();
    std::size_t db = s.basis_b.rows();
    ComplexVector out(da * db);
    for (std::size_t i = 0; i < s.coeffs.size(); i++) {
        double w = std::sqrt(s.coeffs[i]);
        if (w == 0) {
            continue;
        }
        for (std::size_t j = 0; j < da; j++) {
            Complex aj = w * s.basis_a(j, i);
            for (std::size_t k = 0; k < db; k++) {
                out[j * db + k] += aj * s.basis_b(k, i);
            }
        }
    }
    return out;
}

}  // namespace fnl
