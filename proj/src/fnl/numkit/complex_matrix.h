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

#ifndef FNL_NUMKIT_COMPLEX_MATRIX_H
#define FNL_NUMKIT_COMPLEX_MATRIX_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace fnl {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense row-major complex matrix with value semantics.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);
    /// Matrix whose columns are the given vectors.
    static ComplexMatrix from_columns(std::span<const ComplexVector> columns);
    static ComplexMatrix column_vector(std::span<const Complex> v);
    /// |u⟩⟨v|
    static ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const Complex> entries() const { return data_; }

    ComplexVector column(std::size_t c) const;
    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    Complex trace() const;

    /// (M + M†)/2
    ComplexMatrix hermitian_part() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexVector operator*(const ComplexMatrix &m, std::span<const Complex> v);

/// Kronecker product a ⊗ b.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector kron(std::span<const Complex> a, std::span<const Complex> b);

double frobenius_norm(const ComplexMatrix &m);
/// max_ij |a_ij - b_ij|; shapes must agree.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
/// Re Tr[a b] for Hermitian a, b without forming the product.
double real_trace_product(const ComplexMatrix &a, const ComplexMatrix &b);

/// ⟨u|v⟩ (conjugate-linear in the first argument).
Complex inner(std::span<const Complex> u, std::span<const Complex> v);
double norm(std::span<const Complex> v);
ComplexVector normalized(std::span<const Complex> v);
/// ⟨v|M|v⟩ real part.
double expectation(const ComplexMatrix &m, std::span<const Complex> v);

}  // namespace fnl

#endif
