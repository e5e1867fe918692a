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

#include "fnl/numkit/complex_matrix.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "fnl/errors.h"

namespace fnl {

namespace {

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ValidationError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                              std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                              std::to_string(b.cols()));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw ValidationError("ComplexMatrix: " + std::to_string(data_.size()) + " entries for a " +
                              std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw ValidationError("ComplexMatrix: ragged initializer");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); i++) {
        m(i, i) = values[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::from_columns(std::span<const ComplexVector> columns) {
    if (columns.empty()) {
        return {};
    }
    ComplexMatrix m(columns[0].size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); c++) {
        if (columns[c].size() != m.rows()) {
            throw ValidationError("from_columns: column " + std::to_string(c) + " has length " +
                                  std::to_string(columns[c].size()) + ", expected " + std::to_string(m.rows()));
        }
        for (std::size_t r = 0; r < m.rows(); r++) {
            m(r, c) = columns[c][r];
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::column_vector(std::span<const Complex> v) {
    return ComplexMatrix(v.size(), 1, ComplexVector(v.begin(), v.end()));
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> u, std::span<const Complex> v) {
    ComplexMatrix m(u.size(), v.size());
    for (std::size_t r = 0; r < u.size(); r++) {
        for (std::size_t c = 0; c < v.size(); c++) {
            m(r, c) = u[r] * std::conj(v[c]);
        }
    }
    return m;
}

ComplexVector ComplexMatrix::column(std::size_t c) const {
    ComplexVector v(rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        v[r] = (*this)(r, c);
    }
    return v;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            m(c, r) = std::conj((*this)(r, c));
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            m(c, r) = (*this)(r, c);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix m = *this;
    for (auto &z : m.data_) {
        z = std::conj(z);
    }
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); i++) {
        t += (*this)(i, i);
    }
    return t;
}

ComplexMatrix ComplexMatrix::hermitian_part() const {
    ComplexMatrix m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            m(r, c) = 0.5 * ((*this)(r, c) + std::conj((*this)(c, r)));
        }
    }
    return m;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator+");
    for (std::size_t i = 0; i < data_.size(); i++) {
        data_[i] += other.data_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator-");
    for (std::size_t i = 0; i < data_.size(); i++) {
        data_[i] -= other.data_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &z : data_) {
        z *= scale;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw ValidationError("operator*: inner dimensions " + std::to_string(a.cols()) + " and " +
                              std::to_string(b.rows()) + " differ");
    }
    ComplexMatrix m(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); r++) {
        for (std::size_t k = 0; k < a.cols(); k++) {
            Complex s = a(r, k);
            if (s == Complex(0)) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols(); c++) {
                m(r, c) += s * b(k, c);
            }
        }
    }
    return m;
}

ComplexMatrix operator*(Complex s, ComplexMatrix m) {
    m *= s;
    return m;
}

ComplexVector operator*(const ComplexMatrix &m, std::span<const Complex> v) {
    if (m.cols() != v.size()) {
        throw ValidationError("matrix-vector product: " + std::to_string(m.cols()) + " columns vs vector of length " +
                              std::to_string(v.size()));
    }
    ComplexVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); r++) {
        Complex s = 0;
        for (std::size_t c = 0; c < m.cols(); c++) {
            s += m(r, c) * v[c];
        }
        out[r] = s;
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ar++) {
        for (std::size_t ac = 0; ac < a.cols(); ac++) {
            Complex s = a(ar, ac);
            for (std::size_t br = 0; br < b.rows(); br++) {
                for (std::size_t bc = 0; bc < b.cols(); bc++) {
                    m(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
                }
            }
        }
    }
    return m;
}

ComplexVector kron(std::span<const Complex> a, std::span<const Complex> b) {
    ComplexVector out;
    out.reserve(a.size() * b.size());
    for (Complex x : a) {
        for (Complex y : b) {
            out.push_back(x * y);
        }
    }
    return out;
}

double frobenius_norm(const ComplexMatrix &m) {
    double s = 0;
    for (Complex z : m.entries()) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double worst = 0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); i++) {
        worst = std::max(worst, std::abs(ea[i] - eb[i]));
    }
    return worst;
}

double real_trace_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) {
        throw ValidationError("real_trace_product: incompatible shapes");
    }
    double s = 0;
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t k = 0; k < a.cols(); k++) {
            s += (a(i, k) * b(k, i)).real();
        }
    }
    return s;
}

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
    if (u.size() != v.size()) {
        throw ValidationError("inner: vectors of length " + std::to_string(u.size()) + " and " +
                              std::to_string(v.size()));
    }
    Complex s = 0;
    for (std::size_t i = 0; i < u.size(); i++) {
        s += std::conj(u[i]) * v[i];
    }
    return s;
}

double norm(std::span<const Complex> v) {
    double s = 0;
    for (Complex z : v) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

ComplexVector normalized(std::span<const Complex> v) {
    double n = norm(v);
    if (n == 0) {
        throw ValidationError("normalized: zero vector");
    }
    ComplexVector out(v.begin(), v.end());
    for (auto &z : out) {
        z /= n;
    }
    return out;
}

double expectation(const ComplexMatrix &m, std::span<const Complex> v) {
    return inner(v, m * v).real();
}

}  // namespace fnl
