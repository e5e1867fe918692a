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

#include "fnl/numkit/hermitian_eig.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "fnl/errors.h"

namespace fnl {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm2(const ComplexMatrix &a) {
    double s = 0;
    for (std::size_t r = 0; r < a.rows(); r++) {
        for (std::size_t c = 0; c < a.cols(); c++) {
            if (r != c) {
                s += std::norm(a(r, c));
            }
        }
    }
    return s;
}

// Zeroes a(p,q) with the unitary J = Φ R, where Φ moves the phase of a(p,q)
// onto the real axis and R is the classical real Jacobi rotation.
void rotate(ComplexMatrix &a, ComplexMatrix &v, std::size_t p, std::size_t q) {
    Complex apq = a(p, q);
    double g = std::abs(apq);
    if (g == 0) {
        return;
    }
    Complex phase = apq / g;  // e^{iθ}
    double app = a(p, p).real();
    double aqq = a(q, q).real();
    double theta = (aqq - app) / (2 * g);
    double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
    double c = 1 / std::sqrt(t * t + 1);
    double s = t * c;
    Complex ph_conj = std::conj(phase);

    // J_pp = c, J_pq = s, J_qp = -s e^{-iθ}, J_qq = c e^{-iθ}
    std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; k++) {
        Complex akp = a(k, p);
        Complex akq = a(k, q);
        a(k, p) = c * akp - s * ph_conj * akq;
        a(k, q) = s * akp + c * ph_conj * akq;
    }
    for (std::size_t k = 0; k < n; k++) {
        Complex apk = a(p, k);
        Complex aqk = a(q, k);
        a(p, k) = c * apk - s * phase * aqk;
        a(q, k) = s * apk + c * phase * aqk;
    }
    a(p, q) = 0;
    a(q, p) = 0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
    for (std::size_t k = 0; k < n; k++) {
        Complex vkp = v(k, p);
        Complex vkq = v(k, q);
        v(k, p) = c * vkp - s * ph_conj * vkq;
        v(k, q) = s * vkp + c * ph_conj * vkq;
    }
}

EigenDecomposition jacobi(ComplexMatrix a) {
    std::size_t n = a.rows();
    ComplexMatrix v = ComplexMatrix::identity(n);
    double scale = 0;
    for (Complex z : a.entries()) {
        scale += std::norm(z);
    }
    double stop = 1e-32 * std::max(scale, 1e-300);
    for (int sweep = 0; sweep < kMaxSweeps; sweep++) {
        double off = off_diagonal_norm2(a);
        if (off <= stop) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; p++) {
            for (std::size_t q = p + 1; q < n; q++) {
                if (std::norm(a(p, q)) > stop / static_cast<double>(n * n)) {
                    rotate(a, v, p, q);
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
    EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; k++) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; r++) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix &m, double hermitian_tol) {
    if (!m.is_square()) {
        std::ostringstream msg;
        msg << "hermitian_eig: matrix is " << m.rows() << "x" << m.cols() << ", not square";
        throw ValidationError(msg.str());
    }
    for (std::size_t r = 0; r < m.rows(); r++) {
        for (std::size_t c = r; c < m.cols(); c++) {
            double dev = std::abs(m(r, c) - std::conj(m(c, r)));
            if (dev > hermitian_tol) {
                std::ostringstream msg;
                msg << "hermitian_eig: entry (" << r << "," << c << ") = " << m(r, c) << " differs from conj of ("
                    << c << "," << r << ") = " << m(c, r) << " by " << dev;
                throw ValidationError(msg.str());
            }
        }
    }
    return jacobi(m.hermitian_part());
}

EigenDecomposition hermitian_eig_of_part(const ComplexMatrix &m) {
    if (!m.is_square()) {
        throw ValidationError("hermitian_eig_of_part: matrix is not square");
    }
    return jacobi(m.hermitian_part());
}

ComplexMatrix project_psd(const ComplexMatrix &m) {
    return spectral_map(hermitian_eig_of_part(m), [](double x) { return x > 0 ? x : 0.0; });
}

double min_eigenvalue(const ComplexMatrix &m) {
    auto eig = hermitian_eig_of_part(m);
    return eig.values.empty() ? 0.0 : eig.values.front();
}

double max_eigenvalue(const ComplexMatrix &m) {
    auto eig = hermitian_eig_of_part(m);
    return eig.values.empty() ? 0.0 : eig.values.back();
}

}  // namespace fnl
