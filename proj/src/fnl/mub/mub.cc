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

#include "fnl/mub/mub.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fnl/errors.h"

namespace fnl {

MeasurementSet BasisFamily::measurements() const {
    std::vector<Povm> povms;
    for (const auto &u : bases) {
        povms.push_back(Povm::from_basis(u));
    }
    return MeasurementSet(std::move(povms));
}

bool is_prime(int n) {
    if (n < 2) {
        return false;
    }
    for (int k = 2; k * k <= n; k++) {
        if (n % k == 0) {
            return false;
        }
    }
    return true;
}

MubReport verify_mub(const BasisFamily &family, double tol) {
    MubReport r;
    double target = 1 / std::sqrt(static_cast<double>(family.dim));
    for (const auto &u : family.bases) {
        if (u.rows() != family.dim || u.cols() != family.dim) {
            throw ValidationError("basis of shape " + std::to_string(u.rows()) + "x" + std::to_string(u.cols()) +
                                  " in a family of dimension " + std::to_string(family.dim));
        }
        r.max_unitarity_residual =
            std::max(r.max_unitarity_residual, max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(family.dim)));
    }
    for (std::size_t x = 0; x < family.count(); x++) {
        for (std::size_t x2 = x + 1; x2 < family.count(); x2++) {
            auto g = family.bases[x].adjoint() * family.bases[x2];
            for (auto z : g.entries()) {
                r.max_overlap_deviation = std::max(r.max_overlap_deviation, std::abs(std::abs(z) - target));
            }
        }
    }
    r.unitary = r.max_unitarity_residual <= tol;
    r.unbiased = r.unitary && r.max_overlap_deviation <= tol;
    return r;
}

BasisFamily prime_mubs(int d, int dimension_cap) {
    if (d > dimension_cap) {
        std::ostringstream msg;
        msg << "dimension " << d << " exceeds the cap " << dimension_cap;
        throw ResourceError(msg.str());
    }
    if (!is_prime(d)) {
        std::ostringstream msg;
        msg << "no built-in MUB construction for d=" << d << "; supply a basis family file";
        throw UnsupportedError(msg.str());
    }
    BasisFamily f;
    f.dim = d;
    f.bases.push_back(ComplexMatrix::identity(d));
    if (d == 2) {
        double h = 1 / std::sqrt(2.0);
        Complex i(0, 1);
        f.bases.push_back(ComplexMatrix{{h, h}, {h, -h}});
        f.bases.push_back(ComplexMatrix{{h, h}, {i * h, -i * h}});
        return f;
    }
    // Column a of basis k: (1/√d) Σ_j ω^{k j² + a j} |j⟩.
    double s = 1 / std::sqrt(static_cast<double>(d));
    for (int k = 0; k < d; k++) {
        ComplexMatrix u(d, d);
        for (int a = 0; a < d; a++) {
            for (int j = 0; j < d; j++) {
                long e = (static_cast<long>(k) * j * j + static_cast<long>(a) * j) % d;
                u(j, a) = std::polar(s, 2 * std::numbers::pi * e / d);
            }
        }
        f.bases.push_back(u);
    }
    return f;
}

BasisFamily builtin_mubs(int d) {
    if (d != 4) {
        throw UnsupportedError("builtin MUB table only covers d=4, got d=" + std::to_string(d));
    }
    const Complex i(0, 1);
    // Basis vectors are listed as rows and stored as columns.
    const std::vector<ComplexMatrix> rows{
        ComplexMatrix::identity(4),
        ComplexMatrix{{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, -1, 1}, {1, -1, 1, -1}},
        ComplexMatrix{{1, -1, -i, -i}, {1, -1, i, i}, {1, 1, i, -i}, {1, 1, -i, i}},
        ComplexMatrix{{1, -i, -i, -1}, {1, -i, i, 1}, {1, i, i, -1}, {1, i, -i, 1}},
        ComplexMatrix{{1, -i, -1, -i}, {1, -i, 1, i}, {1, i, 1, -i}, {1, i, -1, i}},
    };
    BasisFamily f;
    f.dim = 4;
    for (std::size_t x = 0; x < rows.size(); x++) {
        f.bases.push_back((x == 0 ? Complex(1) : Complex(0.5)) * rows[x].transpose());
    }
    return f;
}

BasisFamily standard_mubs(int d, int dimension_cap) {
    if (d == 4) {
        return builtin_mubs(d);
    }
    return prime_mubs(d, dimension_cap);
}

BasisFamily qutrit_five_set() {
    const Complex w = std::polar(1.0, 2 * std::numbers::pi / 3);
    const Complex w2 = w * w;
    const double s = 1 / std::sqrt(3.0);
    ComplexMatrix u2 = Complex(s) * ComplexMatrix{{1, 1, w2}, {w, 1, w}, {w2, 1, 1}};
    auto negate_row = [&](std::size_t r) {
        ComplexMatrix u = u2;
        for (std::size_t c = 0; c < 3; c++) {
            u(r, c) = -u(r, c);
        }
        return u;
    };
    BasisFamily f;
    f.dim = 3;
    f.bases = {ComplexMatrix::identity(3), u2, negate_row(2), negate_row(1), negate_row(0)};
    return f;
}

BasisFamily tensor_power(const BasisFamily &family, int k) {
    if (k < 1) {
        throw ValidationError("tensor power k must be at least 1");
    }
    BasisFamily out;
    out.dim = 1;
    for (int c = 0; c < k; c++) {
        out.dim *= family.dim;
    }
    for (const auto &u : family.bases) {
        ComplexMatrix p = u;
        for (int c = 1; c < k; c++) {
            p = kron(p, u);
        }
        out.bases.push_back(std::move(p));
    }
    return out;
}

BasisFamily product_mubs(const BasisFamily &a, const BasisFamily &b) {
    BasisFamily out;
    out.dim = a.dim * b.dim;
    for (std::size_t x = 0; x < std::min(a.count(), b.count()); x++) {
        out.bases.push_back(kron(a.bases[x], b.bases[x]));
    }
    return out;
}

BasisFamily truncate(const BasisFamily &family, std::size_t n) {
    if (n > family.count()) {
        std::ostringstream msg;
        msg << "requested " << n << " bases but the family has " << family.count();
        throw ValidationError(msg.str());
    }
    BasisFamily out;
    out.dim = family.dim;
    out.bases.assign(family.bases.begin(), family.bases.begin() + n);
    return out;
}

}  // namespace fnl
