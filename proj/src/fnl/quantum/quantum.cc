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

#include "fnl/quantum/quantum.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "fnl/errors.h"
#include "fnl/numkit/hermitian_eig.h"
#include "fnl/numkit/schmidt.h"

namespace fnl {

namespace {

void check_unitary(const ComplexMatrix &u, std::size_t dim, const char *what, double tol) {
    if (u.rows() != dim || u.cols() != dim) {
        std::ostringstream msg;
        msg << what << " is " << u.rows() << "x" << u.cols() << ", expected " << dim << "x" << dim;
        throw ValidationError(msg.str());
    }
    double err = max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(dim));
    if (err > tol) {
        std::ostringstream msg;
        msg << what << " is not unitary (residual " << err << ")";
        throw ValidationError(msg.str());
    }
}

ComplexMatrix permute_columns(const ComplexMatrix &m, const std::vector<std::size_t> &order) {
    ComplexMatrix out(m.rows(), order.size());
    for (std::size_t c = 0; c < order.size(); c++) {
        for (std::size_t r = 0; r < m.rows(); r++) {
            out(r, c) = m(r, order[c]);
        }
    }
    return out;
}

}  // namespace

BipartitePureState::BipartitePureState(std::vector<double> coeffs, ComplexMatrix basis_a, ComplexMatrix basis_b)
    : coeffs_(std::move(coeffs)), basis_a_(std::move(basis_a)), basis_b_(std::move(basis_b)) {
}

BipartitePureState BipartitePureState::from_schmidt(std::span<const double> coeffs, const Tolerances &tol) {
    auto id = ComplexMatrix::identity(coeffs.size());
    return from_schmidt(coeffs, id, id, tol);
}

BipartitePureState BipartitePureState::from_schmidt(std::span<const double> coeffs, ComplexMatrix basis_a,
                                                    ComplexMatrix basis_b, const Tolerances &tol) {
    std::size_t d = coeffs.size();
    if (d == 0) {
        throw ValidationError("Schmidt spectrum is empty");
    }
    double total = 0;
    for (std::size_t i = 0; i < d; i++) {
        if (!(coeffs[i] >= 0) || !std::isfinite(coeffs[i])) {
            std::ostringstream msg;
            msg << "Schmidt coefficient " << i << " is " << coeffs[i] << "; must be finite and nonnegative";
            throw ValidationError(msg.str());
        }
        total += coeffs[i];
    }
    if (std::abs(total - 1) > tol.normalization) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "Schmidt coefficients sum to " << total << ", not 1";
        throw ValidationError(msg.str());
    }
    check_unitary(basis_a, d, "basis_A", tol.reconstruction);
    check_unitary(basis_b, d, "basis_B", tol.reconstruction);

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return coeffs[i] > coeffs[j]; });
    std::vector<double> sorted;
    for (auto i : order) {
        sorted.push_back(coeffs[i]);
    }
    return BipartitePureState(std::move(sorted), permute_columns(basis_a, order), permute_columns(basis_b, order));
}

BipartitePureState BipartitePureState::from_vector(std::span<const Complex> v, std::size_t dim, const Tolerances &tol) {
    if (dim == 0 || v.size() != dim * dim) {
        std::ostringstream msg;
        msg << "state vector has " << v.size() << " amplitudes, expected " << dim << "^2";
        throw ValidationError(msg.str());
    }
    auto s = schmidt_decompose(v, dim, dim, tol.normalization);
    return BipartitePureState(std::move(s.coeffs), std::move(s.basis_a), std::move(s.basis_b));
}

ComplexMatrix BipartitePureState::amplitudes() const {
    std::size_t d = coeffs_.size();
    ComplexMatrix psi(d, d);
    for (std::size_t i = 0; i < d; i++) {
        double s = std::sqrt(coeffs_[i]);
        if (s == 0) {
            continue;
        }
        for (std::size_t j = 0; j < d; j++) {
            for (std::size_t k = 0; k < d; k++) {
                psi(j, k) += s * basis_a_(j, i) * basis_b_(k, i);
            }
        }
    }
    return psi;
}

ComplexVector BipartitePureState::vector() const {
    auto psi = amplitudes();
    return ComplexVector(psi.entries().begin(), psi.entries().end());
}

Povm Povm::from_basis(const ComplexMatrix &unitary) {
    Povm p;
    for (std::size_t c = 0; c < unitary.cols(); c++) {
        auto v = unitary.column(c);
        p.elements.push_back(ComplexMatrix::outer(v, v));
    }
    return p;
}

void validate_povm(const Povm &povm, const Tolerances &tol) {
    if (povm.elements.empty()) {
        throw ValidationError("POVM has no elements");
    }
    std::size_t d = povm.dim();
    ComplexMatrix total(d, d);
    for (std::size_t k = 0; k < povm.elements.size(); k++) {
        const auto &e = povm.elements[k];
        if (e.rows() != d || e.cols() != d) {
            std::ostringstream msg;
            msg << "POVM element " << k << " is " << e.rows() << "x" << e.cols() << ", expected " << d << "x" << d;
            throw ValidationError(msg.str());
        }
        auto eig = hermitian_eig(e, tol.hermitian);
        if (eig.values.front() < -tol.povm_psd) {
            std::ostringstream msg;
            msg << "POVM element " << k << " has negative eigenvalue " << eig.values.front();
            throw ValidationError(msg.str());
        }
        total += e;
    }
    double err = max_abs_diff(total, ComplexMatrix::identity(d));
    if (err > tol.povm_sum) {
        std::ostringstream msg;
        msg << "POVM elements sum to identity only within " << err;
        throw ValidationError(msg.str());
    }
}

MeasurementSet::MeasurementSet(std::vector<Povm> povms, const Tolerances &tol) : povms_(std::move(povms)) {
    if (povms_.empty()) {
        throw ValidationError("measurement set has no settings");
    }
    for (std::size_t x = 0; x < povms_.size(); x++) {
        validate_povm(povms_[x], tol);
        if (povms_[x].dim() != povms_[0].dim()) {
            std::ostringstream msg;
            msg << "setting " << x << " acts on dimension " << povms_[x].dim() << ", setting 0 on "
                << povms_[0].dim();
            throw ValidationError(msg.str());
        }
    }
}

std::size_t MeasurementSet::max_outcomes() const {
    std::size_t m = 0;
    for (const auto &p : povms_) {
        m = std::max(m, p.outcomes());
    }
    return m;
}

std::vector<int> PostMeasurementFamily::realizable_outcomes(std::size_t x) const {
    std::vector<int> out;
    for (std::size_t a = 0; a < entries[x].size(); a++) {
        if (entries[x][a].realizable()) {
            out.push_back(static_cast<int>(a));
        }
    }
    return out;
}

PostMeasurementFamily post_measurement_states(const BipartitePureState &state, const MeasurementSet &alice,
                                              const Tolerances &tol, double zero_weight) {
    std::size_t d = state.dim();
    if (alice.dim() != d) {
        std::ostringstream msg;
        msg << "Alice's measurements act on dimension " << alice.dim() << ", state has local dimension " << d;
        throw ValidationError(msg.str());
    }
    PostMeasurementFamily fam;
    fam.entries.resize(alice.settings());
    for (std::size_t x = 0; x < alice.settings(); x++) {
        for (std::size_t a = 0; a < alice[x].outcomes(); a++) {
            auto eig = hermitian_eig(alice[x].elements[a], tol.hermitian);
            if (d > 1 && eig.values[d - 2] > tol.rank) {
                std::ostringstream msg;
                msg << "Alice element (x=" << x << ", a=" << a << ") has rank > 1; only rank-1 measurements are supported";
                throw UnsupportedError(msg.str());
            }
            // A = c|e⟩⟨e|; Bob's unnormalized state is √c Σ_i √λ_i ⟨e|a_i⟩ |b_i⟩.
            double c = std::max(eig.values[d - 1], 0.0);
            auto e = eig.vectors.column(d - 1);
            ComplexVector bob(d);
            for (std::size_t i = 0; i < d; i++) {
                Complex amp = std::sqrt(state.coeffs()[i]) * inner(e, state.basis_a().column(i));
                for (std::size_t k = 0; k < d; k++) {
                    bob[k] += amp * state.basis_b()(k, i);
                }
            }
            double nb = norm(bob);
            PostMeasurementFamily::Entry entry;
            entry.weight = c * nb * nb;
            if (entry.weight > zero_weight) {
                for (auto &z : bob) {
                    z /= nb;
                }
                entry.state = std::move(bob);
            }
            fam.entries[x].push_back(std::move(entry));
        }
    }
    return fam;
}

RealBehavior born_behavior(const BipartitePureState &state, const MeasurementSet &alice, const MeasurementSet &bob) {
    std::size_t d = state.dim();
    if (alice.dim() != d || bob.dim() != d) {
        std::ostringstream msg;
        msg << "measurement dimensions (Alice " << alice.dim() << ", Bob " << bob.dim()
            << ") do not match the state's local dimension " << d;
        throw ValidationError(msg.str());
    }
    ScenarioDims dims{static_cast<int>(alice.settings()), static_cast<int>(bob.settings()),
                      static_cast<int>(alice.max_outcomes()), static_cast<int>(bob.max_outcomes())};
    RealBehavior out(dims);
    auto psi = state.amplitudes();
    auto psi_dag = psi.adjoint();
    for (int x = 0; x < dims.n; x++) {
        for (int a = 0; a < static_cast<int>(alice[x].outcomes()); a++) {
            // p = Tr(Ψ† A Ψ Bᵀ)
            auto left = psi_dag * alice[x].elements[a] * psi;
            for (int y = 0; y < dims.np; y++) {
                for (int b = 0; b < static_cast<int>(bob[y].outcomes()); b++) {
                    double p = real_trace_product(left, bob[y].elements[b].transpose());
                    out.at(a, b, x, y) = std::max(p, 0.0);
                }
            }
        }
    }
    return out;
}

BipartitePureState tensor_copies(const BipartitePureState &state, int k, int dimension_cap) {
    if (k < 1) {
        throw ValidationError("copy count k must be at least 1, got " + std::to_string(k));
    }
    long double total = 1;
    for (int i = 0; i < k; i++) {
        total *= state.dim();
    }
    if (total > dimension_cap) {
        std::ostringstream msg;
        msg << "k=" << k << " copies of a d=" << state.dim() << " state need local dimension d^k = " << total
            << ", above the cap " << dimension_cap;
        throw ResourceError(msg.str());
    }
    std::vector<double> coeffs = state.coeffs();
    ComplexMatrix basis_a = state.basis_a();
    ComplexMatrix basis_b = state.basis_b();
    for (int i = 1; i < k; i++) {
        std::vector<double> next;
        for (double u : coeffs) {
            for (double v : state.coeffs()) {
                next.push_back(u * v);
            }
        }
        coeffs = std::move(next);
        basis_a = kron(basis_a, state.basis_a());
        basis_b = kron(basis_b, state.basis_b());
    }
    double sum = std::accumulate(coeffs.begin(), coeffs.end(), 0.0);
    for (auto &c : coeffs) {
        c /= sum;
    }
    return BipartitePureState::from_schmidt(coeffs, std::move(basis_a), std::move(basis_b));
}

}  // namespace fnl
