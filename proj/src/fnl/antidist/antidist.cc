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

#include "fnl/antidist/antidist.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fnl/errors.h"
#include "fnl/numkit/hermitian_eig.h"

namespace fnl {

double GramMatrix::frobenius_squared() const {
    double s = 0;
    for (auto z : entries.entries()) {
        s += std::norm(z);
    }
    return s;
}

double GramMatrix::max_offdiagonal() const {
    double m = 0;
    for (std::size_t i = 0; i < n(); i++) {
        for (std::size_t j = 0; j < n(); j++) {
            if (i != j) {
                m = std::max(m, std::abs(entries(i, j)));
            }
        }
    }
    return m;
}

GramMatrix gram(std::span<const ComplexVector> states, const Tolerances &tol) {
    std::size_t n = states.size();
    for (std::size_t i = 0; i < n; i++) {
        if (states[i].size() != states[0].size()) {
            std::ostringstream msg;
            msg << "state " << i << " has dimension " << states[i].size() << ", state 0 has " << states[0].size();
            throw ValidationError(msg.str());
        }
        double nv = norm(states[i]);
        if (std::abs(nv - 1) > tol.normalization) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "state " << i << " has norm " << nv;
            throw ValidationError(msg.str());
        }
    }
    GramMatrix g{ComplexMatrix(n, n)};
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            g.entries(i, j) = inner(states[i], states[j]);
        }
    }
    return g;
}

double pairwise_threshold(int n) {
    if (n < 2) {
        return 0;
    }
    return std::sqrt(static_cast<double>(n - 2) / (2.0 * n - 2));
}

FrobeniusReport frobenius_criterion(const GramMatrix &g, double slack) {
    FrobeniusReport r;
    double n = static_cast<double>(g.n());
    double sq = g.frobenius_squared();
    r.norm = std::sqrt(sq);
    r.bound = n / std::sqrt(2.0);
    r.sufficient = sq <= n * n / 2 + slack;
    r.pairwise_threshold = pairwise_threshold(static_cast<int>(g.n()));
    r.max_overlap = g.max_offdiagonal();
    return r;
}

std::string to_string(SdpStatus s) {
    switch (s) {
        case SdpStatus::antidistinguishable:
            return "antidistinguishable";
        case SdpStatus::not_antidistinguishable:
            return "not_antidistinguishable";
        case SdpStatus::undecided:
            return "undecided";
    }
    return "undecided";
}

std::vector<ComplexMatrix> density_matrices(std::span<const ComplexVector> states) {
    std::vector<ComplexMatrix> out;
    for (const auto &v : states) {
        out.push_back(ComplexMatrix::outer(v, v));
    }
    return out;
}

double dual_infeasibility(const ComplexMatrix &y, std::span<const ComplexMatrix> rhos) {
    double worst = -INFINITY;
    for (const auto &rho : rhos) {
        worst = std::max(worst, max_eigenvalue((y - rho).hermitian_part()));
    }
    return worst;
}

namespace {

struct Certified {
    bool ok = false;
    double value = INFINITY;
    std::vector<ComplexMatrix> povm;
};

// Rescales PSD iterates Z_i so they sum to the identity exactly: N_i = S^{-1/2} Z_i S^{-1/2}.
Certified certify_primal(const std::vector<ComplexMatrix> &z, std::span<const ComplexMatrix> rhos) {
    Certified c;
    std::size_t d = rhos[0].rows();
    ComplexMatrix s(d, d);
    for (const auto &zi : z) {
        s += zi;
    }
    auto eig = hermitian_eig_of_part(s);
    if (eig.values.front() < 1e-8) {
        return c;
    }
    auto s_inv_half = spectral_map(eig, [](double x) { return 1 / std::sqrt(x); });
    c.value = 0;
    for (std::size_t i = 0; i < z.size(); i++) {
        auto ni = (s_inv_half * z[i] * s_inv_half).hermitian_part();
        c.value += real_trace_product(ni, rhos[i]);
        c.povm.push_back(std::move(ni));
    }
    c.ok = true;
    return c;
}

}  // namespace

SdpResult solve_exclusion_sdp(std::span<const ComplexMatrix> rhos, const SdpOptions &opts, const Tolerances &tol) {
    std::size_t n = rhos.size();
    if (n < 2) {
        throw ValidationError("exclusion SDP needs at least 2 states, got " + std::to_string(n));
    }
    std::size_t d = rhos[0].rows();
    for (std::size_t i = 0; i < n; i++) {
        if (rhos[i].rows() != d || rhos[i].cols() != d) {
            throw ValidationError("state " + std::to_string(i) + " does not match dimension " + std::to_string(d));
        }
        hermitian_eig(rhos[i], tol.hermitian);
    }
    const auto id = ComplexMatrix::identity(d);
    const double relax = 1.6;
    double sigma = 1.0;

    std::vector<ComplexMatrix> z(n, Complex(1.0 / n) * id);
    std::vector<ComplexMatrix> u(n, ComplexMatrix(d, d));
    std::vector<ComplexMatrix> m(n);
    ComplexMatrix y(d, d);

    SdpResult best;
    best.primal_value = INFINITY;
    best.dual_value = -INFINITY;
    auto consider_primal = [&](const Certified &c) {
        if (c.ok && c.value < best.primal_value) {
            best.primal_value = c.value;
            best.measurement.elements = c.povm;
        }
    };
    consider_primal(certify_primal(z, rhos));

    int it = 0;
    for (it = 1; it <= opts.max_iterations; it++) {
        // M-step: projection of Z − U − ρ/σ onto {Σ M_i = I}; Y is the multiplier.
        ComplexMatrix sum_w(d, d);
        for (std::size_t i = 0; i < n; i++) {
            m[i] = z[i] - u[i] - Complex(1 / sigma) * rhos[i];
            sum_w += m[i];
        }
        y = Complex(sigma / n) * (id - sum_w);
        for (std::size_t i = 0; i < n; i++) {
            m[i] += Complex(1 / sigma) * y;
        }
        // Z-step with over-relaxation, then the scaled dual update.
        double primal_res = 0;
        double dual_res = 0;
        for (std::size_t i = 0; i < n; i++) {
            auto mh = Complex(relax) * m[i] + Complex(1 - relax) * z[i];
            auto z_new = project_psd((mh + u[i]).hermitian_part());
            u[i] += mh - z_new;
            double dz = frobenius_norm(z_new - z[i]);
            dual_res += dz * dz;
            double r = frobenius_norm(m[i] - z_new);
            primal_res += r * r;
            z[i] = std::move(z_new);
        }
        primal_res = std::sqrt(primal_res);
        dual_res = sigma * std::sqrt(dual_res);

        if (it % opts.check_every != 0 && it != opts.max_iterations) {
            continue;
        }
        consider_primal(certify_primal(z, rhos));
        auto yh = y.hermitian_part();
        double shift = dual_infeasibility(yh, rhos);
        double dual_value = std::real(yh.trace()) - shift * static_cast<double>(d);
        if (dual_value > best.dual_value) {
            best.dual_value = dual_value;
            best.dual_witness = yh - Complex(shift) * id;
        }
        bool decided = best.primal_value <= opts.decision_tol || best.dual_value >= opts.decision_tol;
        if (decided && best.primal_value - best.dual_value <= opts.gap_tol) {
            break;
        }
        // Residual balancing; U is rescaled so that σU stays fixed.
        if (it % (opts.check_every * 5) == 0) {
            double factor = 1;
            if (primal_res > 10 * dual_res) {
                factor = 2;
            } else if (dual_res > 10 * primal_res) {
                factor = 0.5;
            }
            if (factor != 1) {
                sigma *= factor;
                for (auto &ui : u) {
                    ui *= Complex(1 / factor);
                }
            }
        }
    }
    best.iterations = std::min(it, opts.max_iterations);

    if (best.measurement.elements.empty()) {
        best.measurement.elements.assign(n, Complex(1.0 / n) * id);
        best.primal_value = 1.0;
    }
    bool verified = true;
    try {
        validate_povm(best.measurement, tol);
    } catch (const ValidationError &) {
        verified = false;
    }
    if (verified && best.primal_value <= opts.decision_tol) {
        best.status = SdpStatus::antidistinguishable;
    } else if (best.dual_value >= opts.decision_tol) {
        best.status = SdpStatus::not_antidistinguishable;
    } else {
        best.status = SdpStatus::undecided;
    }
    return best;
}

SdpResult solve_exclusion_sdp(std::span<const ComplexVector> states, const SdpOptions &opts, const Tolerances &tol) {
    gram(states, tol);
    auto rhos = density_matrices(states);
    return solve_exclusion_sdp(std::span<const ComplexMatrix>(rhos), opts, tol);
}

Povm merge_to_exact_form(const Povm &measurement, std::span<const ComplexMatrix> rhos, double tol) {
    std::size_t n = rhos.size();
    if (n == 0) {
        throw ValidationError("merge_to_exact_form: no states");
    }
    std::size_t d = rhos[0].rows();
    Povm out;
    out.elements.assign(n, ComplexMatrix(d, d));
    for (std::size_t k = 0; k < measurement.elements.size(); k++) {
        const auto &e = measurement.elements[k];
        std::size_t target = n;
        double best = INFINITY;
        for (std::size_t i = 0; i < n; i++) {
            double v = real_trace_product(e, rhos[i]);
            best = std::min(best, v);
            if (v <= tol) {
                target = i;
                break;
            }
        }
        if (target == n) {
            std::ostringstream msg;
            msg << "measurement element " << k << " annihilates no state (smallest Tr[M rho] = " << best
                << "); not an antidistinguishing measurement";
            throw ValidationError(msg.str());
        }
        out.elements[target] += e;
    }
    return out;
}

}  // namespace fnl
