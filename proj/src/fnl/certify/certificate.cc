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

#include "fnl/certify/certificate.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "fnl/certify/bounds.h"
#include "fnl/errors.h"

namespace fnl {

std::string to_string(CertifyMethod m) {
    switch (m) {
        case CertifyMethod::frobenius:
            return "frobenius";
        case CertifyMethod::sdp:
            return "sdp";
        case CertifyMethod::automatic:
            return "auto";
    }
    return "auto";
}

CertifyMethod parse_certify_method(const std::string &s) {
    if (s == "frobenius") {
        return CertifyMethod::frobenius;
    }
    if (s == "sdp") {
        return CertifyMethod::sdp;
    }
    if (s == "auto" || s == "both") {
        return CertifyMethod::automatic;
    }
    throw ValidationError("unknown method '" + s + "' (expected frobenius, sdp or auto)");
}

std::string to_string(AlphaStatus s) {
    switch (s) {
        case AlphaStatus::antidistinguishable:
            return "antidistinguishable";
        case AlphaStatus::inconclusive:
            return "inconclusive";
        case AlphaStatus::not_antidistinguishable:
            return "not_antidistinguishable";
        case AlphaStatus::undecided:
            return "undecided";
    }
    return "undecided";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::certified:
            return "certified";
        case Verdict::not_certified:
            return "not_certified";
        case Verdict::undecided:
            return "undecided";
    }
    return "undecided";
}

namespace {

MeasurementSet alice_measurements(const BipartitePureState &state, const BasisFamily &alice, bool align) {
    if (alice.dim != static_cast<std::size_t>(state.dim())) {
        std::ostringstream msg;
        msg << "Alice's bases act on dimension " << alice.dim << ", the state has local dimension " << state.dim();
        throw ValidationError(msg.str());
    }
    std::vector<Povm> povms;
    for (const auto &u : alice.bases) {
        povms.push_back(Povm::from_basis(align ? state.basis_a() * u : u));
    }
    return MeasurementSet(std::move(povms));
}

void settle(AlphaEvidence &ev, const std::vector<ComplexVector> &states, const CertifyOptions &opts) {
    auto g = gram(states, opts.tol);
    auto fr = frobenius_criterion(g, opts.tol.threshold_slack);
    ev.gram_frobenius_sq = g.frobenius_squared();
    ev.gram_bound_sq = static_cast<double>(states.size() * states.size()) / 2;
    ev.frobenius_pass = fr.sufficient;
    if (opts.method != CertifyMethod::sdp && fr.sufficient) {
        ev.method = "frobenius";
        ev.status = AlphaStatus::antidistinguishable;
        return;
    }
    if (opts.method == CertifyMethod::frobenius) {
        ev.method = "frobenius";
        ev.status = AlphaStatus::inconclusive;
        return;
    }
    auto r = solve_exclusion_sdp(std::span<const ComplexVector>(states), opts.sdp, opts.tol);
    ev.method = "sdp";
    ev.sdp_primal = r.primal_value;
    ev.sdp_dual = r.dual_value;
    ev.sdp_status = r.status;
    ev.sdp_iterations = r.iterations;
    switch (r.status) {
        case SdpStatus::antidistinguishable:
            ev.status = AlphaStatus::antidistinguishable;
            break;
        case SdpStatus::not_antidistinguishable:
            ev.status = AlphaStatus::not_antidistinguishable;
            break;
        case SdpStatus::undecided:
            ev.status = AlphaStatus::undecided;
            break;
    }
}

template <typename F>
void parallel_for(std::size_t count, int jobs, F &&f) {
    unsigned workers = jobs > 0 ? static_cast<unsigned>(jobs) : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; i++) {
            f(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (unsigned w = 0; w < workers; w++) {
        pool.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) {
                    return;
                }
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) {
                        error = std::current_exception();
                    }
                    next.store(count);
                }
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

bool excludes(const Povm &m, const std::vector<ComplexVector> &states, double tol) {
    for (std::size_t x = 0; x < states.size(); x++) {
        if (expectation(m.elements[x], states[x]) > tol) {
            return false;
        }
    }
    return true;
}

}  // namespace

FnlCertificate certify_full_nonlocality(const BipartitePureState &state, const BasisFamily &alice,
                                        const CertifyOptions &opts) {
    auto meas = alice_measurements(state, alice, opts.align_to_schmidt);
    auto fam = post_measurement_states(state, meas, opts.tol, opts.zero_weight);

    FnlCertificate cert;
    cert.d = state.dim();
    cert.lambda = state.coeffs();
    cert.n = static_cast<int>(meas.settings());
    cert.method = opts.method;

    std::vector<std::vector<int>> choices(cert.n);
    long double total = 1;
    for (int x = 0; x < cert.n; x++) {
        choices[x] = fam.realizable_outcomes(x);
        for (int a = 0; a < static_cast<int>(fam.outcomes(x)); a++) {
            if (!fam.at(x, a).realizable()) {
                cert.excluded_outcomes.emplace_back(x, a);
            }
        }
        total *= static_cast<long double>(choices[x].size());
    }
    if (total > static_cast<long double>(opts.cap)) {
        std::ostringstream msg;
        msg.precision(0);
        msg << std::fixed << "number of alpha-sets " << total << " exceeds the cap " << opts.cap;
        throw ResourceError(msg.str());
    }
    std::size_t count = static_cast<std::size_t>(total);
    cert.evidence.resize(count);

    auto decode = [&](std::size_t index) {
        std::vector<int> alpha(cert.n);
        for (int x = cert.n - 1; x >= 0; x--) {
            alpha[x] = choices[x][index % choices[x].size()];
            index /= choices[x].size();
        }
        return alpha;
    };
    auto states_of = [&](const std::vector<int> &alpha) {
        std::vector<ComplexVector> s;
        for (int x = 0; x < cert.n; x++) {
            s.push_back(fam.at(x, alpha[x]).state);
        }
        return s;
    };

    parallel_for(count, opts.jobs, [&](std::size_t i) {
        auto &ev = cert.evidence[i];
        ev.alpha = decode(i);
        settle(ev, states_of(ev.alpha), opts);
    });

    // Bob's settings, assigned sequentially so the certificate does not depend on scheduling.
    int next_setting = 0;
    for (std::size_t i = 0; i < count; i++) {
        auto &ev = cert.evidence[i];
        if (ev.status != AlphaStatus::antidistinguishable) {
            continue;
        }
        if (opts.extract_measurements) {
            auto states = states_of(ev.alpha);
            int found = -1;
            for (std::size_t y = 0; y < cert.bob_measurements.size() && found < 0; y++) {
                if (excludes(cert.bob_measurements[y], states, opts.sdp.decision_tol)) {
                    found = static_cast<int>(y);
                }
            }
            if (found < 0) {
                auto r = solve_exclusion_sdp(std::span<const ComplexVector>(states), opts.sdp, opts.tol);
                if (r.status != SdpStatus::antidistinguishable) {
                    ev.status = AlphaStatus::undecided;
                    continue;
                }
                auto rhos = density_matrices(states);
                cert.bob_measurements.push_back(merge_to_exact_form(r.measurement, rhos, opts.sdp.decision_tol));
                found = static_cast<int>(cert.bob_measurements.size()) - 1;
            }
            ev.bob_setting = found;
        } else {
            ev.bob_setting = next_setting++;
        }
        for (int x = 0; x < cert.n; x++) {
            ev.zero_cells.push_back(Cell{ev.alpha[x], x, x, ev.bob_setting});
        }
    }
    cert.bob_settings = opts.extract_measurements ? static_cast<int>(cert.bob_measurements.size()) : next_setting;

    bool any_negative = false;
    for (std::size_t i = 0; i < count; i++) {
        const auto &ev = cert.evidence[i];
        if (ev.status == AlphaStatus::antidistinguishable) {
            (ev.method == "frobenius" ? cert.frobenius_passed : cert.sdp_passed)++;
            continue;
        }
        std::ostringstream reason;
        reason << to_string(ev.status);
        if (ev.method == "frobenius") {
            reason << ": |G|_F^2 = " << ev.gram_frobenius_sq << " > " << ev.gram_bound_sq;
        } else if (ev.sdp_primal) {
            reason << ": sdp primal " << *ev.sdp_primal << ", dual " << *ev.sdp_dual;
        }
        cert.failures.emplace_back(i, reason.str());
        any_negative |= ev.status == AlphaStatus::not_antidistinguishable || ev.status == AlphaStatus::inconclusive;
    }
    if (cert.failures.empty()) {
        cert.verdict = Verdict::certified;
    } else if (any_negative) {
        cert.verdict = Verdict::not_certified;
    } else {
        cert.verdict = Verdict::undecided;
    }
    return cert;
}

FnlCertificate qutrit_certify(const BipartitePureState &state, const CertifyOptions &opts) {
    if (state.dim() != 3) {
        throw ValidationError("qutrit certification needs d = 3, got d = " + std::to_string(state.dim()));
    }
    return certify_full_nonlocality(state, qutrit_five_set(), opts);
}

OverlapCheck check_overlap_bounds(const BipartitePureState &state, const BasisFamily &mubs) {
    auto meas = alice_measurements(state, mubs, true);
    auto fam = post_measurement_states(state, meas);
    auto ob = overlap_bounds(state.coeffs());
    OverlapCheck c;
    for (std::size_t x = 0; x < fam.settings(); x++) {
        for (std::size_t x2 = x + 1; x2 < fam.settings(); x2++) {
            double bound = x == 0 ? ob.sqrt_lambda_max : ob.fmin;
            double &worst = x == 0 ? c.worst_excess_first : c.worst_excess_other;
            for (std::size_t a = 0; a < fam.outcomes(x); a++) {
                for (std::size_t a2 = 0; a2 < fam.outcomes(x2); a2++) {
                    if (!fam.at(x, a).realizable() || !fam.at(x2, a2).realizable()) {
                        continue;
                    }
                    double o = std::abs(inner(fam.at(x, a).state, fam.at(x2, a2).state));
                    worst = std::max(worst, o - bound);
                }
            }
        }
    }
    return c;
}

}  // namespace fnl
