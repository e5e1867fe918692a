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

#include "fnl/io/json_io.h"

#include <fstream>
#include <sstream>

#include "fnl/errors.h"
#include "fnl/numkit/rational.h"

namespace fnl {

namespace {

const Json &require(const Json &j, const char *key, const char *context) {
    if (!j.is_object() || !j.contains(key)) {
        throw ValidationError(std::string(context) + ": missing field '" + key + "'");
    }
    return j.at(key);
}

double number(const Json &j, const char *context) {
    if (!j.is_number()) {
        throw ValidationError(std::string(context) + ": expected a number, got " + j.dump());
    }
    return j.get<double>();
}

int integer(const Json &j, const char *context) {
    if (!j.is_number_integer()) {
        throw ValidationError(std::string(context) + ": expected an integer, got " + j.dump());
    }
    return j.get<int>();
}

const Json &array(const Json &j, std::size_t size, const char *context) {
    if (!j.is_array() || j.size() != size) {
        std::ostringstream msg;
        msg << context << ": expected an array of length " << size << ", got " << j.dump().substr(0, 80);
        throw ValidationError(msg.str());
    }
    return j;
}

BigRational rational_from_json(const Json &j) {
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return BigRational(j.get<long>());
    }
    throw ValidationError("exact behavior entries must be \"p/q\" strings or integers, got " + j.dump());
}

template <typename T, typename F>
Json probs_to_json(const BehaviorTable<T> &b, F &&entry) {
    const auto &d = b.dims();
    Json xs = Json::array();
    for (int x = 0; x < d.n; x++) {
        Json ys = Json::array();
        for (int y = 0; y < d.np; y++) {
            Json as = Json::array();
            for (int a = 0; a < d.ma; a++) {
                Json bs = Json::array();
                for (int bb = 0; bb < d.mb; bb++) {
                    bs.push_back(entry(b.at(a, bb, x, y)));
                }
                as.push_back(std::move(bs));
            }
            ys.push_back(std::move(as));
        }
        xs.push_back(std::move(ys));
    }
    return xs;
}

template <typename T>
Json lc_to_json(const LcResult<T> &r, bool exact) {
    auto value = [&](const T &v) -> Json {
        if constexpr (std::is_same_v<T, BigRational>) {
            return to_fraction_string(v);
        } else {
            return v;
        }
    };
    Json j;
    j["lc"] = value(r.lc);
    j["lc_float"] = to_double(r.lc);
    j["exact"] = exact;
    j["fully_nonlocal"] = to_double(r.lc) == 0;
    j["certified"] = r.certified;
    j["dual_objective"] = value(r.dual_objective);
    j["gap"] = r.gap;
    j["strategies_total"] = r.strategies_total;
    j["strategies_kept"] = r.strategies_kept;
    j["pivots"] = r.pivots;
    Json w = Json::array();
    for (const auto &[s, weight] : r.weights) {
        Json e = to_json(s);
        e["weight"] = value(weight);
        w.push_back(std::move(e));
    }
    j["weights"] = std::move(w);
    Json dual = Json::array();
    for (const auto &y : r.dual) {
        dual.push_back(value(y));
    }
    j["dual"] = std::move(dual);
    j["residual"] = r.residual ? to_json(*r.residual) : Json(nullptr);
    return j;
}

}  // namespace

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw ValidationError("malformed JSON in '" + path + "': " + e.what());
    }
}

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const ComplexVector &v) {
    Json j = Json::array();
    for (const auto &z : v) {
        j.push_back(to_json(z));
    }
    return j;
}

Json to_json(const ComplexMatrix &m) {
    Json j = Json::array();
    for (std::size_t r = 0; r < m.rows(); r++) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); c++) {
            row.push_back(to_json(m(r, c)));
        }
        j.push_back(std::move(row));
    }
    return j;
}

Complex complex_from_json(const Json &j) {
    if (j.is_number()) {
        return Complex(j.get<double>(), 0);
    }
    array(j, 2, "complex number [re, im]");
    return Complex(number(j[0], "real part"), number(j[1], "imaginary part"));
}

ComplexVector vector_from_json(const Json &j) {
    if (!j.is_array() || j.empty()) {
        throw ValidationError("vector: expected a nonempty array of [re, im] pairs");
    }
    ComplexVector v;
    for (const auto &z : j) {
        v.push_back(complex_from_json(z));
    }
    return v;
}

ComplexMatrix matrix_from_json(const Json &j) {
    if (!j.is_array() || j.empty()) {
        throw ValidationError("matrix: expected a nonempty array of rows");
    }
    std::size_t rows = j.size();
    std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    ComplexMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; r++) {
        if (!j[r].is_array() || j[r].size() != cols) {
            throw ValidationError("matrix: row " + std::to_string(r) + " has the wrong length");
        }
        for (std::size_t c = 0; c < cols; c++) {
            m(r, c) = complex_from_json(j[r][c]);
        }
    }
    return m;
}

Json to_json(const ScenarioDims &d) { return Json{{"n", d.n}, {"np", d.np}, {"ma", d.ma}, {"mb", d.mb}}; }

ScenarioDims dims_from_json(const Json &j) {
    ScenarioDims d{integer(require(j, "n", "dims"), "dims.n"), integer(require(j, "np", "dims"), "dims.np"),
                   integer(require(j, "ma", "dims"), "dims.ma"), integer(require(j, "mb", "dims"), "dims.mb")};
    if (d.n < 1 || d.np < 1 || d.ma < 1 || d.mb < 1) {
        throw ValidationError("dims: all of n, np, ma, mb must be positive");
    }
    return d;
}

Json to_json(const RealBehavior &b) {
    return Json{{"dims", to_json(b.dims())}, {"probs", probs_to_json(b, [](double p) { return Json(p); })},
                {"exact", false}};
}

Json to_json(const RationalBehavior &b) {
    return Json{{"dims", to_json(b.dims())},
                {"probs", probs_to_json(b, [](const BigRational &p) { return Json(to_fraction_string(p)); })},
                {"exact", true}};
}

ParsedBehavior behavior_from_json(const Json &j) {
    auto dims = dims_from_json(require(j, "dims", "behavior"));
    bool exact = j.contains("exact") && j.at("exact").is_boolean() && j.at("exact").get<bool>();
    const auto &probs = array(require(j, "probs", "behavior"), dims.n, "probs (x)");
    ParsedBehavior out{RealBehavior(dims), std::nullopt};
    RationalBehavior rational(dims);
    for (int x = 0; x < dims.n; x++) {
        array(probs[x], dims.np, "probs[x] (y)");
        for (int y = 0; y < dims.np; y++) {
            array(probs[x][y], dims.ma, "probs[x][y] (a)");
            for (int a = 0; a < dims.ma; a++) {
                array(probs[x][y][a], dims.mb, "probs[x][y][a] (b)");
                for (int b = 0; b < dims.mb; b++) {
                    const auto &e = probs[x][y][a][b];
                    if (exact) {
                        rational.at(a, b, x, y) = rational_from_json(e);
                        out.real.at(a, b, x, y) = to_double(rational.at(a, b, x, y));
                    } else if (e.is_string()) {
                        out.real.at(a, b, x, y) = to_double(parse_rational(e.get<std::string>()));
                    } else {
                        out.real.at(a, b, x, y) = number(e, "probability");
                    }
                }
            }
        }
    }
    if (exact) {
        out.exact = std::move(rational);
    }
    return out;
}

Json to_json(const BipartitePureState &s) {
    return Json{{"dim", s.dim()}, {"schmidt", s.coeffs()}, {"basis_a", to_json(s.basis_a())},
                {"basis_b", to_json(s.basis_b())}};
}

BipartitePureState state_from_json(const Json &j, const Tolerances &tol) {
    if (!j.is_object()) {
        throw ValidationError("state: expected an object with 'schmidt' or 'vector'");
    }
    if (j.contains("schmidt")) {
        std::vector<double> coeffs;
        for (const auto &c : j.at("schmidt")) {
            coeffs.push_back(number(c, "schmidt coefficient"));
        }
        if (j.contains("basis_a") || j.contains("basis_b")) {
            return BipartitePureState::from_schmidt(coeffs, matrix_from_json(require(j, "basis_a", "state")),
                                                    matrix_from_json(require(j, "basis_b", "state")), tol);
        }
        return BipartitePureState::from_schmidt(coeffs, tol);
    }
    if (j.contains("vector")) {
        auto v = vector_from_json(j.at("vector"));
        int dim = integer(require(j, "dim", "state"), "state.dim");
        if (dim < 1) {
            throw ValidationError("state.dim must be positive");
        }
        return BipartitePureState::from_vector(v, static_cast<std::size_t>(dim), tol);
    }
    throw ValidationError("state: expected field 'schmidt' or 'vector'");
}

StateList state_list_from_json(const Json &j) {
    StateList out;
    const Json *vectors = nullptr;
    if (j.is_array()) {
        vectors = &j;
    } else if (j.is_object() && j.contains("states")) {
        vectors = &j.at("states");
    } else if (j.is_object() && j.contains("density_matrices")) {
        for (const auto &m : j.at("density_matrices")) {
            out.densities.push_back(matrix_from_json(m));
        }
    } else {
        throw ValidationError("states file: expected 'states' (vectors) or 'density_matrices'");
    }
    if (vectors) {
        if (!vectors->is_array()) {
            throw ValidationError("states: expected an array of vectors");
        }
        for (const auto &v : *vectors) {
            out.vectors.push_back(vector_from_json(v));
        }
        out.densities = density_matrices(out.vectors);
    }
    if (out.densities.empty()) {
        throw ValidationError("states file contains no states");
    }
    return out;
}

Json to_json(const BasisFamily &f) {
    Json bases = Json::array();
    for (const auto &b : f.bases) {
        bases.push_back(to_json(b));
    }
    return Json{{"dim", f.dim}, {"bases", std::move(bases)}};
}

BasisFamily basis_family_from_json(const Json &j) {
    BasisFamily f;
    const auto &bases = require(j, "bases", "basis family");
    if (!bases.is_array() || bases.empty()) {
        throw ValidationError("basis family: 'bases' must be a nonempty array of matrices");
    }
    for (const auto &b : bases) {
        auto m = matrix_from_json(b);
        if (m.rows() != m.cols()) {
            throw ValidationError("basis family: every basis must be a square matrix");
        }
        f.bases.push_back(std::move(m));
    }
    f.dim = f.bases[0].rows();
    if (j.contains("dim") && integer(j.at("dim"), "dim") != static_cast<int>(f.dim)) {
        throw ValidationError("basis family: 'dim' does not match the matrices");
    }
    for (const auto &b : f.bases) {
        if (b.rows() != f.dim) {
            throw ValidationError("basis family: bases have different dimensions");
        }
    }
    return f;
}

Json to_json(const Povm &p) {
    Json e = Json::array();
    for (const auto &m : p.elements) {
        e.push_back(to_json(m));
    }
    return Json{{"elements", std::move(e)}};
}

Json to_json(const DeterministicStrategy &s) { return Json{{"alpha", s.alpha}, {"beta", s.beta}}; }

Json to_json(const Cell &c) { return Json{{"a", c.a}, {"b", c.b}, {"x", c.x}, {"y", c.y}}; }

Json to_json(const Tolerances &t) {
    return Json{{"hermitian", t.hermitian},         {"reconstruction", t.reconstruction},
                {"normalization", t.normalization}, {"povm_sum", t.povm_sum},
                {"povm_psd", t.povm_psd},           {"probability_sum", t.probability_sum},
                {"nonsignaling", t.nonsignaling},   {"zero", t.zero},
                {"lp_zero", t.lp_zero},             {"lp_pivot", t.lp_pivot},
                {"sdp_decision", t.sdp_decision},   {"threshold_slack", t.threshold_slack},
                {"mub", t.mub},                     {"rank", t.rank}};
}

Json to_json(const MubReport &r) {
    return Json{{"max_overlap_deviation", r.max_overlap_deviation},
                {"max_unitarity_residual", r.max_unitarity_residual},
                {"unitary", r.unitary},
                {"unbiased", r.unbiased}};
}

Json to_json(const FrobeniusReport &r) {
    return Json{{"sufficient", r.sufficient},
                {"norm", r.norm},
                {"bound", r.bound},
                {"pairwise_threshold", r.pairwise_threshold},
                {"max_overlap", r.max_overlap}};
}

Json to_json(const SdpResult &r, bool include_measurement) {
    Json j{{"status", to_string(r.status)}, {"primal_value", r.primal_value}, {"dual_value", r.dual_value},
           {"gap", r.gap()},           {"iterations", r.iterations}};
    if (include_measurement) {
        j["measurement"] = to_json(r.measurement);
        j["dual_witness"] = to_json(r.dual_witness);
    }
    return j;
}

Json to_json(const ZeroPatternReport &r) {
    Json zeros = Json::array();
    for (const auto &c : r.zeros) {
        zeros.push_back(to_json(c));
    }
    Json j{{"zeros", std::move(zeros)},
           {"strategy_count", r.strategy_count_saturated ? Json(nullptr) : Json(r.strategy_count)},
           {"strategy_count_saturated", r.strategy_count_saturated},
           {"witnesses_enumerated", r.witnesses_enumerated},
           {"unwitnessed", r.unwitnessed},
           {"fully_nonlocal", r.fully_nonlocal}};
    if (r.witnesses_enumerated) {
        std::uint64_t excluded = 0;
        for (auto w : r.witness) {
            excluded += w >= 0;
        }
        j["excluded_strategies"] = excluded;
        j["witness"] = r.witness;
    }
    j["first_unwitnessed"] = r.first_unwitnessed ? to_json(*r.first_unwitnessed) : Json(nullptr);
    return j;
}

Json to_json(const BellFunctional &f) {
    return Json{{"dims", to_json(f.dims)},
                {"coeffs", f.coeffs},
                {"w_local", f.w_local},
                {"w_nonsignaling", f.w_nonsignaling},
                {"best_local", f.best_local ? to_json(*f.best_local) : Json(nullptr)}};
}

Json to_json(const RationalLcResult &r) { return lc_to_json(r, true); }

Json to_json(const RealLcResult &r) { return lc_to_json(r, false); }

Json to_json(const ConditionCheck &c) { return Json{{"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}}; }

Json to_json(const OverlapBounds &b) {
    return Json{{"sqrt_lambda_max", b.sqrt_lambda_max}, {"lmin_bound", b.lmin_bound}, {"fmin", b.fmin}, {"k", b.k}};
}

Json to_json(const BoundReport &r) {
    Json j{{"lambda", r.lambda},          {"d", r.d},
           {"n", r.n},                    {"overlap_bounds", to_json(r.overlaps)},
           {"applicable", r.applicable}};
    if (r.applicable) {
        j["quadratic"] = to_json(r.quadratic);
        j["max_form"] = to_json(r.max_form);
        j["refined"] = to_json(r.refined);
    } else {
        j["note"] = r.note;
    }
    return j;
}

Json to_json(const ActivationResult &r) { return Json{{"c", r.c}, {"threshold", r.threshold}, {"k", r.k}}; }

Json to_json(const AlphaEvidence &e) {
    Json zero_cells = Json::array();
    for (const auto &c : e.zero_cells) {
        zero_cells.push_back(to_json(c));
    }
    Json j{{"alpha", e.alpha},
           {"status", to_string(e.status)},
           {"method", e.method},
           {"gram_frobenius_sq", e.gram_frobenius_sq},
           {"gram_bound_sq", e.gram_bound_sq},
           {"frobenius_pass", e.frobenius_pass}};
    if (e.sdp_status) {
        j["sdp"] = Json{{"status", to_string(*e.sdp_status)},
                        {"primal_value", *e.sdp_primal},
                        {"dual_value", *e.sdp_dual},
                        {"iterations", e.sdp_iterations}};
    }
    j["bob_setting"] = e.bob_setting;
    j["zero_cells"] = std::move(zero_cells);
    return j;
}

Json to_json(const FnlCertificate &c) {
    Json excluded = Json::array();
    for (const auto &[x, a] : c.excluded_outcomes) {
        excluded.push_back(Json{{"x", x}, {"a", a}});
    }
    Json failures = Json::array();
    for (const auto &[i, reason] : c.failures) {
        failures.push_back(Json{{"index", i}, {"alpha", c.evidence[i].alpha}, {"reason", reason}});
    }
    Json evidence = Json::array();
    for (const auto &e : c.evidence) {
        evidence.push_back(to_json(e));
    }
    Json j{{"verdict", to_string(c.verdict)},
           {"d", c.d},
           {"lambda", c.lambda},
           {"n", c.n},
           {"method", to_string(c.method)},
           {"alpha_sets", c.evidence.size()},
           {"frobenius_passed", c.frobenius_passed},
           {"sdp_passed", c.sdp_passed},
           {"bob_settings", c.bob_settings},
           {"excluded_outcomes", std::move(excluded)},
           {"failures", std::move(failures)},
           {"evidence", std::move(evidence)}};
    if (!c.bob_measurements.empty()) {
        Json m = Json::array();
        for (const auto &p : c.bob_measurements) {
            m.push_back(to_json(p));
        }
        j["bob_measurements"] = std::move(m);
    }
    return j;
}

Json to_json(const RunManifest &m) {
    return Json{{"command", m.command},
                {"seed", m.seed},
                {"tolerances", to_json(m.tolerances)},
                {"version", m.version},
                {"wall_time_seconds", m.wall_time_seconds}};
}

}  // namespace fnl
