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

#include "fnl/cli/cli.h"

#include <chrono>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "fnl/antidist/antidist.h"
#include "fnl/certify/bounds.h"
#include "fnl/certify/certificate.h"
#include "fnl/errors.h"
#include "fnl/io/json_io.h"
#include "fnl/mub/mub.h"
#include "fnl/nonlocality/local_content.h"
#include "fnl/nonlocality/reference.h"
#include "fnl/nonlocality/zero_pattern.h"
#include "fnl/numkit/rational.h"

namespace fnl {

std::vector<double> parse_spectrum(const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto star = item.find('*');
        std::string value = item.substr(0, star);
        std::size_t used = 0;
        double v = 0;
        int repeat = 1;
        try {
            v = std::stod(value, &used);
            if (star != std::string::npos) {
                std::size_t used_k = 0;
                std::string k = item.substr(star + 1);
                repeat = std::stoi(k, &used_k);
                if (used_k != k.size() || repeat < 1) {
                    throw std::invalid_argument("repeat");
                }
            }
        } catch (const std::exception &) {
            throw ValidationError("cannot parse spectrum entry '" + item + "'");
        }
        if (value.find_first_not_of(" \t", used) != std::string::npos) {
            throw ValidationError("cannot parse spectrum entry '" + item + "'");
        }
        out.insert(out.end(), repeat, v);
    }
    if (out.empty()) {
        throw ValidationError("spectrum is empty");
    }
    return out;
}

namespace {

struct Common {
    std::uint64_t seed = 0;
    int jobs = 1;
};

struct Session {
    std::vector<std::string> args;
    Common common;
    Tolerances tol;
    Limits limits = Limits::from_environment();
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    Json result;
    int exit = kExitVerdict;

    Json finish() {
        RunManifest m;
        m.command = args;
        m.seed = common.seed;
        m.tolerances = tol;
        m.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        result["manifest"] = to_json(m);
        return result;
    }
};

SdpOptions sdp_options(const Session &s) {
    SdpOptions o;
    o.decision_tol = s.tol.sdp_decision;
    o.max_iterations = s.limits.sdp_max_iterations;
    o.seed = s.common.seed;
    return o;
}

void run_antidist(Session &s, const std::string &path, const std::string &method) {
    auto list = state_list_from_json(read_json_file(path));
    bool pure = !list.vectors.empty();
    s.result["command"] = "antidist";
    s.result["n"] = list.densities.size();
    s.result["d"] = list.densities[0].rows();
    bool frob_pass = false;
    if (method != "sdp") {
        if (pure) {
            auto report = frobenius_criterion(gram(list.vectors, s.tol), s.tol.threshold_slack);
            frob_pass = report.sufficient;
            s.result["frobenius"] = to_json(report);
        } else {
            s.result["frobenius"] = nullptr;
        }
    }
    std::optional<SdpResult> sdp;
    if (method != "frobenius") {
        sdp = solve_exclusion_sdp(std::span<const ComplexMatrix>(list.densities), sdp_options(s), s.tol);
        Json j = to_json(*sdp);
        if (sdp->status == SdpStatus::antidistinguishable) {
            j["measurement"] = to_json(merge_to_exact_form(sdp->measurement, list.densities, s.tol.sdp_decision));
        }
        s.result["sdp"] = std::move(j);
    }
    std::string verdict;
    if (sdp && sdp->status == SdpStatus::not_antidistinguishable) {
        verdict = "not_antidistinguishable";
    } else if (frob_pass || (sdp && sdp->status == SdpStatus::antidistinguishable)) {
        verdict = "antidistinguishable";
    } else if (sdp) {
        verdict = "undecided";
        s.exit = kExitUndecided;
    } else {
        verdict = "inconclusive";
    }
    s.result["verdict"] = verdict;
}

void run_certify(Session &s, const std::string &state_path, const std::string &bases_path, const std::string &method,
                 int copies, bool extract, bool no_align, bool summary) {
    auto state = state_from_json(read_json_file(state_path), s.tol);
    if (copies > 1) {
        state = tensor_copies(state, copies, s.limits.dimension_cap);
    }
    BasisFamily family = bases_path.empty() ? standard_mubs(state.dim(), s.limits.dimension_cap)
                                            : basis_family_from_json(read_json_file(bases_path));
    CertifyOptions opts;
    opts.method = parse_certify_method(method);
    opts.sdp = sdp_options(s);
    opts.jobs = s.common.jobs;
    opts.extract_measurements = extract;
    opts.align_to_schmidt = !no_align;
    opts.cap = s.limits.deterministic_cap;
    opts.tol = s.tol;
    auto cert = certify_full_nonlocality(state, family, opts);
    s.result["command"] = "certify";
    s.result["copies"] = copies;
    s.result["certificate"] = to_json(cert);
    if (summary) {
        s.result["certificate"].erase("evidence");
    }
    if (cert.verdict == Verdict::undecided) {
        s.exit = kExitUndecided;
    }
}

Json lc_section(const ParsedBehavior &b, bool exact, const Session &s) {
    if (exact && !b.exact) {
        auto snapped = snap_behavior(b.real);
        if (!snapped) {
            throw ValidationError("--exact: behavior entries are not close to rationals with denominator <= 64");
        }
        return to_json(local_content_lp(*snapped, s.limits, s.tol));
    }
    if (b.exact) {
        return to_json(local_content_lp(*b.exact, s.limits, s.tol));
    }
    return to_json(local_content_lp(b.real, s.limits, s.tol));
}

Json zero_section(const ParsedBehavior &b, const Session &s) {
    return b.exact ? to_json(zero_pattern_check(*b.exact, s.limits.deterministic_cap))
                   : to_json(zero_pattern_check(b.real, s.tol.zero, s.limits.deterministic_cap));
}

Json functional_section(const ParsedBehavior &b, const Session &s) {
    auto f = b.exact ? bell_functional_from_zeros(*b.exact, s.limits.deterministic_cap)
                     : bell_functional_from_zeros(b.real, s.tol.zero, s.limits.deterministic_cap);
    Json j = to_json(f);
    j["value_on_behavior"] = f.evaluate(b.real);
    return j;
}

void run_demo(Session &s, const std::string &which) {
    ParsedBehavior b;
    s.result["command"] = "demo";
    if (which == "pr") {
        b.exact = pr_box();
        b.real = to_real(*b.exact);
        s.result["demo"] = "pr";
    } else if (which == "peres-mermin") {
        auto pm = peres_mermin_behavior();
        b.exact = pm.behavior;
        b.real = pm.born;
        s.result["demo"] = "peres-mermin";
        auto win = magic_square_win_probability(pm.behavior);
        s.result["win_probability"] = to_fraction_string(win);
        double snap_error = 0;
        for (std::size_t i = 0; i < pm.born.values().size(); i++) {
            snap_error = std::max(snap_error, std::abs(pm.born.values()[i] - to_double(pm.behavior.values()[i])));
        }
        s.result["born_max_snap_error"] = snap_error;
    } else {
        throw ValidationError("unknown demo '" + which + "' (expected pr or peres-mermin)");
    }
    auto lc = local_content_lp(*b.exact, s.limits, s.tol);
    s.result["lc"] = to_fraction_string(lc.lc);
    s.result["fully_nonlocal"] = sgn(lc.lc) == 0;
    s.result["behavior"] = to_json(*b.exact);
    s.result["local_content"] = to_json(lc);
    s.result["zero_pattern"] = zero_section(b, s);
    s.result["bell_functional"] = functional_section(b, s);
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Session s;
    s.args = args;
    CLI::App app{"Certify full nonlocality of bipartite pure states and bound local content.", "fnl"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", s.common.seed, "Seed recorded in the manifest and used for sampling")->default_val(0);
    app.add_option("--jobs", s.common.jobs, "Worker threads for per-alpha work (0 = all cores)")->default_val(1);

    std::string states_path, method = "both", tol_text;
    auto *antidist = app.add_subcommand("antidist", "Decide antidistinguishability of a state family");
    antidist->add_option("--states", states_path, "JSON file with 'states' or 'density_matrices'")->required();
    antidist->add_option("--method", method, "frobenius | sdp | both")
        ->check(CLI::IsMember({"frobenius", "sdp", "both"}));
    antidist->add_option("--tol", s.tol.sdp_decision, "Decision tolerance on the SDP optimum");

    std::string state_path, bases_path, cert_method = "auto";
    int copies = 1;
    bool extract = false, no_align = false, summary = false;
    auto *certify = app.add_subcommand("certify", "Certify full nonlocality of a pure state with Alice's bases");
    certify->add_option("--state", state_path, "State JSON file")->required();
    certify->add_option("--bases", bases_path, "Basis-family JSON file (default: standard MUBs for the dimension)");
    certify->add_option("--method", cert_method, "frobenius | sdp | auto")
        ->check(CLI::IsMember({"frobenius", "sdp", "auto"}));
    certify->add_option("--copies", copies, "Certify the k-fold tensor power of the state")->check(CLI::Range(1, 64));
    certify->add_flag("--extract-measurements", extract, "Solve for and deduplicate Bob's measurements");
    certify->add_flag("--no-align", no_align, "Use the bases as given rather than relative to the Schmidt basis");
    certify->add_flag("--summary", summary, "Omit per-alpha evidence from the output");

    std::string behavior_path;
    bool exact = false;
    auto *local_content = app.add_subcommand("local-content", "Local content of a behavior by linear programming");
    local_content->add_option("--behavior", behavior_path, "Behavior JSON file")->required();
    local_content->add_flag("--exact", exact, "Snap float entries to rationals and solve exactly");

    auto *zero_pattern = app.add_subcommand("zero-pattern", "Check that every deterministic strategy hits a zero cell");
    zero_pattern->add_option("--behavior", behavior_path, "Behavior JSON file")->required();
    zero_pattern->add_option("--zero-tol", s.tol.zero, "Float entries at or below this count as zero");

    auto *bell = app.add_subcommand("bell-functional", "Bell functional built from the zero cells of a behavior");
    bell->add_option("--behavior", behavior_path, "Behavior JSON file")->required();
    bell->add_option("--zero-tol", s.tol.zero, "Float entries at or below this count as zero");

    int dim = 0, count = 0;
    bool qutrit_five = false;
    std::string family_path;
    auto *mub = app.add_subcommand("mub", "Generate or verify mutually unbiased bases");
    mub->require_subcommand(1);
    auto *mub_gen = mub->add_subcommand("gen", "Generate a basis family");
    mub_gen->add_option("--dim", dim, "Dimension")->required();
    mub_gen->add_option("--count", count, "Keep only the first COUNT bases");
    mub_gen->add_flag("--qutrit-five", qutrit_five, "The five qutrit bases instead of the standard MUBs");
    auto *mub_verify = mub->add_subcommand("verify", "Verify unitarity and unbiasedness of a basis family");
    mub_verify->add_option("--file", family_path, "Basis-family JSON file")->required();

    std::string spectrum_text;
    int n = 0;
    auto *bounds = app.add_subcommand("bounds", "Evaluate the MUB sufficient conditions for a Schmidt spectrum");
    bounds->add_option("--spectrum", spectrum_text, "Comma-separated coefficients; v*k repeats v")->required();
    bounds->add_option("--n", n, "Number of MUBs")->required();

    double p = -1;
    auto *activate = app.add_subcommand("activate", "Copies needed for full nonlocality via MUBs");
    auto *p_opt = activate->add_option("--p", p, "Qubit state sqrt(p)|00> + sqrt(1-p)|11>");
    activate->add_option("--spectrum", spectrum_text, "Schmidt spectrum instead of --p")->excludes(p_opt);
    activate->add_option("--n", n, "Number of MUBs per copy")->required();

    std::string mode = "projective";
    int ma = 0, mb = 0;
    auto *lc_bound = app.add_subcommand("lc-bound", "Analytic lower bound on local content");
    lc_bound->add_option("--spectrum", spectrum_text, "Comma-separated coefficients; v*k repeats v")->required();
    lc_bound->add_option("--mode", mode, "rank1 | projective | povm")
        ->check(CLI::IsMember({"rank1", "projective", "povm"}));
    lc_bound->add_option("--ma", ma, "Alice's outcome count (rank1 mode)");
    lc_bound->add_option("--mb", mb, "Bob's outcome count (rank1 mode)");

    std::string demo_name;
    auto *demo = app.add_subcommand("demo", "Reference behaviors: pr | peres-mermin");
    demo->add_option("name", demo_name, "pr or peres-mermin")->required()->check(CLI::IsMember({"pr", "peres-mermin"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitValidation;
    }

    try {
        if (*antidist) {
            run_antidist(s, states_path, method);
        } else if (*certify) {
            run_certify(s, state_path, bases_path, cert_method, copies, extract, no_align, summary);
        } else if (*local_content) {
            auto b = behavior_from_json(read_json_file(behavior_path));
            s.result["command"] = "local-content";
            s.result["local_content"] = lc_section(b, exact, s);
        } else if (*zero_pattern) {
            auto b = behavior_from_json(read_json_file(behavior_path));
            s.result["command"] = "zero-pattern";
            s.result["zero_pattern"] = zero_section(b, s);
        } else if (*bell) {
            auto b = behavior_from_json(read_json_file(behavior_path));
            s.result["command"] = "bell-functional";
            s.result["bell_functional"] = functional_section(b, s);
        } else if (*mub_gen) {
            if (dim < 1 || dim > s.limits.dimension_cap) {
                throw ResourceError("dimension " + std::to_string(dim) + " outside [1, " +
                                    std::to_string(s.limits.dimension_cap) + "]");
            }
            BasisFamily f;
            if (qutrit_five) {
                if (dim != 3) {
                    throw ValidationError("--qutrit-five needs --dim 3");
                }
                f = qutrit_five_set();
            } else {
                f = standard_mubs(dim, s.limits.dimension_cap);
            }
            if (count > 0) {
                f = truncate(f, static_cast<std::size_t>(count));
            }
            s.result["command"] = "mub gen";
            s.result["family"] = to_json(f);
            s.result["report"] = to_json(verify_mub(f, s.tol.mub));
        } else if (*mub_verify) {
            auto f = basis_family_from_json(read_json_file(family_path));
            s.result["command"] = "mub verify";
            s.result["dim"] = f.dim;
            s.result["count"] = f.count();
            s.result["report"] = to_json(verify_mub(f, s.tol.mub));
        } else if (*bounds) {
            s.result["command"] = "bounds";
            s.result["bounds"] = to_json(mub_condition(parse_spectrum(spectrum_text), n, s.tol.threshold_slack));
        } else if (*activate) {
            std::vector<double> lambda;
            if (!spectrum_text.empty()) {
                lambda = parse_spectrum(spectrum_text);
            } else if (p >= 0) {
                if (p > 1) {
                    throw ValidationError("--p must lie in [0, 1]");
                }
                lambda = {p, 1 - p};
            } else {
                throw ValidationError("activate needs --p or --spectrum");
            }
            auto r = activation_copies(lambda, n, s.tol.threshold_slack);
            s.result["command"] = "activate";
            s.result["lambda"] = validated_spectrum(lambda);
            s.result["n"] = n;
            s.result["activation"] = to_json(r);
        } else if (*lc_bound) {
            auto lambda = parse_spectrum(spectrum_text);
            auto m = parse_lc_bound_mode(mode);
            s.result["command"] = "lc-bound";
            s.result["lambda"] = validated_spectrum(lambda);
            s.result["mode"] = to_string(m);
            s.result["bound"] = lc_lower_bound(lambda, m, ma, mb);
        } else if (*demo) {
            run_demo(s, demo_name);
        }
    } catch (const ValidationError &e) {
        err << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const UnsupportedError &e) {
        err << "unsupported: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ResourceError &e) {
        err << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const SolverError &e) {
        err << "solver undecided: " << e.what() << "\n";
        return kExitUndecided;
    }
    out << s.finish().dump(2) << "\n";
    return s.exit;
}

}  // namespace fnl
