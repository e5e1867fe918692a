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

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

#include "fnl/errors.h"
#include "fnl/io/json_io.h"

using namespace fnl;

namespace {

struct Run {
    int code;
    Json out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "fnl");
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    Json j = out.str().empty() ? Json() : Json::parse(out.str());
    return Run{code, j, err.str()};
}

std::string temp_file(const std::string &name, const std::string &contents) {
    std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << contents;
    return path;
}

}  // namespace

TEST(parse_spectrum, repetition_syntax) {
    auto v = parse_spectrum("0.51,0.07*7");
    ASSERT_EQ(v.size(), 8u);
    EXPECT_EQ(v[0], 0.51);
    EXPECT_EQ(v[7], 0.07);
    EXPECT_THROW(parse_spectrum("0.5,abc"), ValidationError);
    EXPECT_THROW(parse_spectrum("0.5*0"), ValidationError);
    EXPECT_THROW(parse_spectrum("0.5x"), ValidationError);
}

TEST(run_cli, demos) {
    auto pr = run({"demo", "pr"});
    EXPECT_EQ(pr.code, 0);
    EXPECT_EQ(pr.out["lc"], "0/1");
    EXPECT_EQ(pr.out["fully_nonlocal"], true);
    auto pm = run({"demo", "peres-mermin"});
    EXPECT_EQ(pm.code, 0);
    EXPECT_EQ(pm.out["win_probability"], "1/1");
    EXPECT_EQ(pm.out["lc"], "0/1");
}

TEST(run_cli, activate_and_bounds) {
    auto a = run({"activate", "--p", "0.5", "--n", "3"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out["activation"]["k"], 2);
    auto b = run({"bounds", "--spectrum", "0.51,0.07*7", "--n", "9"});
    EXPECT_EQ(b.out["bounds"]["quadratic"]["pass"], true);
    auto l = run({"lc-bound", "--spectrum", "0.8,0.2", "--mode", "projective"});
    EXPECT_NEAR(l.out["bound"].get<double>(), 0.05, 1e-15);
}

TEST(run_cli, manifest_is_recorded) {
    auto r = run({"--seed", "17", "activate", "--p", "0.9", "--n", "3"});
    ASSERT_EQ(r.code, 0);
    const auto &m = r.out["manifest"];
    EXPECT_EQ(m["seed"], 17);
    EXPECT_EQ(m["version"], kVersion);
    EXPECT_EQ(m["command"][0], "fnl");
    EXPECT_TRUE(m["tolerances"].contains("sdp_decision"));
    EXPECT_GE(m["wall_time_seconds"].get<double>(), 0);
}

TEST(run_cli, negative_verdict_is_exit_zero) {
    auto path = temp_file("qubit.json", R"({"schmidt": [0.6, 0.4]})");
    auto r = run({"certify", "--state", path, "--method", "frobenius", "--summary"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out["certificate"]["verdict"], "not_certified");
    EXPECT_FALSE(r.out["certificate"].contains("evidence"));
}

TEST(run_cli, jobs_do_not_change_output) {
    auto path = temp_file("ququart.json", R"({"schmidt": [0.36, 0.23, 0.21, 0.20]})");
    auto one = run({"certify", "--state", path, "--jobs", "1"});
    auto three = run({"certify", "--state", path, "--jobs", "3"});
    ASSERT_EQ(one.code, 0);
    EXPECT_EQ(one.out["certificate"].dump(), three.out["certificate"].dump());
}

TEST(run_cli, exact_local_content_is_reproducible) {
    auto pr = run({"demo", "pr"});
    auto path = temp_file("pr.json", pr.out["behavior"].dump());
    auto a = run({"local-content", "--behavior", path});
    auto b = run({"local-content", "--behavior", path});
    EXPECT_EQ(a.out["local_content"].dump(), b.out["local_content"].dump());
    EXPECT_EQ(a.out["local_content"]["lc"], "0/1");
}

TEST(run_cli, exit_codes) {
    EXPECT_EQ(run({"frobnicate"}).code, kExitValidation);
    auto unknown = run({"demo", "pr", "--what"});
    EXPECT_EQ(unknown.code, kExitValidation);
    EXPECT_NE(unknown.err.find("Usage"), std::string::npos);
    EXPECT_EQ(run({"activate", "--p", "1", "--n", "3"}).code, kExitValidation);
    EXPECT_EQ(run({"mub", "gen", "--dim", "6"}).code, kExitValidation);
    EXPECT_EQ(run({"mub", "gen", "--dim", "1000"}).code, kExitResource);
    auto signaling = temp_file(
        "signaling.json",
        R"({"dims": {"n":1,"np":2,"ma":2,"mb":1}, "probs": [[[[1],[0]], [[0],[1]]]], "exact": false})");
    EXPECT_EQ(run({"local-content", "--behavior", signaling}).code, kExitValidation);
}

TEST(run_cli, resource_cap_from_environment) {
    auto path = temp_file("big.json", R"({"schmidt": [0.25, 0.25, 0.25, 0.25]})");
    setenv("FNL_DET_CAP", "100", 1);
    auto r = run({"certify", "--state", path});
    unsetenv("FNL_DET_CAP");
    EXPECT_EQ(r.code, kExitResource);
    EXPECT_NE(r.err.find("1024"), std::string::npos);
}
