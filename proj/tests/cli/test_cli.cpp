/*
   Copyright 2026 The polya-cert Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "commands.hpp"

using namespace polya::cli;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(POLYA_CERT_EXE) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("analyze worked examples") {
    const auto quad = cmd_analyze("1,-1,1", {});
    CHECK(quad.exit_code == kOk);
    CHECK(quad.record["L"] == "1");
    CHECK(quad.record["lambda_lo"] == "1/4");
    CHECK(quad.record["lambda_hi"] == "1/4");
    CHECK(quad.record["pr_threshold"] == "3");
    CHECK(quad.record["minimal_m"] == 3);

    const auto cubic = cmd_analyze("1,0,0,1", {});
    CHECK(cubic.exit_code == kOk);
    CHECK(cubic.record["improved_threshold"] == "6");
    CHECK(cubic.record["minimal_m"] == 2);

    const auto bin = cmd_analyze("1,4,6,4,1", {});
    CHECK(bin.record["equality_case"] == true);
    CHECK(bin.record["minimal_m"] == 0);
}

TEST_CASE("analyze rejects non-positive input with a witness") {
    const auto r = cmd_analyze("1,-1", {});
    CHECK(r.exit_code == kCheckFailed);
    CHECK(r.record["status"] == "has_nonneg_root");
    REQUIRE(r.record.contains("witness"));
    CHECK(r.record["witness"]["lo"] == "1");
}

TEST_CASE("malformed input is an input error") {
    CHECK(cmd_analyze("1,x,1", {}).exit_code == kInputError);
    CHECK(cmd_analyze("", {}).exit_code == kInputError);
    CHECK(cmd_analyze("1,-1,1", AnalyzeOptions{"0", std::nullopt}).exit_code == kInputError);
    CHECK(cmd_sweep(SweepOptions{5, 10, 10}).exit_code == kInputError);
}

TEST_CASE("minimal-m") {
    CHECK(cmd_minimal_m("1,-1,1", std::nullopt, "1/1000000000").record["minimal_m"] == 3);
    CHECK(cmd_minimal_m("1,4,6,4,1", std::nullopt, "1/1000000000").record["minimal_m"] == 0);
    const auto capped = cmd_minimal_m("1,-1,1", 1u, "1/1000000000");
    CHECK(capped.exit_code == kCheckFailed);
    CHECK(capped.record["minimal_m"] == "exceeded_cap");
}

TEST_CASE("verify suites pass") {
    for (const char* suite : {"identity", "h-formulas", "sign-table", "partial-fractions"}) {
        VerifyOptions opts;
        opts.suite = suite;
        opts.trials = 10;
        opts.m_max = 12;
        const auto r = cmd_verify(opts);
        INFO(suite);
        CHECK(r.exit_code == kOk);
        CHECK(r.record["result"] == "pass");
    }
    VerifyOptions bad;
    bad.suite = "nonsense";
    CHECK(cmd_verify(bad).exit_code == kInputError);
}

TEST_CASE("sweep report") {
    const auto r = cmd_sweep(SweepOptions{3, 20, 100});
    CHECK(r.exit_code == kOk);
    CHECK(r.record["report"]["violation_count"] == 0);
    CHECK(r.record["report"]["claimed_C_d"] == "3/2");
}

TEST_CASE("records carry the schema header") {
    const auto r = cmd_analyze("1,-1,1", {});
    CHECK(r.record["schema_version"] == kSchemaVersion);
    CHECK(r.record["tool"] == kToolName);
    CHECK(r.record["tool_version"] == kToolVersion);
    CHECK(r.record["command"] == "analyze");
    CHECK(r.record.contains("config"));
}

TEST_CASE("binary exit codes") {
    CHECK(run("analyze 1,-1,1").exit_code == 0);
    CHECK(run("analyze 1,-1").exit_code == 1);
    CHECK(run("minimal-m 1,-1,1 --cap 1").exit_code == 1);
    CHECK(run("analyze 1,abc").exit_code == 2);
    CHECK(run("no-such-command").exit_code == 2);
    CHECK(run("sweep --d 9").exit_code == 2);
}

TEST_CASE("binary output is deterministic and parses as JSON") {
    const auto a = run("--json sweep --d 4 --m-max 10 --grid 50");
    const auto b = run("--json sweep --d 4 --m-max 10 --grid 50");
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
    const auto doc = nlohmann::json::parse(a.out);
    CHECK(doc["schema_version"] == "1");

    const auto v1 = run("--json verify --suite identity --trials 5 --m-max 8 --seed 9");
    const auto v2 = run("verify --json --suite identity --trials 5 --m-max 8 --seed 9");
    CHECK(v1.out == v2.out);
    CHECK(nlohmann::json::parse(v1.out)["result"] == "pass");
}

TEST_CASE("version flag") {
    const auto r = run("--version");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1.0.0") != std::string::npos);
}
