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

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    using namespace polya::cli;

    CLI::App app{"Certified Polya degree bounds for polynomials positive on [0, inf)"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit the machine-readable record instead of a table")->configurable();

    std::string poly;
    AnalyzeOptions analyze;
    std::optional<unsigned> cap;
    auto* a = app.add_subcommand("analyze", "Certify positivity, compute L, lambda, both bounds and the minimal m");
    a->add_option("poly", poly, "Coefficients ascending, e.g. 1,-1,1")->required();
    a->add_option("--tol", analyze.tol, "Width of the certified lambda interval (rational)")->capture_default_str();
    a->add_option("--cap", cap, "Largest m tried by the minimal-m search");
    a->add_flag("--json", as_json);

    std::string mm_tol = analyze.tol;
    auto* mm = app.add_subcommand("minimal-m", "Smallest m making (1+x)^m P(x) coefficient-positive");
    mm->add_option("poly", poly, "Coefficients ascending")->required();
    mm->add_option("--cap", cap, "Largest m tried (default max(64, 4 * Powers-Reznick threshold))");
    mm->add_option("--tol", mm_tol, "Lambda tolerance used for the default cap")->capture_default_str();
    mm->add_flag("--json", as_json);

    VerifyOptions verify;
    auto* v = app.add_subcommand("verify", "Run an exact verification suite");
    v->add_option("--suite", verify.suite, "identity | h-formulas | sign-table | partial-fractions")
        ->check(CLI::IsMember({"identity", "h-formulas", "sign-table", "partial-fractions"}))
        ->capture_default_str();
    v->add_option("--trials", verify.trials, "Random polynomials for the identity suite")->capture_default_str();
    v->add_option("--seed", verify.seed, "Seed for random suites")->capture_default_str();
    v->add_option("--d", verify.d, "Degree for the sign-table suite (3 or 4)")->check(CLI::IsMember({3, 4}))->capture_default_str();
    v->add_option("--m-max", verify.m_max, "Largest m (identity and sign-table suites)")->capture_default_str();
    v->add_flag("--json", as_json);

    SweepOptions sweep;
    auto* s = app.add_subcommand("sweep", "Check (m+1) * sum_j C(d,j)|f(1/(m+d)) - f(0)| <= C_d on a (c, m) grid");
    s->add_option("--d", sweep.d, "Degree (3 or 4)")->check(CLI::IsMember({3, 4}))->capture_default_str();
    s->add_option("--m-max", sweep.m_max, "Largest m")->capture_default_str();
    s->add_option("--grid", sweep.grid, "Grid denominator for c")->capture_default_str();
    s->add_flag("--json", as_json);

    EstimateOptions estimate;
    auto* e = app.add_subcommand("estimate-cd", "Maximise the partial-fraction bound sum over c");
    e->add_option("--d", estimate.d, "Degree")->capture_default_str();
    e->add_option("--grid", estimate.grid, "Grid denominator for c")->capture_default_str();
    e->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& ok) {
        return app.exit(ok);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return kInputError;
    }

    CommandResult result;
    if (a->parsed()) {
        analyze.cap = cap;
        result = cmd_analyze(poly, analyze);
    } else if (mm->parsed()) {
        result = cmd_minimal_m(poly, cap, mm_tol);
    } else if (v->parsed()) {
        result = cmd_verify(verify);
    } else if (s->parsed()) {
        result = cmd_sweep(sweep);
    } else {
        result = cmd_estimate_cd(estimate);
    }

    if (as_json) {
        std::cout << result.record.dump(2) << '\n';
    } else {
        (result.exit_code == kInputError ? std::cerr : std::cout) << result.text;
    }
    return result.exit_code;
}
