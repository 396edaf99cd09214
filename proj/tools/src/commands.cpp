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

#include "commands.hpp"

#include <functional>
#include <iomanip>
#include <sstream>
#include <utility>
#include <vector>

#include "polya/bounds.hpp"
#include "polya/error.hpp"
#include "polya/expansion.hpp"
#include "polya/lemma_lab.hpp"
#include "polya/positivity.hpp"
#include "polya/sampling.hpp"

namespace polya::cli {

using json = nlohmann::ordered_json;

namespace {

json header(const std::string& command, json config) {
    json r;
    r["schema_version"] = kSchemaVersion;
    r["tool"] = kToolName;
    r["tool_version"] = kToolVersion;
    r["command"] = command;
    r["config"] = std::move(config);
    return r;
}

std::string str(const mpz_class& z) { return z.get_str(); }

/// Two-column text rendering of the scalar fields of a record.
class TextTable {
public:
    TextTable& row(std::string key, std::string value) {
        rows_.emplace_back(std::move(key), std::move(value));
        return *this;
    }
    std::string render() const {
        std::size_t width = 0;
        for (const auto& [k, v] : rows_) width = std::max(width, k.size());
        std::ostringstream os;
        for (const auto& [k, v] : rows_) os << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
        return os.str();
    }

private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

json to_json(const RootInterval& iv) { return json{{"lo", iv.lo.to_string()}, {"hi", iv.hi.to_string()}}; }

json to_json(const SweepCell& cell) {
    return json{{"c", cell.c.to_string()}, {"m", cell.m}, {"value", cell.value.to_string()}};
}

json to_json(const SweepReport& rep, bool with_m) {
    json r;
    r["d"] = rep.d;
    if (with_m) {
        r["m_min"] = rep.m_min;
        r["m_max"] = rep.m_max;
    }
    r["grid_denominator"] = rep.grid_denominator;
    r["max_value"] = rep.max_value.to_string();
    r["argmax_c"] = rep.argmax_c.to_string();
    if (with_m) r["argmax_m"] = rep.argmax_m;
    r["claimed_C_d"] = rep.claimed_C_d ? json(rep.claimed_C_d->to_string()) : json(nullptr);
    r["violation_count"] = rep.violation_count;
    json v = json::array();
    for (const auto& cell : rep.violations) v.push_back(to_json(cell));
    r["violations"] = std::move(v);
    r["display"] = json{{"max_value", rep.max_value.to_decimal()},
                        {"argmax_c", rep.argmax_c.to_decimal()},
                        {"claimed_C_d", rep.claimed_C_d ? json(rep.claimed_C_d->to_decimal()) : json(nullptr)}};
    return r;
}

CommandResult input_error(CommandResult res, const std::string& message) {
    res.exit_code = kInputError;
    res.record["error"] = message;
    res.text = "error: " + message + "\n";
    return res;
}

/// Runs body, mapping input-side exceptions to exit code 2.
CommandResult guarded(CommandResult base, const std::function<CommandResult(CommandResult)>& body) {
    try {
        return body(base);
    } catch (const ParseError& e) {
        return input_error(std::move(base), e.what());
    } catch (const UnsupportedDegree& e) {
        return input_error(std::move(base), e.what());
    } catch (const IndexOutOfRange& e) {
        return input_error(std::move(base), e.what());
    } catch (const ZeroPolynomial& e) {
        return input_error(std::move(base), e.what());
    }
}

Rational parse_tolerance(const std::string& text) {
    Rational tol = Rational::parse(text);
    if (tol.sign() <= 0) throw ParseError("tolerance must be positive, got '" + text + "'");
    return tol;
}

/// Not-positive record shared by analyze and minimal-m.
CommandResult not_positive(CommandResult res, const PositivityCertificate& cert) {
    res.exit_code = kCheckFailed;
    res.record["status"] = to_string(cert.status);
    res.record["witness"] = cert.witness ? to_json(*cert.witness) : json(nullptr);
    res.record["method_trace"] = cert.method_trace;
    TextTable t;
    t.row("status", to_string(cert.status));
    if (cert.witness) t.row("witness", "[" + cert.witness->lo.to_string() + ", " + cert.witness->hi.to_string() + "]");
    t.row("trace", cert.method_trace);
    res.text = t.render();
    return res;
}

}  // namespace

CommandResult cmd_analyze(const std::string& poly, const AnalyzeOptions& opts) {
    CommandResult base;
    base.record = header("analyze", json{{"poly", poly},
                                         {"tol", opts.tol},
                                         {"cap", opts.cap ? json(*opts.cap) : json(nullptr)}});
    return guarded(std::move(base), [&](CommandResult res) {
        const Polynomial p = Polynomial::parse(poly);
        const Rational tol = parse_tolerance(opts.tol);
        res.record["input"] = p.to_text();
        res.record["degree"] = p.degree();
        const auto cert = certify_positive(p);
        if (!cert.positive()) return not_positive(std::move(res), cert);

        const int d = p.degree();
        const InvariantReport inv = compute_invariants(p, tol);
        const BoundReport bounds = bound_report(d, inv.ratio_hi);
        const unsigned cap = opts.cap.value_or(default_cap(bounds.pr_threshold));
        const MinimalMResult mm = minimal_m(p, cap);
        const bool equality = is_scaled_binomial_power(p);

        json& r = res.record;
        r["status"] = to_string(cert.status);
        r["method_trace"] = cert.method_trace;
        r["L"] = inv.L.to_string();
        r["lambda_lo"] = inv.lambda_lo.to_string();
        r["lambda_hi"] = inv.lambda_hi.to_string();
        r["ratio_hi"] = inv.ratio_hi.to_string();
        r["L_ge_lambda"] = inv.L >= inv.lambda_lo;
        r["equality_case"] = equality;
        r["C_d"] = bounds.C_d ? json(bounds.C_d->to_string()) : json("n/a");
        r["pr_threshold"] = str(bounds.pr_threshold);
        r["improved_threshold"] = bounds.improved_threshold ? json(str(*bounds.improved_threshold)) : json("n/a");
        r["winner"] = to_string(bounds.comparison.winner);
        r["comparison_note"] = bounds.comparison.note;
        r["cap"] = cap;
        r["minimal_m"] = mm.minimal_m ? json(*mm.minimal_m) : json("exceeded_cap");
        if (mm.minimal_m) {
            const mpz_class m(*mm.minimal_m);
            r["slack_pr"] = str(bounds.pr_threshold - m);
            r["slack_improved"] = bounds.improved_threshold ? json(str(*bounds.improved_threshold - m)) : json("n/a");
        }
        r["display"] = json{{"L", inv.L.to_decimal()},
                            {"lambda_lo", inv.lambda_lo.to_decimal()},
                            {"lambda_hi", inv.lambda_hi.to_decimal()},
                            {"ratio_hi", inv.ratio_hi.to_decimal()}};

        TextTable t;
        t.row("polynomial", p.to_pretty())
            .row("status", to_string(cert.status))
            .row("L", inv.L.to_string())
            .row("lambda", "[" + inv.lambda_lo.to_string() + ", " + inv.lambda_hi.to_string() + "]  ~ " +
                               inv.lambda_lo.to_decimal())
            .row("L/lambda_lo", inv.ratio_hi.to_string() + "  ~ " + inv.ratio_hi.to_decimal())
            .row("equality case", equality ? "yes" : "no")
            .row("C_d", bounds.C_d ? bounds.C_d->to_string() : "n/a")
            .row("powers-reznick m >", str(bounds.pr_threshold - 1))
            .row("pr_threshold", str(bounds.pr_threshold))
            .row("improved_threshold", bounds.improved_threshold ? str(*bounds.improved_threshold) : "n/a")
            .row("winner", to_string(bounds.comparison.winner))
            .row("minimal_m", mm.minimal_m ? std::to_string(*mm.minimal_m) : "exceeded_cap (" + std::to_string(cap) + ")");
        res.text = t.render();
        res.exit_code = mm.minimal_m ? kOk : kCheckFailed;
        return res;
    });
}

CommandResult cmd_minimal_m(const std::string& poly, std::optional<unsigned> cap, const std::string& tol) {
    CommandResult base;
    base.record = header("minimal-m", json{{"poly", poly}, {"cap", cap ? json(*cap) : json(nullptr)}, {"tol", tol}});
    return guarded(std::move(base), [&](CommandResult res) {
        const Polynomial p = Polynomial::parse(poly);
        res.record["input"] = p.to_text();
        const auto cert = certify_positive(p);
        if (!cert.positive()) return not_positive(std::move(res), cert);
        unsigned used_cap = 0;
        if (cap) {
            used_cap = *cap;
        } else {
            const InvariantReport inv = compute_invariants(p, parse_tolerance(tol));
            used_cap = default_cap(powers_reznick_threshold(p.degree(), inv.ratio_hi));
        }
        const MinimalMResult mm = minimal_m(p, used_cap);
        res.record["cap"] = used_cap;
        res.record["minimal_m"] = mm.minimal_m ? json(*mm.minimal_m) : json("exceeded_cap");
        json failing = json::object();
        for (const auto& [m, k] : mm.first_failing_index) failing[std::to_string(m)] = k;
        res.record["first_failing_index"] = std::move(failing);
        res.text = mm.minimal_m ? std::to_string(*mm.minimal_m) + "\n" : "exceeded_cap\n";
        res.exit_code = mm.minimal_m ? kOk : kCheckFailed;
        return res;
    });
}

namespace {

struct SuiteOutcome {
    std::size_t checks = 0;
    std::size_t failures = 0;
    json first_failure = nullptr;
    json extra = json::object();
};

SuiteOutcome run_identity(const VerifyOptions& o) {
    SuiteOutcome out;
    PolynomialSampler sampler(o.seed);
    for (unsigned t = 0; t < o.trials; ++t) {
        const int degree = static_cast<int>(sampler.uniform(1, 6));
        const Polynomial p = sampler.integer_polynomial(degree);
        for (unsigned m = 0; m <= o.m_max; ++m) {
            ++out.checks;
            const auto check = verify_lemma_identity(p, m);
            if (!check.holds) {
                if (out.failures++ == 0) {
                    out.first_failure = json{{"poly", p.to_text()}, {"m", m}, {"k", *check.failing_k}};
                }
            }
        }
    }
    return out;
}

SuiteOutcome run_h_formulas() {
    SuiteOutcome out;
    for (int d : {3, 4}) {
        for (long k = 1; k < 100; ++k) {
            const Rational c{mpz_class(k), mpz_class(100)};
            const Rational mirror = Rational(1) - c;
            for (unsigned m = 0; m <= 20; ++m) {
                for (int j = 0; j <= d; ++j) {
                    const Rational derived = derive_h(c, j, d, m);
                    const Rational closed = explicit_h(c, j, d, m);
                    const Rational mirrored = derive_h(mirror, d - j, d, m);
                    out.checks += 2;
                    if (derived != closed || derived != mirrored) {
                        if (out.failures++ == 0) {
                            out.first_failure = json{{"d", d}, {"j", j}, {"c", c.to_string()}, {"m", m},
                                                     {"derived", derived.to_string()}, {"explicit", closed.to_string()},
                                                     {"mirrored", mirrored.to_string()}};
                        }
                    }
                }
            }
        }
    }
    return out;
}

json to_json(const SignTable& t) {
    json cols = json::array();
    for (const auto& c : t.columns) cols.push_back(json{{"label", c.label}, {"lo", c.lo.to_string()}, {"hi", c.hi.to_string()}});
    json rows = json::array();
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        json cells = json::array();
        for (auto v : t.verdicts[i]) cells.push_back(to_string(v));
        rows.push_back(json{{"j", t.rows[i]}, {"signs", std::move(cells)}});
    }
    return json{{"d", t.d}, {"m_min", t.m_min}, {"m_max", t.m_max}, {"columns", std::move(cols)}, {"rows", std::move(rows)}};
}

SuiteOutcome run_sign_table(const VerifyOptions& o) {
    SuiteOutcome out;
    const unsigned m_max = std::max(o.m_max, 1u);
    const SignTable t = sign_table(o.d, m_max);
    out.extra["table"] = to_json(t);
    if (o.d == 3) {
        const auto ref = reference_cubic_signs();
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            for (std::size_t col = 0; col < t.columns.size(); ++col) {
                ++out.checks;
                if (t.verdicts[i][col] != ref[i][col] && out.failures++ == 0) {
                    out.first_failure = json{{"j", t.rows[i]}, {"column", t.columns[col].label},
                                             {"computed", to_string(t.verdicts[i][col])},
                                             {"reference", to_string(ref[i][col])}};
                }
            }
        }
    } else {
        // No reference for d = 4; report the 212-denominator variant alongside.
        const std::vector<int> rows{0, 1, 2};
        const auto cols = quartic_sign_columns(212);
        out.extra["table_b212"] = to_json(sign_table(4, rows, cols, 1, m_max));
    }
    return out;
}

SuiteOutcome run_partial_fractions() {
    SuiteOutcome out;
    for (int d = 1; d <= 6; ++d) {
        for (int j = 0; j <= d; ++j) {
            for (long k = 0; k <= 50; ++k) {
                const Rational c{mpz_class(k), mpz_class(50)};
                ++out.checks;
                try {
                    (void)decompose_partial_fractions(c, j, d);
                } catch (const VerificationFailed& e) {
                    if (out.failures++ == 0) out.first_failure = json{{"d", d}, {"j", j}, {"c", c.to_string()}, {"detail", e.what()}};
                }
            }
        }
    }
    return out;
}

}  // namespace

CommandResult cmd_verify(const VerifyOptions& opts) {
    CommandResult base;
    base.record = header("verify", json{{"suite", opts.suite}, {"trials", opts.trials}, {"seed", opts.seed},
                                        {"d", opts.d}, {"m_max", opts.m_max}});
    return guarded(std::move(base), [&](CommandResult res) {
        SuiteOutcome out;
        if (opts.suite == "identity") {
            out = run_identity(opts);
        } else if (opts.suite == "h-formulas") {
            out = run_h_formulas();
        } else if (opts.suite == "sign-table") {
            out = run_sign_table(opts);
        } else if (opts.suite == "partial-fractions") {
            out = run_partial_fractions();
        } else {
            throw ParseError("unknown suite '" + opts.suite + "'");
        }
        const bool pass = out.failures == 0;
        json& r = res.record;
        r["result"] = pass ? "pass" : "fail";
        r["checks"] = out.checks;
        r["failures"] = out.failures;
        r["first_failure"] = out.first_failure;
        for (auto& [k, v] : out.extra.items()) r[k] = v;

        TextTable t;
        t.row("suite", opts.suite)
            .row("result", pass ? "pass" : "fail")
            .row("checks", std::to_string(out.checks))
            .row("failures", std::to_string(out.failures));
        if (!pass) t.row("first failure", out.first_failure.dump());
        res.text = t.render();
        if (out.extra.contains("table")) {
            std::ostringstream os;
            const auto& tab = out.extra["table"];
            for (const auto& row : tab["rows"]) {
                os << "  j=" << row["j"].get<int>() << ":";
                for (const auto& s : row["signs"]) os << ' ' << std::setw(3) << s.get<std::string>();
                os << '\n';
            }
            res.text += os.str();
        }
        res.exit_code = pass ? kOk : kCheckFailed;
        return res;
    });
}

CommandResult cmd_sweep(const SweepOptions& opts) {
    CommandResult base;
    base.record = header("sweep", json{{"d", opts.d}, {"m_max", opts.m_max}, {"grid", opts.grid}});
    return guarded(std::move(base), [&](CommandResult res) {
        if (opts.d != 3 && opts.d != 4) throw UnsupportedDegree(opts.d);
        if (opts.m_max < 1 || opts.grid < 2) throw ParseError("sweep needs --m-max >= 1 and --grid >= 2");
        const SweepReport rep = sweep_lemma(opts.d, opts.m_max, opts.grid);
        res.record["report"] = to_json(rep, true);
        TextTable t;
        t.row("d", std::to_string(rep.d))
            .row("grid", "c = k/" + std::to_string(rep.grid_denominator) + ", m = 1.." + std::to_string(rep.m_max))
            .row("max (m+1)*sum", rep.max_value.to_string() + "  ~ " + rep.max_value.to_decimal())
            .row("argmax", "c = " + rep.argmax_c.to_string() + ", m = " + std::to_string(rep.argmax_m))
            .row("claimed C_d", rep.claimed_C_d->to_string() + "  ~ " + rep.claimed_C_d->to_decimal())
            .row("violations", std::to_string(rep.violation_count));
        if (!rep.violations.empty()) {
            const auto& v = rep.violations.front();
            t.row("first violation", "c = " + v.c.to_string() + ", m = " + std::to_string(v.m) + ", value ~ " + v.value.to_decimal());
        }
        res.text = t.render();
        res.exit_code = rep.ok() ? kOk : kCheckFailed;
        return res;
    });
}

CommandResult cmd_estimate_cd(const EstimateOptions& opts) {
    CommandResult base;
    base.record = header("estimate-cd", json{{"d", opts.d}, {"grid", opts.grid}});
    return guarded(std::move(base), [&](CommandResult res) {
        if (opts.d < 2 || opts.d > 12) throw UnsupportedDegree(opts.d);
        if (opts.grid < 2) throw ParseError("estimate-cd needs --grid >= 2");
        const CdEstimate est = estimate_Cd(opts.d, opts.grid);
        const CdEstimate refined = estimate_Cd(opts.d, 2 * opts.grid);
        const Rational change = abs(refined.report.max_value - est.report.max_value) / est.report.max_value;

        json& r = res.record;
        r["report"] = to_json(est.report, false);
        r["sharp_constant"] = est.sharp_constant ? json(est.sharp_constant->to_string()) : json(nullptr);
        r["r_squared_form_max"] = est.r_squared_form_max.to_string();
        r["r_squared_form_argmax_c"] = est.r_squared_form_argmax_c.to_string();
        r["refinement"] = json{{"grid", 2 * opts.grid},
                               {"max_value", refined.report.max_value.to_string()},
                               {"relative_change", change.to_string()},
                               {"display", json{{"relative_change", change.to_decimal()}}}};
        r["display"] = json{{"r_squared_form_max", est.r_squared_form_max.to_decimal()}};

        TextTable t;
        t.row("d", std::to_string(opts.d))
            .row("grid", "c = k/" + std::to_string(opts.grid) + ", 0 < c <= 1/2")
            .row("max c(1-c) sum_r dr/(d-r) Q", est.report.max_value.to_decimal() + "  at c = " + est.report.argmax_c.to_string())
            .row("claimed constant", est.report.claimed_C_d ? est.report.claimed_C_d->to_string() : "none")
            .row("sharp constant", est.sharp_constant ? est.sharp_constant->to_string() : "none")
            .row("grid-doubling change", change.to_decimal(6))
            .row("same sum, 1/r^2 residues", est.r_squared_form_max.to_decimal())
            .row("violations", std::to_string(est.report.violation_count));
        res.text = t.render();
        res.exit_code = est.report.ok() ? kOk : kCheckFailed;
        return res;
    });
}

}  // namespace polya::cli
