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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "polya/bounds.hpp"
#include "polya/expansion.hpp"
#include "polya/lemma_lab.hpp"
#include "polya/positivity.hpp"
#include "polya/sampling.hpp"

using namespace polya;

namespace {

constexpr std::uint64_t kSeed = 20240607;

Rational q(long n, long d = 1) { return Rational(mpz_class(n), mpz_class(d)); }

struct Outcome {
    bool pass = false;
    std::string detail;
};

// Polynomials whose lambda certificate criterion 8 re-checks.
std::vector<Polynomial> g_lambda_inputs;

Outcome identity_suite() {
    PolynomialSampler rng(kSeed);
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first;
    for (int trial = 0; trial < 100; ++trial) {
        const Polynomial p = rng.integer_polynomial(static_cast<int>(rng.uniform(1, 6)));
        for (unsigned m = 0; m <= 40; ++m) {
            ++checks;
            const auto res = verify_lemma_identity(p, m);
            if (!res.holds) {
                if (failures++ == 0) first = " first: p=" + p.to_text() + " m=" + std::to_string(m);
            }
        }
    }
    return {failures == 0, std::to_string(checks) + " (p, m) pairs, " + std::to_string(failures) + " failures" + first};
}

Outcome h_suite() {
    std::size_t checks = 0;
    std::size_t failures = 0;
    for (int d = 3; d <= 4; ++d) {
        for (long k = 1; k < 100; ++k) {
            const Rational c = q(k, 100);
            for (unsigned m = 0; m <= 20; ++m) {
                for (int j = 0; j <= d; ++j) {
                    checks += 3;
                    const Rational ex = explicit_h(c, j, d, m);
                    if (derive_h(c, j, d, m) != ex) ++failures;
                    if (ex != explicit_h(q(1) - c, d - j, d, m)) ++failures;
                    if (derive_h(c, j, d, m) != derive_h(q(1) - c, d - j, d, m)) ++failures;
                }
            }
        }
    }
    return {failures == 0, std::to_string(checks) + " checks, " + std::to_string(failures) + " failures"};
}

std::string describe(const SweepReport& r) {
    std::ostringstream os;
    os << "max=" << r.max_value << " (" << r.max_value.to_decimal(9) << ") at c=" << r.argmax_c << " m=" << r.argmax_m
       << ", claimed " << (r.claimed_C_d ? r.claimed_C_d->to_string() : std::string("none"))
       << ", violations=" << r.violation_count;
    if (!r.violations.empty()) {
        const auto& v = r.violations.front();
        os << ", first violation c=" << v.c << " m=" << v.m << " value=" << v.value.to_decimal(9);
    }
    return os.str();
}

Outcome sweep_d3() {
    const auto r = sweep_lemma(3, 200, 2000);
    const bool pass = r.max_value <= q(3, 2) && r.max_value >= q(148, 100) && r.ok();
    return {pass, describe(r)};
}

Outcome sweep_d4() {
    const auto r = sweep_lemma(4, 200, 2000);
    const bool pass = r.max_value <= q(4232, 2505) && r.max_value >= q(168, 100) && r.argmax_m <= 3 && r.ok();
    return {pass, describe(r)};
}

Outcome estimate_c5() {
    const auto base = estimate_Cd(5, 2000);
    const auto fine = estimate_Cd(5, 4000);
    const Rational change = abs(fine.report.max_value - base.report.max_value) / base.report.max_value;
    const bool below = base.report.max_value < q(33, 2);
    const bool stable = change < q(1, 100);
    std::ostringstream os;
    os << "max=" << base.report.max_value.to_decimal(9) << " at c=" << base.report.argmax_c
       << " (claimed < 16.5: " << (below ? "yes" : "no") << "), grid 4000 max=" << fine.report.max_value.to_decimal(9)
       << ", relative change=" << change.to_decimal(9) << " (stable: " << (stable ? "yes" : "no")
       << "); 1/r^2 residue form max=" << base.r_squared_form_max.to_decimal(9);
    return {below && stable, os.str()};
}

Outcome worked_examples() {
    std::vector<std::string> bad;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) bad.push_back(what);
    };

    const Polynomial quad{q(1), q(-1), q(1)};
    const auto iq = compute_invariants(quad);
    expect(iq.L == q(1), "quad L");
    expect(iq.lambda_lo == q(1, 4) && iq.lambda_hi == q(1, 4), "quad lambda");
    expect(powers_reznick_threshold(2, iq.ratio_hi) == 3, "quad pr_threshold");
    const auto mq = minimal_m(quad, 64);
    expect(mq.minimal_m == 3u, "quad minimal_m");
    g_lambda_inputs.push_back(quad);

    const Polynomial cubic{q(1), q(0), q(0), q(1)};
    const auto ic = compute_invariants(cubic);
    expect(ic.lambda_lo == q(1, 4) && ic.lambda_hi == q(1, 4), "cubic lambda");
    expect(improved_threshold(3, ic.ratio_hi) == 6, "cubic improved_threshold");
    expect(minimal_m(cubic, 64).minimal_m == 2u, "cubic minimal_m");
    g_lambda_inputs.push_back(cubic);

    for (unsigned d = 1; d <= 4; ++d) {
        const Polynomial b = Polynomial::one_plus_x_pow(d);
        const auto ib = compute_invariants(b);
        const std::string tag = "(1+x)^" + std::to_string(d);
        expect(ib.L == q(1) && ib.lambda_lo == q(1) && ib.lambda_hi == q(1), tag + " L = lambda = 1");
        expect(minimal_m(b, 64).minimal_m == 0u, tag + " minimal_m");
        expect(check_L_ge_lambda(b).equality, tag + " equality flag");
        g_lambda_inputs.push_back(b);
    }

    std::string detail = "6 polynomials";
    for (const auto& s : bad) detail += "; mismatch: " + s;
    return {bad.empty(), detail};
}

Outcome theorem_conformance() {
    PolynomialSampler rng(kSeed + 7);
    std::size_t violations = 0;
    std::size_t order_violations = 0;
    std::size_t exceeded = 0;
    std::string first;
    unsigned worst_slack = 0;
    for (int d = 3; d <= 4; ++d) {
        for (int trial = 0; trial < 100; ++trial) {
            const Polynomial p = rng.positive_polynomial(d);
            g_lambda_inputs.push_back(p);
            const auto inv = compute_invariants(p);
            const mpz_class pr = powers_reznick_threshold(d, inv.ratio_hi);
            const mpz_class im = improved_threshold(d, inv.ratio_hi);
            const auto res = minimal_m(p, default_cap(pr));
            if (!res.minimal_m) {
                ++exceeded;
                continue;
            }
            const mpz_class mm = *res.minimal_m;
            if (mm > pr || mm > im) {
                if (violations++ == 0)
                    first = " first: p=" + p.to_text() + " minimal_m=" + mm.get_str() + " pr=" + pr.get_str() +
                            " improved=" + im.get_str();
            }
            if (d == 4 && im > pr) ++order_violations;
            if (mm <= im) worst_slack = std::max(worst_slack, static_cast<unsigned>(mpz_class(im - mm).get_ui()));
        }
    }
    std::ostringstream os;
    os << "200 polynomials, " << violations << " threshold violations, " << order_violations
       << " d=4 ordering violations, " << exceeded << " exceeded cap, largest improved slack " << worst_slack << first;
    return {violations == 0 && order_violations == 0 && exceeded == 0, os.str()};
}

Outcome lambda_certification() {
    const Rational tol = default_lambda_tolerance();
    std::size_t failures = 0;
    Rational widest = q(0);
    for (const auto& p : g_lambda_inputs) {
        const auto lam = compute_lambda(p, tol);
        const Rational width = lam.hi - lam.lo;
        if (width > widest) widest = width;
        const Polynomial residual =
            sub(p, scale(Polynomial::one_plus_x_pow(static_cast<unsigned>(p.degree())), lam.lo));
        // A zero residual (p a multiple of (1+x)^d) is trivially nonnegative.
        bool negative = false;
        if (!residual.is_zero()) {
            const auto cert = certify_positive(residual);
            negative = cert.negative_at.has_value() || cert.status == PositivityStatus::negative_somewhere;
        }
        if (width > tol || negative) ++failures;
    }
    std::ostringstream os;
    os << g_lambda_inputs.size() << " polynomials, " << failures << " failures, widest interval " << widest.to_decimal(15);
    return {failures == 0 && !g_lambda_inputs.empty(), os.str()};
}

Outcome sign_table_d3() {
    const auto table = sign_table(3, 200);
    const auto ref = reference_cubic_signs();
    std::size_t mismatches = 0;
    std::size_t mixed = 0;
    for (std::size_t r = 0; r < ref.size(); ++r) {
        for (std::size_t c = 0; c < ref[r].size(); ++c) {
            if (table.verdicts[r][c] != ref[r][c]) ++mismatches;
            if (table.verdicts[r][c] == SignVerdict::mixed) ++mixed;
        }
    }
    // The reference table carries one mixed cell per row.
    return {mismatches == 0,
            std::to_string(ref.size() * ref[0].size()) + " cells, " + std::to_string(mismatches) + " mismatches, " +
                std::to_string(mixed) + " mixed cells (m = 0..200)"};
}

Outcome partial_fractions() {
    std::size_t checks = 0;
    std::size_t failures = 0;
    for (int d = 1; d <= 6; ++d) {
        for (int j = 0; j <= d; ++j) {
            for (long k = 0; k <= 50; ++k) {
                ++checks;
                try {
                    (void)decompose_partial_fractions(q(k, 50), j, d);
                } catch (const std::exception&) {
                    ++failures;
                }
            }
        }
    }
    return {failures == 0, std::to_string(checks) + " decompositions, " + std::to_string(failures) + " failures"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"identity suite", identity_suite},
        {"h-formula suite", h_suite},
        {"sum bound sweep d=3", sweep_d3},
        {"sum bound sweep d=4", sweep_d4},
        {"C_5 estimate", estimate_c5},
        {"worked examples", worked_examples},
        {"theorem conformance", theorem_conformance},
        {"lambda certification", lambda_certification},
        {"sign table d=3", sign_table_d3},
        {"partial fractions", partial_fractions},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!o.pass) ++failed;
        std::printf("%s %2zu %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
