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

#include "polya/lemma_lab.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "polya/bounds.hpp"
#include "polya/error.hpp"
#include "polya/parallel.hpp"

namespace polya {

namespace {

void require_row(int j, int d) {
    if (d < 0 || j < 0 || j > d) {
        throw IndexOutOfRange("row j = " + std::to_string(j) + " outside 0.." + std::to_string(d));
    }
}

Rational inverse(long n) { return Rational(mpz_class(1), mpz_class(n)); }

bool is_endpoint(const Rational& c) { return c.is_zero() || c == Rational(1); }

}  // namespace

Rational f(const FParams& params) {
    const auto& [c, j, d, x] = params;
    require_row(j, d);
    if (x.sign() < 0) throw DenominatorZero("f: x must be nonnegative");
    if (d >= 2 && x >= inverse(d - 1)) {
        throw DenominatorZero("f: x = " + x.to_string() + " reaches the pole 1/" + std::to_string(d - 1));
    }
    const Rational one_minus_c = Rational(1) - c;
    Rational num(1);
    for (int i = 0; i < j; ++i) num *= c - Rational(i) * x;
    for (int i = 0; i < d - j; ++i) num *= one_minus_c - Rational(i) * x;
    Rational den(1);
    for (int i = 1; i < d; ++i) den *= Rational(1) - Rational(i) * x;
    return num / den;
}

Rational f_difference(const Rational& c, int j, int d, unsigned m) {
    const Rational x = inverse(static_cast<long>(m) + d);
    return f({c, j, d, x}) - f({c, j, d, Rational{}});
}

IdentityCheck verify_lemma_identity(const Polynomial& p, unsigned m) {
    if (p.is_zero()) throw ZeroPolynomial();
    const int d = p.degree();
    const long n = static_cast<long>(m) + d;
    if (n < 1) throw Error("verify_lemma_identity: needs m + d >= 1");

    // Convolution route: (1+x)^m p(x) by repeated multiplication by (1+x).
    std::vector<mpq_class> conv;
    for (const auto& a : p.coefficients()) conv.push_back(a.raw());
    for (unsigned i = 0; i < m; ++i) {
        conv.emplace_back(0);
        for (std::size_t k = conv.size() - 1; k > 0; --k) conv[k] += conv[k - 1];
    }

    const Rational x = inverse(n);
    for (long k = 0; k <= n; ++k) {
        const Rational c{mpz_class(k), mpz_class(n)};
        const Rational one_minus_c = Rational(1) - c;
        const Rational binom = binomial(n, k);

        Rational approximator;
        Rational correction;
        for (int j = 0; j <= d; ++j) {
            const Rational a = p.coefficient(static_cast<std::size_t>(j));
            if (a.is_zero()) continue;
            approximator += a * pow(c, static_cast<unsigned>(j)) * pow(one_minus_c, static_cast<unsigned>(d - j));
            correction += a * (f({c, j, d, x}) - f({c, j, d, Rational{}}));
        }
        const Rational lhs = Rational(conv[static_cast<std::size_t>(k)]) - binom * approximator;
        const Rational rhs = binom * correction;
        if (lhs != rhs) return {false, static_cast<unsigned>(k)};
    }
    return {};
}

Rational derive_h(const Rational& c, int j, int d, unsigned m) {
    if (is_endpoint(c)) throw DivisionByZero("derive_h: c(1 - c) vanishes at c = " + c.to_string());
    Rational scale(1);
    for (int i = 1; i < d; ++i) scale *= Rational(static_cast<long>(m) + i);
    return f_difference(c, j, d, m) * scale / (c * (Rational(1) - c));
}

namespace {

Rational cubic_h(const Rational& c, int j, const Rational& m) {
    if (j == 0) return (Rational(-3) + Rational(3) * c) * m + (Rational(-5) + Rational(7) * c);
    return (Rational(2) - Rational(3) * c) * m + (Rational(4) - Rational(7) * c);
}

Rational quartic_h(const Rational& c, int j, const Rational& m) {
    const Rational c2 = c * c;
    const Rational m2 = m * m;
    auto quad = [&c, &c2](long a, long b, long k) { return Rational(a) * c2 + Rational(b) * c + Rational(k); };
    switch (j) {
        case 0: return m2 * quad(-6, 12, -6) + m * quad(-37, 63, -26) + quad(-58, 78, -26);
        case 1: return m2 * quad(6, -9, 3) + m * quad(37, -50, 15) + quad(58, -68, 18);
        default: return m2 * quad(-6, 6, -1) + m * quad(-37, 37, -7) + quad(-58, 58, -12);
    }
}

}  // namespace

Rational explicit_h(const Rational& c, int j, int d, unsigned m) {
    if (d != 3 && d != 4) throw UnsupportedDegree(d);
    require_row(j, d);
    const Rational mm(static_cast<long>(m));
    const bool mirrored = 2 * j > d;
    const Rational cc = mirrored ? Rational(1) - c : c;
    const int jj = mirrored ? d - j : j;
    return d == 3 ? cubic_h(cc, jj, mm) : quartic_h(cc, jj, mm);
}

Rational HPolynomial::eval(const Rational& c, const Rational& m) const {
    Rational acc;
    for (auto it = coefficients_in_m.rbegin(); it != coefficients_in_m.rend(); ++it) acc = acc * m + it->eval(c);
    return acc;
}

int HPolynomial::degree_in_m() const {
    for (std::size_t i = coefficients_in_m.size(); i-- > 0;) {
        if (!coefficients_in_m[i].is_zero()) return static_cast<int>(i);
    }
    return -1;
}

int HPolynomial::degree_in_c() const {
    int deg = -1;
    for (const auto& p : coefficients_in_m) deg = std::max(deg, p.degree());
    return deg;
}

HPolynomial derive_h_polynomial(int j, int d) {
    if (d < 2) throw UnsupportedDegree(d);
    require_row(j, d);
    const int n = d - 1;  // points per axis for degree d - 2
    std::vector<Rational> cs, ms;
    for (int s = 1; s <= n; ++s) cs.emplace_back(mpz_class(s), mpz_class(d));
    for (int s = 0; s < n; ++s) ms.emplace_back(s);

    // coeff_at_c[s][i]: coefficient of m^i of h at c = cs[s].
    std::vector<std::vector<Rational>> coeff_at_c;
    for (const auto& c : cs) {
        std::vector<Rational> values;
        for (int s = 0; s < n; ++s) values.push_back(derive_h(c, j, d, static_cast<unsigned>(s)));
        const Polynomial in_m = interpolate(ms, values);
        std::vector<Rational> row(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) row[static_cast<std::size_t>(i)] = in_m.coefficient(static_cast<std::size_t>(i));
        coeff_at_c.push_back(std::move(row));
    }

    HPolynomial h;
    h.j = j;
    h.d = d;
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> values;
        for (const auto& row : coeff_at_c) values.push_back(row[static_cast<std::size_t>(i)]);
        h.coefficients_in_m.push_back(interpolate(cs, values));
    }
    return h;
}

std::string to_string(SignVerdict v) {
    switch (v) {
        case SignVerdict::nonpositive: return "<=0";
        case SignVerdict::nonnegative: return ">=0";
        case SignVerdict::mixed: return "?";
    }
    return "unknown";
}

SignVerdict SignTable::at(int j, std::size_t column) const {
    const auto it = std::find(rows.begin(), rows.end(), j);
    if (it == rows.end() || column >= columns.size()) throw IndexOutOfRange("sign table cell out of range");
    return verdicts[static_cast<std::size_t>(it - rows.begin())][column];
}

SignTable sign_table(int d, std::span<const int> rows, std::span<const CInterval> columns, unsigned m_min,
                     unsigned m_max, unsigned interior_samples) {
    SignTable t;
    t.d = d;
    t.m_min = m_min;
    t.m_max = m_max;
    t.rows.assign(rows.begin(), rows.end());
    t.columns.assign(columns.begin(), columns.end());
    for (int j : rows) {
        std::vector<SignVerdict> row;
        for (const auto& col : columns) {
            std::vector<Rational> samples{col.lo, col.hi};
            const Rational step = (col.hi - col.lo) / Rational(static_cast<long>(interior_samples) + 1);
            for (unsigned i = 1; i <= interior_samples; ++i) samples.push_back(col.lo + step * Rational(static_cast<long>(i)));
            bool any_pos = false, any_neg = false;
            for (const auto& c : samples) {
                for (unsigned m = m_min; m <= m_max; ++m) {
                    const int s = explicit_h(c, j, d, m).sign();
                    any_pos = any_pos || s > 0;
                    any_neg = any_neg || s < 0;
                }
            }
            row.push_back(any_pos && any_neg ? SignVerdict::mixed
                                             : (any_pos ? SignVerdict::nonnegative : SignVerdict::nonpositive));
        }
        t.verdicts.push_back(std::move(row));
    }
    return t;
}

std::vector<CInterval> cubic_sign_columns() {
    const std::vector<Rational> cuts{Rational(0),    Rational(2, 7), Rational(1, 3), Rational(3, 7),
                                     Rational(4, 7), Rational(2, 3), Rational(5, 7), Rational(1)};
    std::vector<CInterval> cols;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        cols.push_back({cuts[i], cuts[i + 1], "[" + cuts[i].to_string() + ", " + cuts[i + 1].to_string() + "]"});
    }
    return cols;
}

namespace {

/// Rational bounds (lo, hi) on (base - sqrt(n)) / den with hi - lo = 1/(den * 10^12).
std::pair<Rational, Rational> bracket_base_minus_sqrt(long base, long n, long den) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, 12);
    mpz_class s;
    const mpz_class radicand = mpz_class(n) * scale * scale;
    mpz_sqrt(s.get_mpz_t(), radicand.get_mpz_t());  // s <= sqrt(n) * scale < s + 1
    const Rational root_lo(s, scale);
    const Rational root_hi(s + 1, scale);
    const Rational b(base), dd(den);
    return {(b - root_hi) / dd, (b - root_lo) / dd};
}

}  // namespace

std::vector<CInterval> quartic_sign_columns(unsigned b_denominator) {
    const auto [a_lo, a_hi] = bracket_base_minus_sqrt(3, 3, 6);
    const auto [b_lo, b_hi] = bracket_base_minus_sqrt(127, 1585, static_cast<long>(b_denominator));
    const Rational half(1, 2);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, 12);
    const Rational eps{mpz_class(1), scale};
    const std::string a_text = "(3-sqrt3)/6";
    const std::string b_text = "(127-sqrt1585)/" + std::to_string(b_denominator);
    return {
        {Rational(0), a_lo, "[0, " + a_text + ")"},
        {a_hi, b_lo, "(" + a_text + ", " + b_text + "]"},
        {b_hi, half - eps, "[" + b_text + ", 1/2)"},
        {half, half, "{1/2}"},
    };
}

SignTable sign_table(int d, unsigned m_max) {
    if (d == 3) {
        const std::vector<int> rows{0, 1, 2, 3};
        const auto cols = cubic_sign_columns();
        return sign_table(3, rows, cols, 0, m_max);
    }
    if (d == 4) {
        const std::vector<int> rows{0, 1, 2};
        const auto cols = quartic_sign_columns(202);
        return sign_table(4, rows, cols, 1, m_max);
    }
    throw UnsupportedDegree(d);
}

std::vector<std::vector<SignVerdict>> reference_cubic_signs() {
    constexpr auto N = SignVerdict::nonpositive;
    constexpr auto P = SignVerdict::nonnegative;
    constexpr auto X = SignVerdict::mixed;
    return {
        {N, N, N, N, N, N, X},
        {P, P, P, P, X, N, N},
        {N, N, X, P, P, P, P},
        {X, N, N, N, N, N, N},
    };
}

Rational scaled_sum(const Rational& c, int d, unsigned m) {
    Rational sum;
    for (int j = 0; j <= d; ++j) sum += binomial(d, j) * abs(f_difference(c, j, d, m));
    return Rational(static_cast<long>(m) + 1) * sum;
}

Rational scaled_sum_on_grid(unsigned k, unsigned grid, int d, unsigned m) {
    if (grid == 0 || k > grid) throw IndexOutOfRange("grid point outside [0, 1]");
    if (d < 1) throw UnsupportedDegree(d);
    // With c = k/G and x = 1/N, N = m + d:
    //   f(x) = prod(kN - iG) prod((G-k)N - iG) / (G^d prod_{i<d}(N - i))
    //   f(0) = k^j (G-k)^(d-j) / G^d
    const mpz_class G(grid), K(k), N(static_cast<long>(m) + d);
    const mpz_class Gk = G - K;
    mpz_class falling = 1;
    for (int i = 1; i < d; ++i) falling *= N - i;

    mpz_class total = 0;
    mpz_class kpow = 1;  // k^j
    std::vector<mpz_class> gkpow(static_cast<std::size_t>(d) + 1, 1);
    for (int i = 1; i <= d; ++i) gkpow[static_cast<std::size_t>(i)] = gkpow[static_cast<std::size_t>(i - 1)] * Gk;
    mpz_class left = 1;  // prod_{i<j} (kN - iG)
    for (int j = 0; j <= d; ++j) {
        mpz_class right = 1;
        for (int i = 0; i < d - j; ++i) right *= Gk * N - mpz_class(i) * G;
        mpz_class diff = left * right - kpow * gkpow[static_cast<std::size_t>(d - j)] * N * falling;
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(j));
        total += binom * abs(diff);
        left *= K * N - mpz_class(j) * G;
        kpow *= K;
    }
    mpz_class gd;
    mpz_pow_ui(gd.get_mpz_t(), G.get_mpz_t(), static_cast<unsigned long>(d));
    return Rational(total * (static_cast<long>(m) + 1), gd * N * falling);
}

namespace {

struct LocalBest {
    Rational value;
    Rational c;
    unsigned m = 0;
    bool set = false;
    std::size_t violation_count = 0;
    std::vector<SweepCell> violations;
};

/// Strictly better under (larger value, then smaller c, then smaller m).
bool better(const Rational& v, const Rational& c, unsigned m, const LocalBest& b) {
    if (!b.set) return true;
    if (v != b.value) return v > b.value;
    if (c != b.c) return c < b.c;
    return m < b.m;
}

void merge_into(SweepReport& rep, LocalBest& best, LocalBest&& part) {
    if (part.set && better(part.value, part.c, part.m, best)) {
        best.value = part.value;
        best.c = part.c;
        best.m = part.m;
        best.set = true;
    }
    rep.violation_count += part.violation_count;
    for (auto& v : part.violations) {
        if (rep.violations.size() >= SweepReport::max_recorded_violations) break;
        rep.violations.push_back(std::move(v));
    }
}

}  // namespace

SweepReport sweep_lemma(int d, unsigned m_max, unsigned grid, unsigned threads) {
    if (m_max < 1) throw Error("sweep_lemma: m_max must be >= 1");
    if (grid < 2) throw Error("sweep_lemma: grid denominator must be >= 2");
    SweepReport rep;
    rep.d = d;
    rep.m_min = 1;
    rep.m_max = m_max;
    rep.grid_denominator = grid;
    rep.claimed_C_d = table_C(d);
    const Rational bound = *rep.claimed_C_d;

    // One task per m; within a task c runs upward over the grid.
    std::vector<LocalBest> parts(m_max);
    parallel_for(m_max, threads ? threads : worker_count(), [&](std::size_t idx) {
        const unsigned m = static_cast<unsigned>(idx) + 1;
        LocalBest& part = parts[idx];
        for (unsigned k = 0; k <= grid; ++k) {
            Rational v = scaled_sum_on_grid(k, grid, d, m);
            const Rational c{mpz_class(k), mpz_class(grid)};
            if (v > bound) {
                ++part.violation_count;
                if (part.violations.size() < SweepReport::max_recorded_violations) part.violations.push_back({c, m, v});
            }
            if (better(v, c, m, part)) {
                part.value = std::move(v);
                part.c = c;
                part.m = m;
                part.set = true;
            }
        }
    });

    LocalBest best;
    for (auto& part : parts) merge_into(rep, best, std::move(part));
    rep.max_value = best.value;
    rep.argmax_c = best.c;
    rep.argmax_m = best.m;
    return rep;
}

AlphaResidue alpha(const Rational& c, int j, int r, int d) {
    require_row(j, d);
    if (r < 1 || r > d - 1) throw IndexOutOfRange("residue index r = " + std::to_string(r) + " outside 1.." + std::to_string(d - 1));
    const Rational rr(r);
    Rational v = Rational(d) / (rr * binomial(d, j));
    if ((d - r - 1) % 2 != 0) v = -v;
    v *= generalized_binomial(c * rr, static_cast<unsigned>(j));
    v *= generalized_binomial((Rational(1) - c) * rr, static_cast<unsigned>(d - j));
    v *= binomial(d - 1, r);
    return {std::move(v), r, j, d, c};
}

Rational alpha_r_squared_form(const Rational& c, int j, int r, int d) {
    return alpha(c, j, r, d).value / Rational(r);
}

Rational PartialFractions::eval(const Rational& x) const {
    Rational acc = gamma;
    for (const auto& a : residues) acc += a.value / (Rational(1) - Rational(a.r) * x);
    return acc;
}

PartialFractions decompose_partial_fractions(const Rational& c, int j, int d) {
    require_row(j, d);
    PartialFractions pf;
    for (int r = 1; r <= d - 1; ++r) pf.residues.push_back(alpha(c, j, r, d));
    Rational residue_sum;
    for (const auto& a : pf.residues) residue_sum += a.value;
    pf.gamma = f({c, j, d, Rational{}}) - residue_sum;

    const long dd = std::max(d, 1);
    for (long i = 1; i <= dd; ++i) {
        const Rational x{mpz_class(i), mpz_class(dd * (dd + 1))};
        const Rational expected = f({c, j, d, x});
        const Rational got = pf.eval(x);
        if (expected != got) {
            std::ostringstream os;
            os << "partial fractions disagree for c = " << c << ", j = " << j << ", d = " << d << " at x = " << x
               << ": f = " << expected << ", decomposition = " << got;
            throw VerificationFailed(os.str());
        }
    }
    return pf;
}

namespace {

Rational weighted_residue_sum(const Rational& c, int r, int d) {
    Rational s;
    for (int j = 0; j <= d; ++j) s += binomial(d, j) * abs(alpha(c, j, r, d).value);
    return s;
}

}  // namespace

Rational Q(const Rational& c, int r, int d) {
    if (is_endpoint(c)) throw DivisionByZero("Q: c(1 - c) vanishes at c = " + c.to_string());
    return weighted_residue_sum(c, r, d) / (c * (Rational(1) - c));
}

Rational general_bound_sum(const Rational& c, int d) {
    Rational total;
    for (int r = 1; r <= d - 1; ++r) total += Rational(mpz_class(d * r), mpz_class(d - r)) * weighted_residue_sum(c, r, d);
    return total;
}

Rational general_bound_sum_r_squared_form(const Rational& c, int d) {
    Rational total;
    for (int r = 1; r <= d - 1; ++r) {
        Rational s;
        for (int j = 0; j <= d; ++j) s += binomial(d, j) * abs(alpha_r_squared_form(c, j, r, d));
        total += Rational(mpz_class(d * r), mpz_class(d - r)) * s;
    }
    return total;
}

Rational general_bound_envelope(const Rational& c, int d, unsigned m) {
    return Rational(mpz_class(static_cast<long>(m) + 1), mpz_class(static_cast<long>(m) + d)) * general_bound_sum(c, d);
}

std::optional<Rational> claimed_general_constant(int d) {
    if (d == 5) return Rational(33, 2);
    return std::nullopt;
}

CdEstimate estimate_Cd(int d, unsigned grid, unsigned threads) {
    if (d < 2) throw UnsupportedDegree(d);
    if (grid < 2) throw Error("estimate_Cd: grid denominator must be >= 2");
    CdEstimate est;
    SweepReport& rep = est.report;
    rep.d = d;
    rep.grid_denominator = grid;
    rep.claimed_C_d = claimed_general_constant(d);
    if (d <= 4) est.sharp_constant = table_C(d);

    const unsigned last = grid / 2;  // c = k/grid <= 1/2
    std::vector<Rational> values(last), r2_values(last);
    parallel_for(last, threads ? threads : worker_count(), [&](std::size_t idx) {
        const Rational c{mpz_class(static_cast<unsigned long>(idx + 1)), mpz_class(grid)};
        values[idx] = general_bound_sum(c, d);
        r2_values[idx] = general_bound_sum_r_squared_form(c, d);
    });

    bool first = true;
    for (unsigned idx = 0; idx < last; ++idx) {
        const Rational c{mpz_class(idx + 1), mpz_class(grid)};
        if (rep.claimed_C_d && values[idx] >= *rep.claimed_C_d) {
            ++rep.violation_count;
            if (rep.violations.size() < SweepReport::max_recorded_violations) rep.violations.push_back({c, 0, values[idx]});
        }
        if (first || values[idx] > rep.max_value) {
            rep.max_value = values[idx];
            rep.argmax_c = c;
        }
        if (first || r2_values[idx] > est.r_squared_form_max) {
            est.r_squared_form_max = r2_values[idx];
            est.r_squared_form_argmax_c = c;
        }
        first = false;
    }
    return est;
}

}  // namespace polya
