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

#ifndef POLYA_LEMMA_LAB_HPP
#define POLYA_LEMMA_LAB_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polya/polynomial.hpp"
#include "polya/rational.hpp"

namespace polya {

// ---------------------------------------------------------------------------
// The rational functions f_c^(j)
// ---------------------------------------------------------------------------

/// Arguments of f_c^(j)(x) for a degree-d polynomial.
struct FParams {
    Rational c;
    int j = 0;
    int d = 0;
    Rational x;
};

/// f_c^(j)(x) = [c (c - x) ... (c - (j-1)x)] [(1-c)(1-c-x) ... (1-c-(d-j-1)x)]
///              / [(1)(1 - x) ... (1 - (d-1)x)].
///
/// Empty products are 1. Requires 0 <= j <= d and x >= 0 below the first pole
/// 1/(d-1); throws DenominatorZero otherwise.
Rational f(const FParams& params);

/// f_c^(j)(1/(m+d)) - f_c^(j)(0).
Rational f_difference(const Rational& c, int j, int d, unsigned m);

struct IdentityCheck {
    bool holds = true;
    std::optional<unsigned> failing_k;
    explicit operator bool() const { return holds; }
};

/// Exact check, for every k in 0..m+d with c = k/(m+d), that the coefficient
/// of x^k in (1+x)^m p(x) minus C(m+d,k) (1-c)^d p(c/(1-c)) equals
/// C(m+d,k) sum_j a_j (f_c^(j)(1/(m+d)) - f_c^(j)(0)). The left side comes from
/// the convolution and the approximator is evaluated in its polynomial form
/// sum_j a_j c^j (1-c)^(d-j), so c = 1 needs no special case.
IdentityCheck verify_lemma_identity(const Polynomial& p, unsigned m);

// ---------------------------------------------------------------------------
// h-polynomials
// ---------------------------------------------------------------------------

/// (f_c^(j)(1/(m+d)) - f_c^(j)(0)) (m+1)(m+2)...(m+d-1) / (c(1-c)).
/// Throws DivisionByZero for c in {0, 1}.
Rational derive_h(const Rational& c, int j, int d, unsigned m);

/// Closed forms of h_c^(j)(m) for d = 3 and d = 4; rows j > d/2 go through
/// h_c^(j) = h_{1-c}^(d-j). Throws UnsupportedDegree for other d.
Rational explicit_h(const Rational& c, int j, int d, unsigned m);

/// h_c^(j)(m) as a bivariate polynomial: coefficients_in_m[i] is the
/// coefficient of m^i, itself a polynomial in c.
struct HPolynomial {
    int j = 0;
    int d = 0;
    std::vector<Polynomial> coefficients_in_m;

    Rational eval(const Rational& c, const Rational& m) const;
    int degree_in_m() const;
    int degree_in_c() const;
};

/// Recovers h_c^(j)(m) symbolically by interpolating derive_h on a
/// (d-1) x (d-1) grid of (c, m) values. Requires d >= 2.
HPolynomial derive_h_polynomial(int j, int d);

// ---------------------------------------------------------------------------
// Sign tables
// ---------------------------------------------------------------------------

enum class SignVerdict { nonpositive, nonnegative, mixed };

std::string to_string(SignVerdict v);

/// Range of c; both endpoints are sampled, so for irrational breakpoints the
/// endpoints are rational approximations lying inside the true interval.
struct CInterval {
    Rational lo;
    Rational hi;
    std::string label;
};

struct SignTable {
    int d = 0;
    unsigned m_min = 0;
    unsigned m_max = 0;
    std::vector<int> rows;  // the j values
    std::vector<CInterval> columns;
    std::vector<std::vector<SignVerdict>> verdicts;  // [row][column]

    SignVerdict at(int j, std::size_t column) const;
};

/// Sign of explicit_h over each column, sampled at both endpoints and
/// interior_samples evenly spaced interior points, for m in m_min..m_max.
SignTable sign_table(int d, std::span<const int> rows, std::span<const CInterval> columns,
                     unsigned m_min, unsigned m_max, unsigned interior_samples = 64);

/// The seven c-ranges with breakpoints 2/7, 1/3, 3/7, 4/7, 2/3, 5/7 (d = 3).
std::vector<CInterval> cubic_sign_columns();

/// The four d = 4 c-ranges with breakpoints (3 - sqrt 3)/6 and
/// (127 - sqrt 1585)/b_denominator, then 1/2. With 202 the second breakpoint
/// is the root of h_c^(1)(1) = 101c^2 - 127c + 36; other denominators give
/// perturbed columnings for comparison.
std::vector<CInterval> quartic_sign_columns(unsigned b_denominator);

/// d = 3: rows 0..3 over cubic_sign_columns() for m in 0..m_max.
/// d = 4: rows 0..2 over quartic_sign_columns(202) for m in 1..m_max.
SignTable sign_table(int d, unsigned m_max);

/// Reference signs of h_c^(j)(m), m >= 0, for d = 3: rows j = 0..3 over
/// cubic_sign_columns(), "?" where the sign depends on m.
std::vector<std::vector<SignVerdict>> reference_cubic_signs();

// ---------------------------------------------------------------------------
// Sum bounds
// ---------------------------------------------------------------------------

/// (m+1) sum_j C(d,j) |f_c^(j)(1/(m+d)) - f_c^(j)(0)|, through f().
Rational scaled_sum(const Rational& c, int d, unsigned m);

/// scaled_sum at c = k / grid, computed with integer arithmetic over the
/// common denominator grid^d (m+d)(m+d-1)...(m+1).
Rational scaled_sum_on_grid(unsigned k, unsigned grid, int d, unsigned m);

struct SweepCell {
    Rational c;
    unsigned m = 0;
    Rational value;
};

struct SweepReport {
    int d = 0;
    unsigned m_min = 0;
    unsigned m_max = 0;
    unsigned grid_denominator = 0;
    Rational max_value;
    Rational argmax_c;
    unsigned argmax_m = 0;
    std::optional<Rational> claimed_C_d;
    std::size_t violation_count = 0;
    std::vector<SweepCell> violations;  // first max_recorded_violations, in grid order

    static constexpr std::size_t max_recorded_violations = 32;
    bool ok() const { return violation_count == 0; }
};

/// Evaluates scaled_sum on c = k/grid (k = 0..grid) and m = 1..m_max and
/// checks every value against C_d. Ties in the maximum go to the smallest c,
/// then the smallest m. threads = 0 uses worker_count().
SweepReport sweep_lemma(int d, unsigned m_max, unsigned grid, unsigned threads = 0);

// ---------------------------------------------------------------------------
// Partial fractions and the general-d estimate
// ---------------------------------------------------------------------------

struct AlphaResidue {
    Rational value;
    int r = 0;
    int j = 0;
    int d = 0;
    Rational c;
};

/// Coefficient of 1/(1 - r x) in f_c^(j)(x):
///   (-1)^(d-r-1) d / (r C(d,j)) * C(cr, j) C((1-c)r, d-j) C(d-1, r).
/// Requires 1 <= r <= d-1 and 0 <= j <= d.
AlphaResidue alpha(const Rational& c, int j, int r, int d);

/// The same expression with r^2 in place of r in the denominator. Equal to
/// alpha(c, j, r, d).value / r, so it agrees with the residue only for r = 1.
Rational alpha_r_squared_form(const Rational& c, int j, int r, int d);

struct PartialFractions {
    Rational gamma;
    std::vector<AlphaResidue> residues;

    /// gamma + sum_r alpha_r / (1 - r x).
    Rational eval(const Rational& x) const;
};

/// Residues from alpha(), gamma from f at x = 0, then exact agreement with f
/// at d further points in (0, 1/d]. Throws VerificationFailed on disagreement.
PartialFractions decompose_partial_fractions(const Rational& c, int j, int d);

/// sum_j C(d,j) |alpha_c^(j)(r)| / (c(1-c)). Throws DivisionByZero for c in {0, 1}.
Rational Q(const Rational& c, int r, int d);

/// c(1-c) sum_r (d r/(d-r)) Q_c(r), computed without the division by c(1-c).
Rational general_bound_sum(const Rational& c, int d);

/// Same sum with alpha_r_squared_form in place of the residue.
Rational general_bound_sum_r_squared_form(const Rational& c, int d);

/// (m+1) x c(1-c) sum_r (d r/(d-r)) Q_c(r) at x = 1/(m+d); bounds scaled_sum from above.
Rational general_bound_envelope(const Rational& c, int d, unsigned m);

/// C_5 = 33/2 for d = 5; no claim otherwise.
std::optional<Rational> claimed_general_constant(int d);

struct CdEstimate {
    SweepReport report;  // m fields unused; claimed_C_d from claimed_general_constant
    std::optional<Rational> sharp_constant;  // table_C(d) for d <= 4
    Rational r_squared_form_max;
    Rational r_squared_form_argmax_c;
};

/// Maximises general_bound_sum over c = k/grid with 0 < c <= 1/2. Requires d >= 2.
CdEstimate estimate_Cd(int d, unsigned grid, unsigned threads = 0);

}  // namespace polya

#endif
