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

#ifndef POLYA_POSITIVITY_HPP
#define POLYA_POSITIVITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "polya/polynomial.hpp"
#include "polya/rational.hpp"

namespace polya {

/// Closed rational interval. A degenerate interval (lo == hi) is an exact root;
/// otherwise the endpoints are not roots and exactly one simple root of the
/// squarefree part lies strictly inside.
struct RootInterval {
    Rational lo;
    Rational hi;

    bool exact() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

/// Upper bound strictly greater than |r| for every complex root r of p.
Rational cauchy_root_bound(const Polynomial& p);

/// Sturm chain of a squarefree polynomial, reused for many root counts.
class SturmSequence {
public:
    explicit SturmSequence(const Polynomial& squarefree);

    /// Sign variations of the chain evaluated at x (zeros skipped).
    int variations_at(const Rational& x) const;
    /// Distinct roots in (a, b]. Both a and b must be non-roots, or b a root.
    int count_roots(const Rational& a, const Rational& b) const;

    const Polynomial& base() const { return chain_.front(); }

private:
    std::vector<Polynomial> chain_;
};

/// Isolating intervals for every distinct root in [0, inf), ascending and
/// pairwise disjoint. Requires p nonzero.
std::vector<RootInterval> isolate_nonneg_roots(const Polynomial& p);

/// Bisects an isolating interval of squarefree q until its width is at most
/// max_width (or the root is hit exactly).
RootInterval refine_root(const Polynomial& squarefree, RootInterval iv, const Rational& max_width);

enum class PositivityStatus { positive_on_nonneg, has_nonneg_root, negative_somewhere };

std::string to_string(PositivityStatus s);

/// A nonnegative root takes precedence: x - 1 is reported as has_nonneg_root
/// even though it is negative on [0, 1). negative_at records a point x >= 0
/// with P(x) < 0 whenever one exists, whatever the status.
struct PositivityCertificate {
    PositivityStatus status = PositivityStatus::positive_on_nonneg;
    /// Isolating interval of the smallest nonnegative root, or a degenerate
    /// interval at a point where P < 0.
    std::optional<RootInterval> witness;
    std::optional<Rational> negative_at;
    std::string method_trace;

    bool positive() const { return status == PositivityStatus::positive_on_nonneg; }
};

/// Decides whether P > 0 on [0, inf). Throws ZeroPolynomial on zero input.
PositivityCertificate certify_positive(const Polynomial& p);

/// max_j |a_j| / C(d, j).
Rational compute_L(const Polynomial& p);

struct LambdaInterval {
    Rational lo;
    Rational hi;
};

/// Default tolerance 1/10^9 for compute_lambda.
Rational default_lambda_tolerance();

/// Certified enclosure of inf_{x >= 0} P(x) / (1 + x)^d with hi - lo <= tol.
///
/// The infimum is attained at x = 0, approached as x -> inf (value a_d), or
/// attained at a nonnegative root of K(x) = P'(x)(1 + x) - d P(x). Each root
/// of K is isolated and refined until the enclosure of P/(1+x)^d over its
/// interval is narrow enough. On return, P - lo (1 + x)^d has been checked to
/// be nonnegative on [0, inf); a failure there raises VerificationFailed.
///
/// Throws NotPositive unless certify_positive(p) is positive_on_nonneg.
LambdaInterval compute_lambda(const Polynomial& p, const Rational& tol = default_lambda_tolerance());

struct InvariantReport {
    Rational L;
    Rational lambda_lo;
    Rational lambda_hi;
    Rational ratio_hi;  // L / lambda_lo
};

InvariantReport compute_invariants(const Polynomial& p, const Rational& tol = default_lambda_tolerance());

struct LambdaComparison {
    bool holds = false;     // L >= lambda_lo
    bool equality = false;  // p == b (1 + x)^d with b > 0
};

/// Checks L(P) >= lambda(P) using the certified lower bound for lambda.
LambdaComparison check_L_ge_lambda(const Polynomial& p, const Rational& tol = default_lambda_tolerance());

/// True iff p == b (1 + x)^d for some b > 0, by exact coefficient comparison.
bool is_scaled_binomial_power(const Polynomial& p);

}  // namespace polya

#endif
