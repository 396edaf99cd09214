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

#include "polya/error.hpp"
#include "polya/positivity.hpp"
#include "polya/sampling.hpp"

using polya::Polynomial;
using polya::PositivityStatus;
using polya::Rational;

namespace {

Rational q(long n, long d = 1) { return Rational(mpz_class(n), mpz_class(d)); }

const Polynomial kQuad{q(1), q(-1), q(1)};        // x^2 - x + 1
const Polynomial kCubic{q(1), q(0), q(0), q(1)};  // x^3 + 1

// Sign changes across an isolating interval, counted by evaluation at the ends
// after moving off exact roots.
int interval_sign_change(const Polynomial& p, const polya::RootInterval& iv) {
    if (iv.exact()) return p.eval(iv.lo).is_zero() ? 1 : 0;
    return p.eval(iv.lo).sign() * p.eval(iv.hi).sign() < 0 ? 1 : 0;
}

}  // namespace

TEST_CASE("isolate_nonneg_roots") {
    const auto one = polya::isolate_nonneg_roots(Polynomial{q(-1), q(1)});
    REQUIRE(one.size() == 1);
    CHECK(one[0].contains(q(1)));

    CHECK(polya::isolate_nonneg_roots(kQuad).empty());

    const auto scaled = polya::isolate_nonneg_roots(Polynomial{q(-3), q(3)});
    REQUIRE(scaled.size() == 1);
    CHECK(scaled[0].contains(q(1)));
}

TEST_CASE("isolate handles roots at zero, repeated and irrational roots") {
    // x (x - 2)^2 (x^2 - 2) : nonnegative roots 0, sqrt 2, 2.
    const Polynomial x{q(0), q(1)};
    const Polynomial xm2{q(-2), q(1)};
    const Polynomial p = x * xm2 * xm2 * Polynomial{q(-2), q(0), q(1)};
    const auto roots = polya::isolate_nonneg_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == polya::RootInterval{q(0), q(0)});
    CHECK(roots[1].contains(q(1)) == false);
    CHECK(roots[1].lo * roots[1].lo <= q(2));
    CHECK(roots[1].hi * roots[1].hi >= q(2));
    CHECK(roots[2].contains(q(2)));
    for (std::size_t i = 1; i < roots.size(); ++i) CHECK(roots[i - 1].hi < roots[i].lo);
}

TEST_CASE("certify_positive") {
    const auto quad = polya::certify_positive(kQuad);
    CHECK(quad.status == PositivityStatus::positive_on_nonneg);
    CHECK_FALSE(quad.negative_at.has_value());

    const auto root = polya::certify_positive(Polynomial{q(-1), q(1)});
    CHECK(root.status == PositivityStatus::has_nonneg_root);
    REQUIRE(root.witness.has_value());
    CHECK(root.witness->contains(q(1)));

    const auto neg = polya::certify_positive(Polynomial{q(-1), q(-1)});
    CHECK(neg.status == PositivityStatus::negative_somewhere);
    REQUIRE(neg.negative_at.has_value());
    CHECK(polya::eval(Polynomial{q(-1), q(-1)}, *neg.negative_at).sign() < 0);

    // 1 - x: root at 1, negative beyond it.
    const auto one_minus_x = polya::certify_positive(Polynomial{q(1), q(-1)});
    CHECK(one_minus_x.status == PositivityStatus::has_nonneg_root);
    REQUIRE(one_minus_x.witness.has_value());
    CHECK(one_minus_x.witness->contains(q(1)));
    CHECK(one_minus_x.negative_at.has_value());

    // (x - 1)^2 touches zero without changing sign.
    const auto touch = polya::certify_positive(Polynomial{q(1), q(-2), q(1)});
    CHECK(touch.status == PositivityStatus::has_nonneg_root);
    CHECK_FALSE(touch.negative_at.has_value());

    CHECK_THROWS_AS(polya::certify_positive(Polynomial{}), polya::ZeroPolynomial);
}

TEST_CASE("compute_L") {
    CHECK(polya::compute_L(kQuad) == q(1));
    for (unsigned d = 1; d <= 6; ++d) CHECK(polya::compute_L(Polynomial::one_plus_x_pow(d)) == q(1));
    CHECK(polya::compute_L(kCubic) == q(1));
    CHECK(polya::compute_L(Polynomial{q(1), q(-12), q(1)}) == q(6));
}

TEST_CASE("compute_lambda worked examples collapse to exact values") {
    const auto quad = polya::compute_lambda(kQuad);
    CHECK(quad.lo == q(1, 4));
    CHECK(quad.hi == q(1, 4));

    for (unsigned d = 1; d <= 5; ++d) {
        const auto bin = polya::compute_lambda(Polynomial::one_plus_x_pow(d));
        CHECK(bin.lo == q(1));
        CHECK(bin.hi == q(1));
    }

    const auto cubic = polya::compute_lambda(kCubic);
    CHECK(cubic.lo == q(1, 4));
    CHECK(cubic.hi == q(1, 4));
}

TEST_CASE("compute_lambda on an irrational minimiser") {
    // x^2 - x + 1/2 : minimum of P/(1+x)^2 is irrational.
    const Polynomial p{q(1, 2), q(-1), q(1)};
    const Rational tol = q(1, 1000000000);
    const auto lam = polya::compute_lambda(p, tol);
    CHECK(lam.lo < lam.hi);
    CHECK(lam.hi - lam.lo <= tol);
    // 1/2 at 0 and 1 at infinity bound it from above.
    CHECK(lam.hi < q(1, 2));
}

TEST_CASE("compute_lambda uses the leading coefficient at infinity") {
    // (1+x)^2 + 3 : the ratio decreases to 1 as x grows; the infimum is not attained.
    const Polynomial p{q(4), q(2), q(1)};
    const auto lam = polya::compute_lambda(p);
    CHECK(lam.lo == q(1));
    CHECK(lam.hi == q(1));
}

TEST_CASE("compute_lambda errors") {
    CHECK_THROWS_AS(polya::compute_lambda(Polynomial{q(-1), q(1)}), polya::NotPositive);
    CHECK_THROWS_AS(polya::compute_lambda(kQuad, q(0)), polya::Error);
}

TEST_CASE("check_L_ge_lambda") {
    const auto cube = polya::check_L_ge_lambda(Polynomial::one_plus_x_pow(3));
    CHECK(cube.holds);
    CHECK(cube.equality);

    const auto quad = polya::check_L_ge_lambda(kQuad);
    CHECK(quad.holds);
    CHECK_FALSE(quad.equality);

    const auto seven = polya::check_L_ge_lambda(polya::scale(Polynomial::one_plus_x_pow(4), q(7)));
    CHECK(seven.holds);
    CHECK(seven.equality);
}

TEST_CASE("property: Sturm count agrees with sign changes over isolating intervals") {
    polya::PolynomialSampler rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial p = rng.integer_polynomial(static_cast<int>(rng.uniform(1, 6)));
        const Polynomial sf = polya::squarefree_part(p);
        const auto roots = polya::isolate_nonneg_roots(p);
        const polya::SturmSequence sturm(sf);
        // count_roots covers (a, b]; a root at 0 is added separately
        const int expected = sturm.count_roots(q(0), polya::cauchy_root_bound(sf)) + (sf.eval(q(0)).is_zero() ? 1 : 0);
        int changes = 0;
        for (const auto& iv : roots) changes += interval_sign_change(sf, iv);
        REQUIRE(static_cast<int>(roots.size()) == expected);
        REQUIRE(changes == expected);
    }
}

TEST_CASE("property: L >= lambda_lo and the lambda residual is nonnegative") {
    polya::PolynomialSampler rng(202);
    for (int trial = 0; trial < 200; ++trial) {
        const int d = static_cast<int>(rng.uniform(1, 6));
        const Polynomial p = rng.positive_polynomial(d);
        const auto inv = polya::compute_invariants(p);
        REQUIRE(inv.L >= inv.lambda_lo);
        REQUIRE(inv.lambda_hi - inv.lambda_lo <= polya::default_lambda_tolerance());
        REQUIRE(inv.lambda_lo > q(0));
        const Polynomial residual =
            polya::sub(p, polya::scale(Polynomial::one_plus_x_pow(static_cast<unsigned>(p.degree())), inv.lambda_lo));
        if (residual.is_zero()) continue;  // p is a multiple of (1+x)^d
        const auto cert = polya::certify_positive(residual);
        REQUIRE_FALSE(cert.negative_at.has_value());
    }
}

TEST_CASE("property: halving tol halves the width and lambda_lo does not decrease") {
    polya::PolynomialSampler rng(303);
    for (int trial = 0; trial < 25; ++trial) {
        const Polynomial p = rng.positive_polynomial(static_cast<int>(rng.uniform(2, 5)));
        Rational tol = q(1, 1000);
        auto prev = polya::compute_lambda(p, tol);
        for (int step = 0; step < 6; ++step) {
            tol /= Rational(2);
            const auto next = polya::compute_lambda(p, tol);
            REQUIRE(next.hi - next.lo <= tol);
            REQUIRE(next.lo >= prev.lo);
            prev = next;
        }
    }
}
