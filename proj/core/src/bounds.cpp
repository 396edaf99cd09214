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

#include "polya/bounds.hpp"

#include "polya/error.hpp"

namespace polya {

Rational table_C(int d) {
    switch (d) {
        case 1: return Rational(0);
        case 2: return Rational(1);
        case 3: return Rational(3, 2);
        case 4: return Rational(mpz_class(4232), mpz_class(2505));
        default: throw UnsupportedDegree(d);
    }
}

mpz_class smallest_integer_above(const Rational& bound) {
    mpz_class m = bound.floor() + 1;
    return m < 0 ? mpz_class(0) : m;
}

mpz_class powers_reznick_threshold(int d, const Rational& ratio) {
    if (d < 1) throw UnsupportedDegree(d);
    const Rational factor{mpz_class(static_cast<long>(d) * d - d), mpz_class(2)};
    return smallest_integer_above(factor * ratio - Rational(d));
}

mpz_class improved_threshold(int d, const Rational& ratio) {
    return smallest_integer_above(table_C(d) * ratio - Rational(1));
}

std::string to_string(BoundWinner w) {
    switch (w) {
        case BoundWinner::powers_reznick: return "powers_reznick";
        case BoundWinner::improved: return "improved";
        case BoundWinner::tie: return "tie";
        case BoundWinner::powers_reznick_only: return "powers_reznick_only";
    }
    return "unknown";
}

BoundComparison compare_bounds(int d, const Rational& ratio) {
    BoundComparison out;
    if (d > 4) {
        out.winner = BoundWinner::powers_reznick_only;
        out.note = "no improved constant for d > 4";
        return out;
    }
    const mpz_class pr = powers_reznick_threshold(d, ratio);
    const mpz_class im = improved_threshold(d, ratio);
    out.winner = im < pr ? BoundWinner::improved : (im == pr ? BoundWinner::tie : BoundWinner::powers_reznick);
    if (d == 3) {
        const bool above = ratio >= Rational(4, 3);
        out.ratio_at_least_four_thirds = above;
        out.note = above ? "ratio >= 4/3: improved bound is at least as strong"
                         : "ratio < 4/3: Powers-Reznick bound may be stronger";
    } else if (d == 4) {
        out.note = "d = 4: improved bound is at least as strong for every ratio >= 1";
    }
    return out;
}

BoundReport bound_report(int d, const Rational& ratio) {
    BoundReport r;
    r.d = d;
    r.ratio_hi = ratio;
    r.pr_threshold = powers_reznick_threshold(d, ratio);
    if (d >= 1 && d <= 4) {
        r.C_d = table_C(d);
        r.improved_threshold = improved_threshold(d, ratio);
    }
    r.comparison = compare_bounds(d, ratio);
    return r;
}

}  // namespace polya
