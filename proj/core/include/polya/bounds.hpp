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

#ifndef POLYA_BOUNDS_HPP
#define POLYA_BOUNDS_HPP

#include <optional>
#include <string>

#include <gmpxx.h>

#include "polya/rational.hpp"

namespace polya {

/// Improved-bound constant C_d for d = 1..4: 0, 1, 3/2, 4232/2505.
/// Throws UnsupportedDegree otherwise.
Rational table_C(int d);

/// Smallest nonnegative integer m with m > bound.
mpz_class smallest_integer_above(const Rational& bound);

/// Smallest m >= 0 with m > (d^2 - d)/2 * ratio - d.
mpz_class powers_reznick_threshold(int d, const Rational& ratio);

/// Smallest m >= 0 with m > C_d * ratio - 1. Throws UnsupportedDegree for d outside 1..4.
mpz_class improved_threshold(int d, const Rational& ratio);

enum class BoundWinner { powers_reznick, improved, tie, powers_reznick_only };

std::string to_string(BoundWinner w);

struct BoundComparison {
    BoundWinner winner = BoundWinner::tie;
    /// Set for d = 3 only: whether ratio >= 4/3, where the improved bound is
    /// guaranteed to be at least as strong.
    std::optional<bool> ratio_at_least_four_thirds;
    std::string note;
};

BoundComparison compare_bounds(int d, const Rational& ratio);

struct BoundReport {
    int d = 0;
    Rational ratio_hi;
    mpz_class pr_threshold;
    std::optional<mpz_class> improved_threshold;  // empty for d > 4
    std::optional<Rational> C_d;
    BoundComparison comparison;
};

BoundReport bound_report(int d, const Rational& ratio);

}  // namespace polya

#endif
