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

#ifndef POLYA_EXPANSION_HPP
#define POLYA_EXPANSION_HPP

#include <map>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "polya/polynomial.hpp"

namespace polya {

/// Coefficients of (1 + x)^m p(x); length m + deg p + 1 for nonzero p.
Polynomial expand(const Polynomial& p, unsigned m);

/// True iff every coefficient of (1 + x)^m p(x), indices 0..m+d, is > 0.
bool all_coeffs_positive(const Polynomial& p, unsigned m);

/// Sum_j a_j C(m, k - j). Throws IndexOutOfRange unless 0 <= k <= m + d.
Rational coeff_via_binomials(const Polynomial& p, unsigned m, long k);

struct MinimalMResult {
    std::optional<unsigned> minimal_m;  // empty: exceeded cap
    unsigned cap = 0;
    /// m -> smallest k with a nonpositive coefficient, for each rejected m.
    std::map<unsigned, unsigned> first_failing_index;

    bool exceeded_cap() const { return !minimal_m.has_value(); }
};

/// Smallest m in 0..cap with all coefficients positive. Each step reuses the
/// previous expansion via one multiplication by (1 + x).
/// Throws NotPositive unless p is certified positive on [0, inf).
MinimalMResult minimal_m(const Polynomial& p, unsigned cap);

/// max(64, 4 * pr_threshold), saturated to the unsigned range.
unsigned default_cap(const mpz_class& pr_threshold);

}  // namespace polya

#endif
