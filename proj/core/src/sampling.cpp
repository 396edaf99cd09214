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

#include "polya/sampling.hpp"

#include <limits>

#include "polya/positivity.hpp"

namespace polya {

long PolynomialSampler::uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t v;
    do {
        v = engine_();
    } while (v >= limit);
    return lo + static_cast<long>(v % span);
}

Polynomial PolynomialSampler::integer_polynomial(int degree, long lo, long hi) {
    std::vector<Rational> cs;
    for (int i = 0; i < degree; ++i) cs.emplace_back(uniform(lo, hi));
    long lead = 0;
    while (lead == 0) lead = uniform(lo, hi);
    cs.emplace_back(lead);
    return Polynomial(std::move(cs));
}

Polynomial PolynomialSampler::positive_polynomial(int degree, long lo, long hi) {
    while (true) {
        Polynomial p = integer_polynomial(degree, lo, hi);
        if (certify_positive(p).positive()) return p;
    }
}

}  // namespace polya
