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

#include "polya/expansion.hpp"

#include <limits>

#include "polya/error.hpp"
#include "polya/positivity.hpp"

namespace polya {

namespace {

// In place: coefficients of (1 + x) times the given ones; grows by one.
void multiply_one_plus_x(std::vector<mpq_class>& cs) {
    cs.emplace_back(0);
    for (std::size_t k = cs.size() - 1; k > 0; --k) cs[k] += cs[k - 1];
}

// Index of the first coefficient <= 0, or size() when all are positive.
std::size_t first_nonpositive(const std::vector<mpq_class>& cs) {
    for (std::size_t k = 0; k < cs.size(); ++k) {
        if (sgn(cs[k]) <= 0) return k;
    }
    return cs.size();
}

std::vector<mpq_class> raw_coefficients(const Polynomial& p) {
    std::vector<mpq_class> cs;
    cs.reserve(p.coefficients().size());
    for (const auto& a : p.coefficients()) cs.push_back(a.raw());
    return cs;
}

}  // namespace

Polynomial expand(const Polynomial& p, unsigned m) {
    if (p.is_zero()) return {};
    auto cs = raw_coefficients(p);
    for (unsigned i = 0; i < m; ++i) multiply_one_plus_x(cs);
    std::vector<Rational> out;
    out.reserve(cs.size());
    for (auto& v : cs) out.emplace_back(std::move(v));
    return Polynomial(std::move(out));
}

bool all_coeffs_positive(const Polynomial& p, unsigned m) {
    if (p.is_zero()) return false;
    auto cs = raw_coefficients(p);
    for (unsigned i = 0; i < m; ++i) multiply_one_plus_x(cs);
    return first_nonpositive(cs) == cs.size();
}

Rational coeff_via_binomials(const Polynomial& p, unsigned m, long k) {
    const long d = p.degree();
    if (k < 0 || k > static_cast<long>(m) + std::max(d, 0L)) {
        throw IndexOutOfRange("coefficient index " + std::to_string(k) + " outside 0.." +
                              std::to_string(static_cast<long>(m) + std::max(d, 0L)));
    }
    Rational sum;
    for (long j = 0; j <= d; ++j) sum += p.coefficient(static_cast<std::size_t>(j)) * binomial(m, k - j);
    return sum;
}

MinimalMResult minimal_m(const Polynomial& p, unsigned cap) {
    if (p.is_zero()) throw ZeroPolynomial();
    const auto cert = certify_positive(p);
    if (!cert.positive()) throw NotPositive("minimal_m: " + cert.method_trace);

    MinimalMResult result;
    result.cap = cap;
    auto cs = raw_coefficients(p);
    for (unsigned m = 0;; ++m) {
        const std::size_t k = first_nonpositive(cs);
        if (k == cs.size()) {
            result.minimal_m = m;
            return result;
        }
        result.first_failing_index[m] = static_cast<unsigned>(k);
        if (m == cap) return result;
        multiply_one_plus_x(cs);
    }
}

unsigned default_cap(const mpz_class& pr_threshold) {
    const mpz_class cap = 4 * pr_threshold;
    if (cap < 64) return 64;
    if (cap > std::numeric_limits<unsigned>::max()) return std::numeric_limits<unsigned>::max();
    return static_cast<unsigned>(cap.get_ui());
}

}  // namespace polya
