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

#ifndef POLYA_SAMPLING_HPP
#define POLYA_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "polya/polynomial.hpp"

namespace polya {

/// Seeded source of random test polynomials. Uses its own bounded-integer
/// mapping on top of mt19937_64 so sequences are identical on every platform.
class PolynomialSampler {
public:
    explicit PolynomialSampler(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi);

    /// Integer coefficients in [lo, hi], nonzero leading coefficient.
    Polynomial integer_polynomial(int degree, long lo = -9, long hi = 9);

    /// integer_polynomial with rejection until certify_positive succeeds.
    Polynomial positive_polynomial(int degree, long lo = -9, long hi = 9);

private:
    std::mt19937_64 engine_;
};

}  // namespace polya

#endif
