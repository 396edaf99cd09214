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

#ifndef POLYA_POLYNOMIAL_HPP
#define POLYA_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polya/rational.hpp"

namespace polya {

/// Dense univariate polynomial over the rationals, coefficients in ascending
/// power order. Trailing zeros are trimmed, so the zero polynomial has no
/// coefficients and degree() == -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(std::initializer_list<Rational> coefficients);

    /// Parses comma-separated rationals, ascending in degree: "1,-1,1" is x^2 - x + 1.
    static Polynomial parse(std::string_view text);
    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, std::size_t power);
    /// (1 + x)^n.
    static Polynomial one_plus_x_pow(unsigned n);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const Rational> coefficients() const noexcept { return coeffs_; }
    /// Coefficient of x^i; zero beyond the degree.
    Rational coefficient(std::size_t i) const;
    /// Leading coefficient; zero for the zero polynomial.
    Rational leading() const;

    Rational eval(const Rational& x) const;
    Polynomial derivative() const;

    /// Comma-separated ascending form accepted by parse().
    std::string to_text() const;
    /// Human-readable "x^2 - x + 1".
    std::string to_pretty() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial sub(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, const Rational& s);
Rational eval(const Polynomial& p, const Rational& x);
Polynomial derivative(const Polynomial& p);

/// Euclidean division; throws DivisionByZero for a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);
/// Monic greatest common divisor; gcd(0, 0) is 0.
Polynomial gcd(const Polynomial& p, const Polynomial& q);
/// p / gcd(p, p'): same distinct roots, all simple.
Polynomial squarefree_part(const Polynomial& p);
/// Unique polynomial of degree < n through n points with distinct abscissae.
Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

/// C(n, k); zero when k < 0 or k > n.
Rational binomial(long n, long k);
/// a (a - 1) ... (a - k + 1) / k!.
Rational generalized_binomial(const Rational& a, unsigned k);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace polya

#endif
