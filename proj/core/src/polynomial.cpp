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

#include "polya/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "polya/error.hpp"

namespace polya {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial Polynomial::parse(std::string_view text) {
    std::vector<Rational> cs;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        cs.push_back(Rational::parse(item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Polynomial(std::move(cs));
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
    std::vector<Rational> cs(power + 1);
    cs[power] = c;
    return Polynomial(std::move(cs));
}

Polynomial Polynomial::one_plus_x_pow(unsigned n) {
    std::vector<Rational> cs;
    cs.reserve(n + 1);
    for (unsigned k = 0; k <= n; ++k) cs.push_back(binomial(n, k));
    return Polynomial(std::move(cs));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational{}; }

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational{} : coeffs_.back(); }

Rational Polynomial::eval(const Rational& x) const {
    mpq_class acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x.raw();
        acc += it->raw();
    }
    return Rational(std::move(acc));
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> cs;
    cs.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) cs.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
    return Polynomial(std::move(cs));
}

std::string Polynomial::to_text() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += coeffs_[i].to_string();
    }
    return out;
}

std::string Polynomial::to_pretty() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& a = coeffs_[i];
        if (a.is_zero()) continue;
        const Rational mag = abs(a);
        if (first) {
            if (a.sign() < 0) os << '-';
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
        }
        const bool unit = mag == Rational(1);
        if (!unit || i == 0) os << mag;
        if (i >= 1) os << 'x';
        if (i >= 2) os << '^' << i;
        first = false;
    }
    return os.str();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (coeffs_.empty() || o.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<mpq_class> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) out[i + k] += coeffs_[i].raw() * o.coeffs_[k].raw();
    }
    coeffs_.clear();
    coeffs_.reserve(out.size());
    for (auto& v : out) coeffs_.emplace_back(std::move(v));
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= s;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& a : r.coeffs_) a = -a;
    return r;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial sub(const Polynomial& p, const Polynomial& q) { return p - q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }
Polynomial scale(const Polynomial& p, const Rational& s) { return p * s; }
Rational eval(const Polynomial& p, const Rational& x) { return p.eval(x); }
Polynomial derivative(const Polynomial& p) { return p.derivative(); }

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<Rational> rem(num.coefficients().begin(), num.coefficients().end());
    const int dd = den.degree();
    if (num.degree() < dd) return {Polynomial{}, num};
    std::vector<Rational> quot(static_cast<std::size_t>(num.degree() - dd + 1));
    const Rational lead = den.leading();
    for (int i = num.degree(); i >= dd; --i) {
        const Rational t = rem[static_cast<std::size_t>(i)] / lead;
        quot[static_cast<std::size_t>(i - dd)] = t;
        if (t.is_zero()) continue;
        for (int k = 0; k <= dd; ++k) rem[static_cast<std::size_t>(i - dd + k)] -= t * den.coefficient(static_cast<std::size_t>(k));
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
    Polynomial a = p;
    Polynomial b = q;
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Rational(1) / a.leading());
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.degree() <= 0) return p;
    const Polynomial g = gcd(p, p.derivative());
    return divmod(p, g).first;
}

Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
    if (xs.size() != ys.size()) throw Error("interpolate: abscissae and ordinates differ in length");
    // Newton divided differences.
    std::vector<Rational> dd(ys.begin(), ys.end());
    const std::size_t n = xs.size();
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            const Rational span = xs[i] - xs[i - level];
            if (span.is_zero()) throw Error("interpolate: repeated abscissa");
            dd[i] = (dd[i] - dd[i - 1]) / span;
        }
    }
    Polynomial result;
    for (std::size_t i = n; i-- > 0;) {
        result = result * Polynomial{-xs[i], Rational(1)} + Polynomial::constant(dd[i]);
    }
    return result;
}

Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rational{};
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

Rational generalized_binomial(const Rational& a, unsigned k) {
    mpq_class num = 1;
    for (unsigned i = 0; i < k; ++i) num *= a.raw() - i;
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), k);
    num /= fact;
    return Rational(std::move(num));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_pretty(); }

}  // namespace polya
