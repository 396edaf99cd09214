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

#include "polya/positivity.hpp"

#include <algorithm>
#include <sstream>

#include "polya/error.hpp"

namespace polya {

namespace {

int sign_at(const Polynomial& p, const Rational& x) { return p.eval(x).sign(); }

/// p(x) / x for p(0) == 0.
Polynomial deflate_at_zero(const Polynomial& p) {
    const auto cs = p.coefficients();
    return Polynomial(std::vector<Rational>(cs.begin() + 1, cs.end()));
}

class Isolator {
public:
    explicit Isolator(const Polynomial& squarefree) : q_(squarefree), sturm_(squarefree) {}

    /// Appends isolating intervals for the roots in (lo, hi]; q(lo), q(hi) != 0.
    void run(const Rational& lo, const Rational& hi, std::vector<RootInterval>& out) const {
        bisect(lo, hi, sturm_.variations_at(lo), sturm_.variations_at(hi), out);
    }

    const SturmSequence& sturm() const { return sturm_; }

private:
    void bisect(const Rational& lo, const Rational& hi, int vlo, int vhi, std::vector<RootInterval>& out) const {
        const int n = vlo - vhi;
        if (n <= 0) return;
        if (n == 1) {
            out.push_back({lo, hi});
            return;
        }
        const Rational mid = (lo + hi) / Rational(2);
        if (sign_at(q_, mid) != 0) {
            const int vmid = sturm_.variations_at(mid);
            bisect(lo, mid, vlo, vmid, out);
            bisect(mid, hi, vmid, vhi, out);
            return;
        }
        // Exact root at mid: fence it off with non-root neighbours.
        Rational delta = (hi - lo) / Rational(4);
        while (sign_at(q_, mid - delta) == 0 || sign_at(q_, mid + delta) == 0 ||
               sturm_.count_roots(mid - delta, mid + delta) != 1) {
            delta /= Rational(2);
        }
        const Rational left = mid - delta;
        const Rational right = mid + delta;
        const int vleft = sturm_.variations_at(left);
        const int vright = sturm_.variations_at(right);
        bisect(lo, left, vlo, vleft, out);
        out.push_back({mid, mid});
        bisect(right, hi, vright, vhi, out);
    }

    Polynomial q_;
    SturmSequence sturm_;
};

}  // namespace

Rational cauchy_root_bound(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    const Rational lead = abs(p.leading());
    Rational m;
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs(p.coefficient(static_cast<std::size_t>(i))) / lead);
    return Rational(1) + m;
}

SturmSequence::SturmSequence(const Polynomial& squarefree) {
    if (squarefree.is_zero()) throw ZeroPolynomial();
    chain_.push_back(squarefree);
    Polynomial next = squarefree.derivative();
    while (!next.is_zero()) {
        chain_.push_back(next);
        const std::size_t n = chain_.size();
        next = -divmod(chain_[n - 2], chain_[n - 1]).second;
    }
}

int SturmSequence::variations_at(const Rational& x) const {
    int variations = 0;
    int last = 0;
    for (const auto& s : chain_) {
        const int sg = sign_at(s, x);
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++variations;
        last = sg;
    }
    return variations;
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const {
    return variations_at(a) - variations_at(b);
}

std::vector<RootInterval> isolate_nonneg_roots(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    std::vector<RootInterval> out;
    Polynomial q = squarefree_part(p);
    Rational lo;
    if (q.coefficient(0).is_zero()) {
        out.push_back({Rational{}, Rational{}});
        q = deflate_at_zero(q);
        if (q.degree() <= 0) return out;
        // Start the search past every positive root of q close to 0.
        const SturmSequence sturm(q);
        lo = cauchy_root_bound(q) / Rational(2);
        while (sign_at(q, lo) == 0 || sturm.count_roots(Rational{}, lo) != 0) lo /= Rational(2);
    }
    if (q.degree() <= 0) return out;
    const Rational hi = cauchy_root_bound(q);
    Isolator(q).run(lo, hi, out);
    // Bisection leaves neighbours sharing an endpoint; shrink until disjoint.
    for (std::size_t i = 1; i < out.size(); ++i) {
        while (out[i - 1].hi == out[i].lo) out[i - 1] = refine_root(q, out[i - 1], out[i - 1].width() / Rational(2));
    }
    return out;
}

RootInterval refine_root(const Polynomial& squarefree, RootInterval iv, const Rational& max_width) {
    if (iv.exact()) return iv;
    int slo = sign_at(squarefree, iv.lo);
    while (iv.width() > max_width) {
        const Rational mid = (iv.lo + iv.hi) / Rational(2);
        const int smid = sign_at(squarefree, mid);
        if (smid == 0) return {mid, mid};
        if (smid == slo) {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
        slo = sign_at(squarefree, iv.lo);
    }
    return iv;
}

std::string to_string(PositivityStatus s) {
    switch (s) {
        case PositivityStatus::positive_on_nonneg: return "positive_on_nonneg";
        case PositivityStatus::has_nonneg_root: return "has_nonneg_root";
        case PositivityStatus::negative_somewhere: return "negative_somewhere";
    }
    return "unknown";
}

PositivityCertificate certify_positive(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    PositivityCertificate cert;
    std::ostringstream trace;

    const auto roots = isolate_nonneg_roots(p);
    trace << "Sturm chain of squarefree part (degree " << squarefree_part(p).degree() << "), "
          << roots.size() << " distinct root(s) in [0, inf)";

    // The sign of p is constant between consecutive roots: probe 0, one point
    // in each gap, and one point past the last root.
    std::vector<Rational> probes{Rational{}};
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) probes.push_back((roots[i].hi + roots[i + 1].lo) / Rational(2));
    if (!roots.empty()) probes.push_back(roots.back().hi + Rational(1));
    for (const auto& x : probes) {
        if (sign_at(p, x) < 0) {
            cert.negative_at = x;
            trace << "; p(" << x << ") < 0";
            break;
        }
    }

    if (!roots.empty()) {
        cert.status = PositivityStatus::has_nonneg_root;
        cert.witness = refine_root(squarefree_part(p), roots.front(), Rational(mpz_class(1), mpz_class(1024)));
        trace << "; root in [" << cert.witness->lo << ", " << cert.witness->hi << "]";
    } else if (cert.negative_at) {
        cert.status = PositivityStatus::negative_somewhere;
        cert.witness = RootInterval{*cert.negative_at, *cert.negative_at};
    } else {
        cert.status = PositivityStatus::positive_on_nonneg;
        trace << "; p(0) = " << p.coefficient(0) << " > 0, leading coefficient " << p.leading() << " > 0";
    }
    cert.method_trace = trace.str();
    return cert;
}

Rational compute_L(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    const int d = p.degree();
    Rational best;
    for (int j = 0; j <= d; ++j) best = std::max(best, abs(p.coefficient(static_cast<std::size_t>(j))) / binomial(d, j));
    return best;
}

Rational default_lambda_tolerance() { return Rational(mpz_class(1), mpz_class(1000000000)); }

namespace {

/// Certified enclosure of p(x) / (1+x)^d over [lo, hi] with lo >= 0, from the
/// split p = p_plus - p_minus into monotone parts.
LambdaInterval enclose_ratio(const Polynomial& p_plus, const Polynomial& p_minus, unsigned d,
                             const RootInterval& iv) {
    const Rational num_lo = p_plus.eval(iv.lo) - p_minus.eval(iv.hi);
    const Rational num_hi = p_plus.eval(iv.hi) - p_minus.eval(iv.lo);
    const Rational den_lo = pow(Rational(1) + iv.lo, d);
    const Rational den_hi = pow(Rational(1) + iv.hi, d);
    return {num_lo.sign() >= 0 ? num_lo / den_hi : num_lo / den_lo,
            num_hi.sign() >= 0 ? num_hi / den_lo : num_hi / den_hi};
}

}  // namespace

LambdaInterval compute_lambda(const Polynomial& p, const Rational& tol) {
    if (p.is_zero()) throw ZeroPolynomial();
    if (tol.sign() <= 0) throw Error("compute_lambda: tolerance must be positive");
    const auto cert = certify_positive(p);
    if (!cert.positive()) throw NotPositive("compute_lambda: polynomial is not positive on [0, inf): " + cert.method_trace);

    const auto d = static_cast<unsigned>(p.degree());
    const Polynomial one_plus_x{Rational(1), Rational(1)};
    const Polynomial K = p.derivative() * one_plus_x - p * Rational(static_cast<long>(d));

    LambdaInterval result{p.coefficient(0), p.coefficient(0)};
    auto consider = [&result](const Rational& lo, const Rational& hi) {
        result.lo = std::min(result.lo, lo);
        result.hi = std::min(result.hi, hi);
    };
    auto ratio_at = [&p, d](const Rational& x) { return p.eval(x) / pow(Rational(1) + x, d); };

    consider(p.leading(), p.leading());

    if (!K.is_zero()) {
        std::vector<Rational> plus(d + 1), minus(d + 1);
        for (unsigned i = 0; i <= d; ++i) {
            const Rational a = p.coefficient(i);
            (a.sign() > 0 ? plus[i] : minus[i]) = abs(a);
        }
        const Polynomial p_plus(std::move(plus));
        const Polynomial p_minus(std::move(minus));
        const Polynomial k_sqfree = squarefree_part(K);

        for (RootInterval iv : isolate_nonneg_roots(K)) {
            if (iv.exact()) {
                const Rational v = ratio_at(iv.lo);
                consider(v, v);
                continue;
            }
            LambdaInterval enc = enclose_ratio(p_plus, p_minus, d, iv);
            while (enc.hi - enc.lo > tol) {
                iv = refine_root(k_sqfree, iv, iv.width() / Rational(2));
                if (iv.exact()) {
                    enc.lo = enc.hi = ratio_at(iv.lo);
                    break;
                }
                enc = enclose_ratio(p_plus, p_minus, d, iv);
            }
            // Exact values at the endpoints are valid upper bounds for the infimum.
            consider(enc.lo, std::min({enc.hi, ratio_at(iv.lo), ratio_at(iv.hi)}));
        }
    }

    const Polynomial residual = p - Polynomial::one_plus_x_pow(d) * result.lo;
    if (!residual.is_zero() && certify_positive(residual).negative_at) {
        throw VerificationFailed("compute_lambda: P - lambda_lo (1+x)^d is negative somewhere on [0, inf)");
    }
    return result;
}

InvariantReport compute_invariants(const Polynomial& p, const Rational& tol) {
    InvariantReport r;
    r.L = compute_L(p);
    const auto lam = compute_lambda(p, tol);
    r.lambda_lo = lam.lo;
    r.lambda_hi = lam.hi;
    r.ratio_hi = r.L / r.lambda_lo;
    return r;
}

bool is_scaled_binomial_power(const Polynomial& p) {
    if (p.is_zero()) return false;
    const Rational b = p.coefficient(0);
    if (b.sign() <= 0) return false;
    return p == Polynomial::one_plus_x_pow(static_cast<unsigned>(p.degree())) * b;
}

LambdaComparison check_L_ge_lambda(const Polynomial& p, const Rational& tol) {
    const auto lam = compute_lambda(p, tol);
    return {compute_L(p) >= lam.lo, is_scaled_binomial_power(p)};
}

}  // namespace polya
