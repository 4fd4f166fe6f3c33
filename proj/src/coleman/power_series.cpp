// Copyright 2026-present the excezero project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "excezero/coleman/power_series.hpp"

#include <algorithm>
#include <sstream>

#include "excezero/errors.hpp"
#include "excezero/padic/prime_powers.hpp"

namespace excezero::coleman {

namespace {

int
ord_or_precision(const PadicNumber& x) {
    return x.is_zero() ? x.precision() : x.valuation();
}

}  // namespace

PowerSeriesZp::PowerSeriesZp(long p, int degree, int precision)
    : p_(p), coeffs_(std::max(degree, 0), PadicNumber::zero(p, precision)) {
}

PowerSeriesZp
PowerSeriesZp::from_coefficients(long p, std::vector<PadicNumber> coeffs, int degree) {
    PowerSeriesZp s;
    s.p_ = p;
    if (static_cast<int>(coeffs.size()) < degree) {
        throw ValidationError("fewer coefficients than the stated degree");
    }
    coeffs.resize(degree);
    for (const auto& c : coeffs) {
        if (c.prime() != 0 && c.prime() != p) {
            throw ValidationError("coefficient prime mismatch");
        }
        if (!c.is_zero() && c.valuation() < 0) {
            throw DomainError("coefficients must be p-adic integers");
        }
    }
    s.coeffs_ = std::move(coeffs);
    return s;
}

PowerSeriesZp
PowerSeriesZp::constant(long p, const PadicNumber& c, int degree) {
    std::vector<PadicNumber> v(degree, PadicNumber::exact_zero(p));
    if (degree > 0) {
        v[0] = c;
    }
    return from_coefficients(p, std::move(v), degree);
}

PowerSeriesZp
PowerSeriesZp::linear(long p, const PadicNumber& a, const PadicNumber& b, int degree) {
    std::vector<PadicNumber> v(degree, PadicNumber::exact_zero(p));
    if (degree > 0) {
        v[0] = a;
    }
    if (degree > 1) {
        v[1] = b;
    }
    return from_coefficients(p, std::move(v), degree);
}

int
PowerSeriesZp::precision() const {
    int n = padic::kExactPrecision;
    for (const auto& c : coeffs_) {
        n = std::min(n, c.precision());
    }
    return n;
}

PowerSeriesZp
PowerSeriesZp::truncate(int degree, int precision) const {
    PowerSeriesZp r;
    r.p_ = p_;
    int d = std::min(degree, this->degree());
    r.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + d);
    for (auto& c : r.coeffs_) {
        if (!c.is_exact_zero() && c.precision() > precision) {
            c = c.truncate(precision);
        }
    }
    return r;
}

PowerSeriesZp&
PowerSeriesZp::operator+=(const PowerSeriesZp& other) {
    coeffs_.resize(std::min(degree(), other.degree()));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    return *this;
}

PowerSeriesZp&
PowerSeriesZp::operator-=(const PowerSeriesZp& other) {
    coeffs_.resize(std::min(degree(), other.degree()));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    return *this;
}

PowerSeriesZp&
PowerSeriesZp::operator*=(const PowerSeriesZp& other) {
    const int d = std::min(degree(), other.degree());
    std::vector<PadicNumber> out(d, PadicNumber::exact_zero(p_));
    for (int i = 0; i < d; ++i) {
        if (coeffs_[i].is_exact_zero()) {
            continue;
        }
        for (int j = 0; i + j < d; ++j) {
            if (!other.coeffs_[j].is_exact_zero()) {
                out[i + j] += coeffs_[i] * other.coeffs_[j];
            }
        }
    }
    coeffs_ = std::move(out);
    return *this;
}

PowerSeriesZp&
PowerSeriesZp::operator*=(const PadicNumber& scalar) {
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

PowerSeriesZp
PowerSeriesZp::operator-() const {
    PowerSeriesZp r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

PowerSeriesZp
PowerSeriesZp::inverse() const {
    if (coeffs_.empty()) {
        return *this;
    }
    if (coeffs_[0].is_zero() || coeffs_[0].valuation() != 0) {
        throw DomainError("series inverse needs a unit constant term");
    }
    const int d = degree();
    PadicNumber inv0 = coeffs_[0].inverse();
    std::vector<PadicNumber> b(d, PadicNumber::exact_zero(p_));
    b[0] = inv0;
    for (int k = 1; k < d; ++k) {
        PadicNumber s = PadicNumber::exact_zero(p_);
        for (int i = 1; i <= k; ++i) {
            if (!coeffs_[i].is_exact_zero()) {
                s += coeffs_[i] * b[k - i];
            }
        }
        b[k] = -(s * inv0);
    }
    return from_coefficients(p_, std::move(b), d);
}

PowerSeriesZp
PowerSeriesZp::compose(const PowerSeriesZp& h) const {
    if (h.degree() == 0 || degree() == 0) {
        return PowerSeriesZp(p_, 0, precision());
    }
    const PadicNumber& h0 = h.coefficient(0);
    int cap = padic::kExactPrecision;
    if (!h0.is_exact_zero()) {
        if (!h0.is_zero() && h0.valuation() < 1) {
            throw DomainError("composition needs ord_p(h(0)) >= 1");
        }
        cap = degree() * ord_or_precision(h0);
    }
    const int d = h0.is_exact_zero() ? std::min(degree(), h.degree()) : h.degree();
    PowerSeriesZp acc = constant(p_, coeffs_.back(), d);
    for (int i = degree() - 2; i >= 0; --i) {
        acc *= h;
        acc.coeffs_[0] += coeffs_[i];
    }
    if (cap < acc.precision()) {
        acc = acc.truncate(d, cap);
    }
    return acc;
}

PadicNumber
PowerSeriesZp::evaluate(const PadicNumber& x) const {
    if (!x.is_zero() && x.valuation() < 1) {
        throw DomainError("evaluation needs ord_p(x) >= 1");
    }
    if (coeffs_.empty()) {
        return PadicNumber::zero(p_, 0);
    }
    if (x.is_exact_zero()) {
        return coeffs_[0];
    }
    PadicNumber acc = coeffs_.back();
    for (int i = degree() - 2; i >= 0; --i) {
        acc = acc * x + coeffs_[i];
    }
    int cap = degree() * ord_or_precision(x);
    return acc.precision() > cap ? acc.truncate(cap) : acc;
}

CyclotomicElement
PowerSeriesZp::evaluate_at_zeta_minus_one(int n) const {
    if (n < 0) {
        throw DomainError("cyclotomic level must be nonnegative");
    }
    const int prec = precision();
    CyclotomicElement one = CyclotomicElement::from_padic(p_, n, PadicNumber::one(p_, prec));
    CyclotomicElement pi = one.mul_zeta(1) - one;
    CyclotomicElement acc = CyclotomicElement::from_padic(p_, n, coeffs_.back());
    for (int i = degree() - 2; i >= 0; --i) {
        acc = acc * pi;
        acc += CyclotomicElement::from_padic(p_, n, coeffs_[i]);
    }
    long e = (p_ - 1) * padic::prime_power(p_, n).get_si();
    int cap = static_cast<int>(degree() / e);
    return acc.precision() > cap ? acc.truncate(cap) : acc;
}

std::string
PowerSeriesZp::str(int terms) const {
    std::ostringstream os;
    for (int i = 0; i < std::min(terms, degree()); ++i) {
        if (i > 0) {
            os << " + ";
        }
        os << "(" << coeffs_[i].str() << ")";
        if (i > 0) {
            os << "*X^" << i;
        }
    }
    os << " + O(X^" << degree() << ")";
    return os.str();
}

PowerSeriesZp
operator+(PowerSeriesZp a, const PowerSeriesZp& b) {
    return a += b;
}

PowerSeriesZp
operator-(PowerSeriesZp a, const PowerSeriesZp& b) {
    return a -= b;
}

PowerSeriesZp
operator*(PowerSeriesZp a, const PowerSeriesZp& b) {
    return a *= b;
}

PowerSeriesZp
operator*(PowerSeriesZp a, const PadicNumber& b) {
    return a *= b;
}

int
agreement(const PowerSeriesZp& a, const PowerSeriesZp& b) {
    int best = padic::kExactPrecision;
    const int d = std::min(a.degree(), b.degree());
    for (int i = 0; i < d; ++i) {
        best = std::min(best, padic::agreement(a.coefficient(i), b.coefficient(i)));
    }
    return best;
}

PowerSeriesZp
coleman_norm_operator(const PowerSeriesZp& f, int max_degree) {
    const long p = f.prime();
    const int d = f.degree();
    const int n = f.precision();
    if (d == 0) {
        throw DomainError("norm operator needs a nonempty series");
    }
    const PadicNumber& f0 = f.coefficient(0);
    if (f0.is_zero() || f0.valuation() != 0) {
        throw DomainError("norm operator needs a unit series");
    }
    // Substituting X = (zeta - 1) + zeta T into f mod X^D leaves the T^j
    // coefficient exact to p^N as long as (D - j)/(p - 1) >= N.
    int d_sub = d - n * static_cast<int>(p - 1);
    if (d_sub < static_cast<int>(p)) {
        throw PrecisionError("series degree too small for the norm operator at this precision");
    }
    const int lost = static_cast<int>((static_cast<long>(n) * (p - 1) + p - 1) / p);
    if (max_degree >= 0) {
        d_sub = std::min<long>(d_sub, p * (max_degree + lost) + 1);
    }

    // S(T) = f((zeta - 1) + zeta T) in K_0[[T]] by Horner:
    // acc <- acc * (zeta - 1 + zeta T) + f_i
    std::vector<CyclotomicElement> acc(d_sub, CyclotomicElement(p, 0));
    acc[0] = CyclotomicElement::from_padic(p, 0, f.coefficient(d - 1));
    for (int i = d - 2; i >= 0; --i) {
        std::vector<CyclotomicElement> next(d_sub, CyclotomicElement(p, 0));
        for (int j = 0; j < d_sub; ++j) {
            CyclotomicElement zj = acc[j].mul_zeta(1);
            next[j] += zj - acc[j];
            if (j + 1 < d_sub) {
                next[j + 1] += zj;
            }
        }
        next[0] += CyclotomicElement::from_padic(p, 0, f.coefficient(i));
        acc = std::move(next);
    }

    // F(T) = f(T) * prod over the nontrivial zeta, i.e. over the Galois
    // conjugates of S.
    std::vector<CyclotomicElement> prod = acc;
    for (long b = 2; b < p; ++b) {
        std::vector<CyclotomicElement> conj(d_sub, CyclotomicElement(p, 0));
        for (int j = 0; j < d_sub; ++j) {
            conj[j] = acc[j].galois(b);
        }
        std::vector<CyclotomicElement> next(d_sub, CyclotomicElement(p, 0));
        for (int i = 0; i < d_sub; ++i) {
            for (int j = 0; i + j < d_sub; ++j) {
                next[i + j] += prod[i] * conj[j];
            }
        }
        prod = std::move(next);
    }
    std::vector<PadicNumber> big_f(d_sub, PadicNumber::exact_zero(p));
    for (int i = 0; i < d_sub; ++i) {
        PadicNumber c = prod[i].to_padic();
        for (int j = 0; i + j < d_sub; ++j) {
            big_f[i + j] += c * f.coefficient(j);
        }
    }

    // Back-substitution in phi(T) = (1+T)^p - 1. [T^(pj)] phi^i vanishes for
    // i < j, is 1 for i = j and has ord_p >= (i - j) p/(p - 1) for i > j.
    const int j_max = (d_sub - 1) / static_cast<int>(p);
    const int top = static_cast<int>(p) * j_max + 1;
    const mpz_class& modulus = padic::prime_power(p, n + 2);
    std::vector<mpz_class> phi(top, 0);
    for (int k = 1; k <= p && k < top; ++k) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), p, k);
        phi[k] = b;
    }
    // column[i][j] = [T^(pj)] phi^i
    std::vector<std::vector<mpz_class>> column(j_max + 1, std::vector<mpz_class>(j_max + 1, 0));
    std::vector<mpz_class> power(top, 0);
    power[0] = 1;
    for (int i = 0; i <= j_max; ++i) {
        for (int j = 0; j <= j_max; ++j) {
            column[i][j] = power[static_cast<long>(p) * j];
        }
        std::vector<mpz_class> next(top, 0);
        for (int a = 0; a < top; ++a) {
            if (power[a] == 0) {
                continue;
            }
            for (int b = 1; b <= p && a + b < top; ++b) {
                next[a + b] += power[a] * phi[b];
            }
        }
        for (auto& c : next) {
            c %= modulus;
        }
        power = std::move(next);
    }
    std::vector<PadicNumber> h(j_max + 1, PadicNumber::exact_zero(p));
    for (int j = j_max; j >= 0; --j) {
        PadicNumber s = big_f[static_cast<long>(p) * j];
        for (int i = j + 1; i <= j_max; ++i) {
            if (column[i][j] != 0) {
                s -= h[i] * PadicNumber::from_integer(p, column[i][j], n + 2);
            }
        }
        h[j] = s;
    }
    // Drop the coefficients whose neglected tail H_i (i > j_max) could reach p^N.
    int out_degree = std::max(0, j_max + 1 - lost);
    if (max_degree >= 0) {
        out_degree = std::min(out_degree, max_degree);
    }
    auto out = PowerSeriesZp::from_coefficients(p, std::move(h), out_degree);
    return out.truncate(out_degree, n);
}

}  // namespace excezero::coleman
