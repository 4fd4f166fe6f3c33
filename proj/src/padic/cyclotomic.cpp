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

#include "excezero/padic/cyclotomic.hpp"

#include <algorithm>
#include <sstream>

#include "excezero/errors.hpp"
#include "excezero/padic/prime_powers.hpp"

namespace excezero::padic {

namespace {

long
ipow(long p, int k) {
    long r = 1;
    for (int i = 0; i < k; ++i) {
        r *= p;
    }
    return r;
}

void
check_same_field(const CyclotomicElement& a, const CyclotomicElement& b) {
    if (a.prime() != b.prime() || a.level() != b.level()) {
        throw DomainError("cyclotomic operands live in different fields");
    }
}

}  // namespace

std::vector<PadicNumber>
reduce_exponents(long p, int level, std::vector<PadicNumber> v) {
    long order = ipow(p, level + 1);
    long pn = order / p;
    long d = order - pn;
    if (static_cast<long>(v.size()) > order) {
        for (long k = order; k < static_cast<long>(v.size()); ++k) {
            if (!v[k].is_exact_zero()) {
                v[k % order] += v[k];
            }
        }
        v.resize(order);
    }
    for (long k = static_cast<long>(v.size()) - 1; k >= d; --k) {
        if (v[k].is_exact_zero()) {
            continue;
        }
        // z^k = -sum_{i=0}^{p-2} z^(k - d + i p^n)
        for (long i = 0; i <= p - 2; ++i) {
            v[k - d + i * pn] -= v[k];
        }
    }
    v.resize(d, PadicNumber::exact_zero(p));
    return v;
}

CyclotomicElement::CyclotomicElement(long p, int level) : p_(p), level_(level) {
    if (p < 3 || level < 0) {
        throw DomainError("cyclotomic field needs an odd prime and level >= 0");
    }
    coeffs_.assign((p - 1) * ipow(p, level), PadicNumber::exact_zero(p));
}

CyclotomicElement
CyclotomicElement::from_padic(long p, int level, const PadicNumber& a) {
    CyclotomicElement x(p, level);
    x.coeffs_[0] = a;
    return x;
}

CyclotomicElement
CyclotomicElement::zeta_power(long p, int level, long k, int precision) {
    CyclotomicElement x = from_padic(p, level, PadicNumber::one(p, precision));
    return x.mul_zeta(k);
}

CyclotomicElement
CyclotomicElement::from_exponents(long p, int level, const std::vector<PadicNumber>& by_exponent) {
    CyclotomicElement x(p, level);
    x.coeffs_ = reduce_exponents(p, level, by_exponent);
    return x;
}

long
CyclotomicElement::order() const {
    return ipow(p_, level_ + 1);
}

int
CyclotomicElement::precision() const {
    int n = kExactPrecision;
    for (const auto& c : coeffs_) {
        n = std::min(n, c.precision());
    }
    return n;
}

int
CyclotomicElement::coefficient_valuation() const {
    int v = kExactPrecision;
    for (const auto& c : coeffs_) {
        v = std::min(v, c.valuation());
    }
    return v;
}

bool
CyclotomicElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const PadicNumber& c) { return c.is_zero(); });
}

CyclotomicElement
CyclotomicElement::operator-() const {
    CyclotomicElement r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

CyclotomicElement&
CyclotomicElement::operator+=(const CyclotomicElement& other) {
    check_same_field(*this, other);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    return *this;
}

CyclotomicElement&
CyclotomicElement::operator-=(const CyclotomicElement& other) {
    check_same_field(*this, other);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    return *this;
}

CyclotomicElement&
CyclotomicElement::operator*=(const CyclotomicElement& other) {
    check_same_field(*this, other);
    long ord = order();
    std::vector<PadicNumber> prod(ord, PadicNumber::exact_zero(p_));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_exact_zero()) {
            continue;
        }
        for (size_t j = 0; j < other.coeffs_.size(); ++j) {
            if (other.coeffs_[j].is_exact_zero()) {
                continue;
            }
            prod[(i + j) % ord] += coeffs_[i] * other.coeffs_[j];
        }
    }
    coeffs_ = reduce_exponents(p_, level_, std::move(prod));
    return *this;
}

CyclotomicElement&
CyclotomicElement::operator*=(const PadicNumber& scalar) {
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

CyclotomicElement
CyclotomicElement::mul_zeta(long k) const {
    long ord = order();
    k %= ord;
    if (k < 0) {
        k += ord;
    }
    std::vector<PadicNumber> shifted(ord, PadicNumber::exact_zero(p_));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        shifted[(i + k) % ord] = coeffs_[i];
    }
    CyclotomicElement r(p_, level_);
    r.coeffs_ = reduce_exponents(p_, level_, std::move(shifted));
    return r;
}

CyclotomicElement
CyclotomicElement::pow(long e) const {
    if (e < 0) {
        throw DomainError("negative power of a cyclotomic element");
    }
    CyclotomicElement result = from_padic(p_, level_, PadicNumber::one(p_, precision()));
    CyclotomicElement base = *this;
    while (e > 0) {
        if (e & 1) {
            result *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

CyclotomicElement
CyclotomicElement::galois(long a) const {
    long ord = order();
    a %= ord;
    if (a < 0) {
        a += ord;
    }
    if (a % p_ == 0) {
        throw DomainError("Galois action needs a unit index");
    }
    std::vector<PadicNumber> moved(ord, PadicNumber::exact_zero(p_));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        moved[(static_cast<long>(i) * a) % ord] = coeffs_[i];
    }
    CyclotomicElement r(p_, level_);
    r.coeffs_ = reduce_exponents(p_, level_, std::move(moved));
    return r;
}

CyclotomicElement
CyclotomicElement::lift_to(int target) const {
    if (target < level_) {
        throw DomainError("lift_to: target level below the current level");
    }
    CyclotomicElement r(p_, target);
    long step = ipow(p_, target - level_);
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        r.coeffs_[j * step] = coeffs_[j];
    }
    return r;
}

CyclotomicElement
CyclotomicElement::restrict_to(int target) const {
    if (target > level_ || target < 0) {
        throw DomainError("restrict_to: bad target level");
    }
    CyclotomicElement r(p_, target);
    long step = ipow(p_, level_ - target);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (static_cast<long>(i) % step == 0) {
            r.coeffs_[i / step] = coeffs_[i];
        } else if (!coeffs_[i].is_zero()) {
            throw ValidationError("element does not lie in the requested subfield");
        }
    }
    return r;
}

CyclotomicElement
CyclotomicElement::trace_to_level(int target) const {
    if (target > level_ || target < 0) {
        throw DomainError("trace_to_level: bad target level");
    }
    CyclotomicElement x = *this;
    for (int n = level_; n > target; --n) {
        // Tr(z^i) = p z^i when p | i and 0 otherwise.
        CyclotomicElement down(p_, n - 1);
        for (size_t j = 0; j < down.coeffs_.size(); ++j) {
            down.coeffs_[j] = x.coeffs_[j * p_].shift(1);
        }
        x = std::move(down);
    }
    return x;
}

CyclotomicElement
CyclotomicElement::norm_to_level(int target) const {
    if (target > level_ || target < 0) {
        throw DomainError("norm_to_level: bad target level");
    }
    CyclotomicElement x = *this;
    for (int n = level_; n > target; --n) {
        long pn = ipow(p_, n);
        CyclotomicElement prod = x;
        for (long j = 1; j < p_; ++j) {
            prod *= x.galois(1 + j * pn);
        }
        x = prod.restrict_to(n - 1);
    }
    return x;
}

PadicNumber
CyclotomicElement::trace_to_qp() const {
    CyclotomicElement x = trace_to_level(0);
    PadicNumber sum = PadicNumber::exact_zero(p_);
    for (const auto& c : x.coeffs_) {
        sum -= c;
    }
    return x.coeffs_[0].shift(1) + sum;
}

PadicNumber
CyclotomicElement::norm_to_qp() const {
    CyclotomicElement x = norm_to_level(0);
    CyclotomicElement prod = x;
    for (long a = 2; a < p_; ++a) {
        prod *= x.galois(a);
    }
    return prod.to_padic();
}

PadicNumber
CyclotomicElement::to_padic() const {
    for (size_t i = 1; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) {
            throw ValidationError("element does not lie in Q_p");
        }
    }
    return coeffs_[0];
}

CyclotomicElement
CyclotomicElement::truncate(int precision) const {
    CyclotomicElement r = *this;
    for (auto& c : r.coeffs_) {
        if (!c.is_exact_zero()) {
            c = c.truncate(precision);
        }
    }
    return r;
}

CyclotomicElement
CyclotomicElement::lift_precision(int precision) const {
    CyclotomicElement r = *this;
    for (auto& c : r.coeffs_) {
        if (!c.is_exact_zero()) {
            c = c.lift(precision);
        }
    }
    return r;
}

std::string
CyclotomicElement::str() const {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_exact_zero()) {
            continue;
        }
        if (!first) {
            out << " + ";
        }
        out << "(" << coeffs_[i].str() << ")";
        if (i > 0) {
            out << "*z^" << i;
        }
        first = false;
    }
    return first ? "0" : out.str();
}

CyclotomicElement
operator+(CyclotomicElement a, const CyclotomicElement& b) {
    return a += b;
}

CyclotomicElement
operator-(CyclotomicElement a, const CyclotomicElement& b) {
    return a -= b;
}

CyclotomicElement
operator*(CyclotomicElement a, const CyclotomicElement& b) {
    return a *= b;
}

CyclotomicElement
operator*(CyclotomicElement a, const PadicNumber& b) {
    return a *= b;
}

Verdict
compare(const CyclotomicElement& a, const CyclotomicElement& b) {
    check_same_field(a, b);
    bool undecided = false;
    for (long i = 0; i < a.degree(); ++i) {
        Verdict v = compare(a.coefficient(i), b.coefficient(i));
        if (v == Verdict::distinct) {
            return v;
        }
        undecided = undecided || v == Verdict::undecidable;
    }
    return undecided && a.is_zero() && b.is_zero() ? Verdict::undecidable : Verdict::equal;
}

int
agreement(const CyclotomicElement& a, const CyclotomicElement& b) {
    check_same_field(a, b);
    int v = kExactPrecision;
    for (long i = 0; i < a.degree(); ++i) {
        v = std::min(v, agreement(a.coefficient(i), b.coefficient(i)));
    }
    return v;
}

}  // namespace excezero::padic
