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

#include "excezero/padic/padic_number.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "excezero/errors.hpp"
#include "excezero/padic/prime_powers.hpp"

namespace excezero::padic {

namespace {

long
common_prime(long a, long b) {
    if (a != 0 && b != 0 && a != b) {
        throw DomainError("p-adic operands over different primes");
    }
    return a != 0 ? a : b;
}

std::string
power_term(long digit, long p, int k) {
    std::string base = std::to_string(p);
    if (k == 0) {
        return std::to_string(digit);
    }
    std::string pw = k == 1 ? base : base + "^" + std::to_string(k);
    return digit == 1 ? pw : std::to_string(digit) + "*" + pw;
}

std::string_view
trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

long
parse_long(std::string_view s, std::string_view whole) {
    s = trim(s);
    if (s.empty()) {
        throw ParseError("malformed p-adic literal: '" + std::string(whole) + "'");
    }
    size_t i = 0;
    bool neg = false;
    if (s[0] == '-') {
        neg = true;
        i = 1;
    }
    if (i == s.size()) {
        throw ParseError("malformed p-adic literal: '" + std::string(whole) + "'");
    }
    long value = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            throw ParseError("malformed p-adic literal: '" + std::string(whole) + "'");
        }
        value = value * 10 + (s[i] - '0');
        if (value > (1L << 40)) {
            throw ParseError("integer too large in p-adic literal");
        }
    }
    return neg ? -value : value;
}

// "P" or "P^k": returns k and checks the base.
int
parse_power(std::string_view s, long& p, std::string_view whole) {
    s = trim(s);
    auto caret = s.find('^');
    long base = parse_long(s.substr(0, caret), whole);
    int k = caret == std::string_view::npos ? 1 : static_cast<int>(parse_long(s.substr(caret + 1), whole));
    if (base < 2 || (p != 0 && base != p)) {
        throw ParseError("unexpected prime in p-adic literal: '" + std::string(whole) + "'");
    }
    p = base;
    return k;
}

}  // namespace

const char*
to_string(Verdict v) {
    switch (v) {
        case Verdict::equal:
            return "equal";
        case Verdict::distinct:
            return "distinct";
        case Verdict::undecidable:
            return "undecidable";
    }
    return "?";
}

PadicNumber::PadicNumber(long p, int v, mpz_class u, int n, bool exact_zero)
    : p_(p), v_(v), n_(n), u_(std::move(u)), exact_zero_(exact_zero) {
    normalize();
}

void
PadicNumber::normalize() {
    if (exact_zero_) {
        v_ = 0;
        n_ = kExactPrecision;
        u_ = 0;
        return;
    }
    if (p_ < 2) {
        throw DomainError("p-adic number without a prime");
    }
    if (n_ - v_ <= 0 || u_ == 0) {
        v_ = n_;
        u_ = 0;
        return;
    }
    const mpz_class& m = prime_power(p_, n_ - v_);
    mpz_fdiv_r(u_.get_mpz_t(), u_.get_mpz_t(), m.get_mpz_t());
    if (u_ == 0) {
        v_ = n_;
        return;
    }
    mpz_class prime(p_);
    v_ += static_cast<int>(mpz_remove(u_.get_mpz_t(), u_.get_mpz_t(), prime.get_mpz_t()));
}

PadicNumber
PadicNumber::exact_zero(long p) {
    PadicNumber z;
    z.p_ = p;
    return z;
}

PadicNumber
PadicNumber::zero(long p, int precision) {
    return PadicNumber(p, precision, 0, precision, false);
}

PadicNumber
PadicNumber::one(long p, int precision) {
    return PadicNumber(p, 0, 1, precision, false);
}

PadicNumber
PadicNumber::from_integer(long p, const mpz_class& n, int precision) {
    return PadicNumber(p, 0, n, precision, false);
}

PadicNumber
PadicNumber::from_rational(long p, const mpq_class& r, int precision) {
    if (r == 0) {
        return zero(p, precision);
    }
    mpz_class num = r.get_num();
    mpz_class den = r.get_den();
    mpz_class prime(p);
    int vd = static_cast<int>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), prime.get_mpz_t()));
    int vn = static_cast<int>(mpz_remove(num.get_mpz_t(), num.get_mpz_t(), prime.get_mpz_t()));
    int v = vn - vd;
    if (precision <= v) {
        return zero(p, precision);
    }
    const mpz_class& m = prime_power(p, precision - v);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
    return PadicNumber(p, v, num * inv, precision, false);
}

PadicNumber
PadicNumber::from_parts(long p, int valuation, const mpz_class& unit, int precision) {
    return PadicNumber(p, valuation, unit, precision, false);
}

PadicNumber
PadicNumber::truncate(int precision) const {
    if (exact_zero_) {
        return zero(p_, precision);
    }
    if (precision >= n_) {
        return *this;
    }
    return PadicNumber(p_, v_, u_, precision, false);
}

PadicNumber
PadicNumber::lift(int precision) const {
    if (exact_zero_ || precision <= n_) {
        return truncate(precision);
    }
    if (u_ == 0) {
        return zero(p_, precision);
    }
    return PadicNumber(p_, v_, u_, precision, false);
}

mpz_class
PadicNumber::to_integer() const {
    if (is_zero()) {
        return 0;
    }
    if (v_ < 0) {
        throw DomainError("to_integer: negative valuation");
    }
    return u_ * prime_power(p_, v_);
}

mpq_class
PadicNumber::to_rational() const {
    if (is_zero()) {
        return 0;
    }
    if (v_ >= 0) {
        return mpq_class(u_ * prime_power(p_, v_));
    }
    mpq_class q(u_, prime_power(p_, -v_));
    q.canonicalize();
    return q;
}

std::vector<long>
PadicNumber::digits() const {
    std::vector<long> out;
    if (is_zero()) {
        return out;
    }
    mpz_class rest = u_;
    for (int k = v_; k < n_; ++k) {
        out.push_back(mpz_fdiv_ui(rest.get_mpz_t(), p_));
        mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), p_);
    }
    return out;
}

std::string
PadicNumber::str() const {
    if (exact_zero_) {
        return "0";
    }
    std::ostringstream out;
    auto ds = digits();
    bool first = true;
    for (size_t i = 0; i < ds.size(); ++i) {
        if (ds[i] == 0) {
            continue;
        }
        if (!first) {
            out << " + ";
        }
        out << power_term(ds[i], p_, v_ + static_cast<int>(i));
        first = false;
    }
    if (!first) {
        out << " + ";
    }
    out << "O(" << p_;
    if (n_ != 1) {
        out << "^" << n_;
    }
    out << ")";
    return out.str();
}

PadicNumber
PadicNumber::parse(std::string_view text, long p) {
    std::string_view whole = trim(text);
    if (whole == "0") {
        return exact_zero(p);
    }
    std::vector<std::string_view> terms;
    size_t start = 0;
    for (size_t i = 0; i <= whole.size(); ++i) {
        if (i == whole.size() || whole[i] == '+') {
            terms.push_back(trim(whole.substr(start, i - start)));
            start = i + 1;
        }
    }
    if (terms.empty() || terms.back().substr(0, 2) != "O(" || terms.back().back() != ')') {
        throw ParseError("p-adic literal lacks a trailing O(p^N) term: '" + std::string(whole) + "'");
    }
    std::string_view big_o = terms.back();
    int precision = parse_power(big_o.substr(2, big_o.size() - 3), p, whole);
    if (!is_prime(p)) {
        throw ParseError("p-adic literal over a non-prime base");
    }
    terms.pop_back();

    struct Term {
        mpz_class coef;
        int k;
    };
    std::vector<Term> parsed;
    int vmin = precision;
    for (auto t : terms) {
        if (t.empty()) {
            throw ParseError("empty term in p-adic literal: '" + std::string(whole) + "'");
        }
        long coef = 1;
        int k = 0;
        auto star = t.find('*');
        if (star != std::string_view::npos) {
            coef = parse_long(t.substr(0, star), whole);
            k = parse_power(t.substr(star + 1), p, whole);
        } else if (t.find('^') != std::string_view::npos) {
            k = parse_power(t, p, whole);
        } else {
            long value = parse_long(t, whole);
            if (value == p) {
                k = 1;
            } else {
                coef = value;
            }
        }
        if (coef < 0 || coef >= p) {
            throw ParseError("digit out of range in p-adic literal: '" + std::string(whole) + "'");
        }
        if (k >= precision) {
            throw ParseError("term at or beyond the stated precision: '" + std::string(whole) + "'");
        }
        parsed.push_back({mpz_class(coef), k});
        vmin = std::min(vmin, k);
    }
    mpz_class unit = 0;
    for (const auto& t : parsed) {
        unit += t.coef * prime_power(p, t.k - vmin);
    }
    return PadicNumber(p, vmin, unit, precision, false);
}

PadicNumber
PadicNumber::operator-() const {
    if (exact_zero_ || u_ == 0) {
        return *this;
    }
    return PadicNumber(p_, v_, -u_, n_, false);
}

PadicNumber&
PadicNumber::operator+=(const PadicNumber& other) {
    long p = common_prime(p_, other.p_);
    if (other.exact_zero_) {
        p_ = p;
        return *this;
    }
    if (exact_zero_) {
        *this = other;
        return *this;
    }
    int n = std::min(n_, other.n_);
    int vmin = std::min(v_, other.v_);
    if (n <= vmin) {
        *this = zero(p, n);
        return *this;
    }
    mpz_class u = u_ * prime_power(p, v_ - vmin) + other.u_ * prime_power(p, other.v_ - vmin);
    *this = PadicNumber(p, vmin, std::move(u), n, false);
    return *this;
}

PadicNumber&
PadicNumber::operator-=(const PadicNumber& other) {
    return *this += -other;
}

PadicNumber&
PadicNumber::operator*=(const PadicNumber& other) {
    long p = common_prime(p_, other.p_);
    if (exact_zero_ || other.exact_zero_) {
        *this = exact_zero(p);
        return *this;
    }
    int n = std::min(v_ + other.n_, other.v_ + n_);
    if (u_ == 0 || other.u_ == 0) {
        *this = zero(p, n);
        return *this;
    }
    *this = PadicNumber(p, v_ + other.v_, u_ * other.u_, n, false);
    return *this;
}

PadicNumber&
PadicNumber::operator/=(const PadicNumber& other) {
    long p = common_prime(p_, other.p_);
    if (other.is_zero()) {
        throw DomainError("p-adic division by zero");
    }
    if (exact_zero_) {
        p_ = p;
        return *this;
    }
    if (u_ == 0) {
        *this = zero(p, n_ - other.v_);
        return *this;
    }
    int rel = std::min(n_ - v_, other.n_ - other.v_);
    const mpz_class& m = prime_power(p, rel);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), other.u_.get_mpz_t(), m.get_mpz_t());
    int v = v_ - other.v_;
    *this = PadicNumber(p, v, u_ * inv, v + rel, false);
    return *this;
}

PadicNumber
PadicNumber::pow(long e) const {
    if (e < 0) {
        return inverse().pow(-e);
    }
    if (e == 0) {
        if (is_zero()) {
            throw DomainError("zero to the power zero");
        }
        return one(p_, n_ - v_);
    }
    if (exact_zero_) {
        return *this;
    }
    if (u_ == 0) {
        PadicNumber r = *this;
        for (long i = 1; i < e; ++i) {
            r *= *this;
        }
        return r;
    }
    int rel = n_ - v_;
    mpz_class u;
    mpz_powm_ui(u.get_mpz_t(), u_.get_mpz_t(), static_cast<unsigned long>(e),
                prime_power(p_, rel).get_mpz_t());
    int v = static_cast<int>(e * v_);
    return PadicNumber(p_, v, u, v + rel, false);
}

PadicNumber
PadicNumber::inverse() const {
    if (is_zero()) {
        throw DomainError("p-adic division by zero");
    }
    int rel = n_ - v_;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), u_.get_mpz_t(), prime_power(p_, rel).get_mpz_t());
    return PadicNumber(p_, -v_, inv, rel - v_, false);
}

PadicNumber
PadicNumber::shift(int k) const {
    if (exact_zero_) {
        return *this;
    }
    if (u_ == 0) {
        return zero(p_, n_ + k);
    }
    return PadicNumber(p_, v_ + k, u_, n_ + k, false);
}

bool
PadicNumber::identical(const PadicNumber& other) const {
    if (exact_zero_ || other.exact_zero_) {
        return exact_zero_ == other.exact_zero_;
    }
    return p_ == other.p_ && v_ == other.v_ && n_ == other.n_ && u_ == other.u_;
}

PadicNumber
operator+(PadicNumber a, const PadicNumber& b) {
    return a += b;
}

PadicNumber
operator-(PadicNumber a, const PadicNumber& b) {
    return a -= b;
}

PadicNumber
operator*(PadicNumber a, const PadicNumber& b) {
    return a *= b;
}

PadicNumber
operator/(PadicNumber a, const PadicNumber& b) {
    return a /= b;
}

Verdict
compare(const PadicNumber& a, const PadicNumber& b) {
    bool a_blind = a.is_zero() && !a.is_exact_zero();
    bool b_blind = b.is_zero() && !b.is_exact_zero();
    if (a_blind && b_blind) {
        return Verdict::undecidable;
    }
    return (a - b).is_zero() ? Verdict::equal : Verdict::distinct;
}

int
agreement(const PadicNumber& a, const PadicNumber& b) {
    return (a - b).valuation();
}

int
relative_agreement(const PadicNumber& a, const PadicNumber& b) {
    int abs = agreement(a, b);
    if (b.is_zero() || abs == kExactPrecision) {
        return abs;
    }
    return abs - b.valuation();
}

}  // namespace excezero::padic
