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

#pragma once

#include <gmpxx.h>

#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace excezero::padic {

inline constexpr int kExactPrecision = std::numeric_limits<int>::max();
inline constexpr int kDefaultPrecision = 30;

enum class Verdict { equal, distinct, undecidable };

const char*
to_string(Verdict v);

// An element p^v * u + O(p^N) of Q_p with u a unit known modulo p^(N - v).
//
// Three states are kept apart: the exact zero (no error term at all), a zero
// known only to absolute precision N, and a nonzero value. Arithmetic
// propagates absolute precision pessimistically. A default constructed value
// is an exact zero not yet tied to a prime; it acts as the additive identity
// for any prime.
class PadicNumber {
 public:
    PadicNumber() = default;

    static PadicNumber
    exact_zero(long p = 0);

    static PadicNumber
    zero(long p, int precision);

    static PadicNumber
    one(long p, int precision);

    static PadicNumber
    from_integer(long p, const mpz_class& n, int precision);

    static PadicNumber
    from_rational(long p, const mpq_class& r, int precision);

    // p^valuation * unit, where unit may carry factors of p and is reduced.
    static PadicNumber
    from_parts(long p, int valuation, const mpz_class& unit, int precision);

    // Canonical text form "a_v*p^v + ... + O(p^N)"; "0" is the exact zero.
    static PadicNumber
    parse(std::string_view text, long p = 0);

    long
    prime() const {
        return p_;
    }

    bool
    is_exact_zero() const {
        return exact_zero_;
    }

    // True for the exact zero and for zeros to precision.
    bool
    is_zero() const {
        return exact_zero_ || u_ == 0;
    }

    // For a zero to precision this is its precision.
    int
    valuation() const {
        return exact_zero_ ? kExactPrecision : v_;
    }

    int
    precision() const {
        return exact_zero_ ? kExactPrecision : n_;
    }

    int
    relative_precision() const {
        return exact_zero_ ? kExactPrecision : n_ - v_;
    }

    const mpz_class&
    unit() const {
        return u_;
    }

    // Drops digits at and above p^precision.
    PadicNumber
    truncate(int precision) const;

    // Raises the absolute precision, taking the unknown digits to be zero.
    // Only sound where the caller knows the extra digits do not matter.
    PadicNumber
    lift(int precision) const;

    // Representative in [0, p^N); requires valuation >= 0.
    mpz_class
    to_integer() const;

    mpq_class
    to_rational() const;

    // Digits a_v, ..., a_{N-1}; empty for zeros.
    std::vector<long>
    digits() const;

    std::string
    str() const;

    PadicNumber
    operator-() const;

    PadicNumber&
    operator+=(const PadicNumber& other);

    PadicNumber&
    operator-=(const PadicNumber& other);

    PadicNumber&
    operator*=(const PadicNumber& other);

    PadicNumber&
    operator/=(const PadicNumber& other);

    PadicNumber
    pow(long e) const;

    PadicNumber
    inverse() const;

    // Multiplication by p^k, exact in the relative sense.
    PadicNumber
    shift(int k) const;

    // Structural identity: same state, valuation, unit and precision.
    bool
    identical(const PadicNumber& other) const;

 private:
    PadicNumber(long p, int v, mpz_class u, int n, bool exact_zero);

    void
    normalize();

    long p_ = 0;
    int v_ = 0;
    int n_ = kExactPrecision;
    mpz_class u_ = 0;
    bool exact_zero_ = true;
};

PadicNumber
operator+(PadicNumber a, const PadicNumber& b);

PadicNumber
operator-(PadicNumber a, const PadicNumber& b);

PadicNumber
operator*(PadicNumber a, const PadicNumber& b);

PadicNumber
operator/(PadicNumber a, const PadicNumber& b);

// Equal when a - b vanishes to the common precision and at least one operand
// carries a known nonzero digit or is an exact zero; distinct when a known
// digit of a - b is nonzero; undecidable when both are zeros to precision.
Verdict
compare(const PadicNumber& a, const PadicNumber& b);

// ord_p(a - b), capped by the common precision.
int
agreement(const PadicNumber& a, const PadicNumber& b);

// ord_p(a - b) - ord_p(b): the number of leading p-adic digits shared.
int
relative_agreement(const PadicNumber& a, const PadicNumber& b);

}  // namespace excezero::padic
