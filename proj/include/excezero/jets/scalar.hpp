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

#include <string>

#include "excezero/errors.hpp"
#include "excezero/jets/laurent_poly.hpp"
#include "excezero/padic/padic_number.hpp"
#include "excezero/padic/prime_powers.hpp"

namespace excezero::jets {

// The operations jets need from a coefficient domain beyond + - *.
// A default constructed scalar is the additive identity.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<mpq_class> {
    static bool
    is_zero(const mpq_class& x) {
        return x == 0;
    }
    static bool
    equal(const mpq_class& a, const mpq_class& b) {
        return a == b;
    }
    static mpq_class
    scale(const mpq_class& x, const mpq_class& q) {
        return x * q;
    }
    static mpq_class
    inverse(const mpq_class& x) {
        if (x == 0) {
            throw DomainError("zero is not invertible");
        }
        return 1 / x;
    }
    static std::string
    str(const mpq_class& x) {
        return x.get_str();
    }
};

template <>
struct ScalarTraits<LaurentPoly> {
    static bool
    is_zero(const LaurentPoly& x) {
        return x.is_zero();
    }
    static bool
    equal(const LaurentPoly& a, const LaurentPoly& b) {
        return a == b;
    }
    static LaurentPoly
    scale(const LaurentPoly& x, const mpq_class& q) {
        return x * LaurentPoly(q);
    }
    static LaurentPoly
    inverse(const LaurentPoly& x) {
        return x.inverse();
    }
    static std::string
    str(const LaurentPoly& x) {
        return x.str();
    }
};

// Zero means zero to precision and equality is the p-adic verdict, so jet
// identities over p-adic scalars hold to the precision carried.
template <>
struct ScalarTraits<padic::PadicNumber> {
    using P = padic::PadicNumber;
    static bool
    is_zero(const P& x) {
        return x.is_zero();
    }
    static bool
    equal(const P& a, const P& b) {
        return (a - b).is_zero();
    }
    static P
    scale(const P& x, const mpq_class& q) {
        if (x.is_exact_zero() || q == 0) {
            return q == 0 ? P::exact_zero(x.prime()) : x;
        }
        const long p = x.prime();
        int vq = static_cast<int>(padic::valuation(q.get_num(), p) - padic::valuation(q.get_den(), p));
        return x * P::from_rational(p, q, x.relative_precision() + vq + 1);
    }
    static P
    inverse(const P& x) {
        return x.inverse();
    }
    static std::string
    str(const P& x) {
        return x.str();
    }
};

}  // namespace excezero::jets
