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

#include <map>
#include <set>
#include <string>

#include "excezero/padic/padic_number.hpp"

namespace excezero::jets {

// A polynomial with rational coefficients in named indeterminates, allowing
// negative exponents so that monomials are units. Zero coefficients and zero
// exponents are never stored, so structural equality is mathematical
// equality.
class LaurentPoly {
 public:
    using Monomial = std::map<std::string, int>;

    LaurentPoly() = default;

    LaurentPoly(const mpq_class& c);  // NOLINT(google-explicit-constructor)

    LaurentPoly(long c);  // NOLINT(google-explicit-constructor)

    static LaurentPoly
    symbol(const std::string& name, int exponent = 1);

    const std::map<Monomial, mpq_class>&
    terms() const {
        return terms_;
    }

    bool
    is_zero() const {
        return terms_.empty();
    }

    bool
    is_constant() const;

    // Single term c * monomial with c != 0.
    bool
    is_monomial() const;

    mpq_class
    constant_term() const;

    std::set<std::string>
    symbols() const;

    LaurentPoly
    operator-() const;

    LaurentPoly&
    operator+=(const LaurentPoly& other);

    LaurentPoly&
    operator-=(const LaurentPoly& other);

    LaurentPoly&
    operator*=(const LaurentPoly& other);

    // Only monomials are invertible.
    LaurentPoly
    inverse() const;

    LaurentPoly
    pow(int e) const;

    // Replaces every occurrence of name by value; negative powers of name
    // need value invertible.
    LaurentPoly
    substitute(const std::string& name, const LaurentPoly& value) const;

    // Numeric evaluation; every symbol must be bound.
    padic::PadicNumber
    evaluate(const std::map<std::string, padic::PadicNumber>& values, long p, int precision) const;

    mpq_class
    evaluate(const std::map<std::string, mpq_class>& values) const;

    std::string
    str() const;

    friend bool
    operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }

    friend bool
    operator!=(const LaurentPoly& a, const LaurentPoly& b) {
        return !(a == b);
    }

 private:
    void
    add_term(const Monomial& m, const mpq_class& c);

    std::map<Monomial, mpq_class> terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b);

}  // namespace excezero::jets
