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

#include <string>
#include <vector>

#include "excezero/padic/padic_number.hpp"

namespace excezero::padic {

// An element of K_n = Q_p(mu_{p^(n+1)}) in the power basis 1, z, ..., z^(d-1)
// with z = zeta_{p^(n+1)} and d = (p - 1) p^n. Products are reduced modulo the
// cyclotomic polynomial Phi_{p^(n+1)}(X) = sum_{i<p} X^(i p^n).
class CyclotomicElement {
 public:
    CyclotomicElement() = default;

    // The exact zero of K_level.
    CyclotomicElement(long p, int level);

    static CyclotomicElement
    from_padic(long p, int level, const PadicNumber& a);

    // zeta_{p^(level+1)}^k to the given precision.
    static CyclotomicElement
    zeta_power(long p, int level, long k, int precision);

    // Coefficients indexed by exponent; any length, reduced into the basis.
    static CyclotomicElement
    from_exponents(long p, int level, const std::vector<PadicNumber>& by_exponent);

    long
    prime() const {
        return p_;
    }

    int
    level() const {
        return level_;
    }

    // (p - 1) p^level
    long
    degree() const {
        return static_cast<long>(coeffs_.size());
    }

    // p^(level + 1)
    long
    order() const;

    const std::vector<PadicNumber>&
    coefficients() const {
        return coeffs_;
    }

    const PadicNumber&
    coefficient(long i) const {
        return coeffs_.at(i);
    }

    // Smallest absolute precision among the coefficients.
    int
    precision() const;

    // Minimum coefficient valuation; a lower bound for the field valuation.
    int
    coefficient_valuation() const;

    bool
    is_zero() const;

    CyclotomicElement
    operator-() const;

    CyclotomicElement&
    operator+=(const CyclotomicElement& other);

    CyclotomicElement&
    operator-=(const CyclotomicElement& other);

    CyclotomicElement&
    operator*=(const CyclotomicElement& other);

    CyclotomicElement&
    operator*=(const PadicNumber& scalar);

    // Multiplication by zeta^k.
    CyclotomicElement
    mul_zeta(long k) const;

    CyclotomicElement
    pow(long e) const;

    // sigma_a: zeta -> zeta^a for a prime to p.
    CyclotomicElement
    galois(long a) const;

    // Image under the inclusion K_level -> K_target (target >= level).
    CyclotomicElement
    lift_to(int target) const;

    // The same element viewed in K_target; fails if it does not lie there.
    CyclotomicElement
    restrict_to(int target) const;

    CyclotomicElement
    trace_to_level(int target) const;

    CyclotomicElement
    norm_to_level(int target) const;

    PadicNumber
    trace_to_qp() const;

    PadicNumber
    norm_to_qp() const;

    // The value in Q_p when only the constant coefficient survives.
    PadicNumber
    to_padic() const;

    CyclotomicElement
    truncate(int precision) const;

    CyclotomicElement
    lift_precision(int precision) const;

    std::string
    str() const;

 private:
    long p_ = 0;
    int level_ = 0;
    std::vector<PadicNumber> coeffs_;
};

CyclotomicElement
operator+(CyclotomicElement a, const CyclotomicElement& b);

CyclotomicElement
operator-(CyclotomicElement a, const CyclotomicElement& b);

CyclotomicElement
operator*(CyclotomicElement a, const CyclotomicElement& b);

CyclotomicElement
operator*(CyclotomicElement a, const PadicNumber& b);

// Coefficientwise verdict.
Verdict
compare(const CyclotomicElement& a, const CyclotomicElement& b);

// Minimum over coefficients of ord_p(a_i - b_i).
int
agreement(const CyclotomicElement& a, const CyclotomicElement& b);

// Reduces an exponent-indexed vector into the power basis of K_level.
std::vector<PadicNumber>
reduce_exponents(long p, int level, std::vector<PadicNumber> by_exponent);

}  // namespace excezero::padic
