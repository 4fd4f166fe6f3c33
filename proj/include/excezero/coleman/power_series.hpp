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

#include "excezero/padic/cyclotomic.hpp"
#include "excezero/padic/padic_number.hpp"

namespace excezero::coleman {

using padic::CyclotomicElement;
using padic::PadicNumber;

// A power series over Z_p known modulo (p^N, X^D): coefficients of
// X^0 .. X^(D-1), each carrying its own absolute precision.
class PowerSeriesZp {
 public:
    PowerSeriesZp() = default;

    // The zero series.
    PowerSeriesZp(long p, int degree, int precision);

    static PowerSeriesZp
    from_coefficients(long p, std::vector<PadicNumber> coeffs, int degree);

    static PowerSeriesZp
    constant(long p, const PadicNumber& c, int degree);

    // X, or a + b X
    static PowerSeriesZp
    linear(long p, const PadicNumber& a, const PadicNumber& b, int degree);

    long
    prime() const {
        return p_;
    }

    // Number of known coefficients D.
    int
    degree() const {
        return static_cast<int>(coeffs_.size());
    }

    // Smallest coefficient precision.
    int
    precision() const;

    const PadicNumber&
    coefficient(int i) const {
        return coeffs_.at(i);
    }

    const std::vector<PadicNumber>&
    coefficients() const {
        return coeffs_;
    }

    PowerSeriesZp
    truncate(int degree, int precision) const;

    PowerSeriesZp&
    operator+=(const PowerSeriesZp& other);

    PowerSeriesZp&
    operator-=(const PowerSeriesZp& other);

    PowerSeriesZp&
    operator*=(const PowerSeriesZp& other);

    PowerSeriesZp&
    operator*=(const PadicNumber& scalar);

    PowerSeriesZp
    operator-() const;

    // 1/f for f(0) a unit.
    PowerSeriesZp
    inverse() const;

    // f(h(X)). h(0) must be an exact zero or have ord_p >= 1; in the second
    // case the missing tail costs D * ord(h(0)) digits at most.
    PowerSeriesZp
    compose(const PowerSeriesZp& h) const;

    // f(x) for ord_p(x) >= 1 (or x an exact zero).
    PadicNumber
    evaluate(const PadicNumber& x) const;

    // f(zeta_{p^(n+1)} - 1) in K_n. The tail beyond X^D is bounded by
    // (zeta - 1)^D, of valuation D / ((p - 1) p^n).
    CyclotomicElement
    evaluate_at_zeta_minus_one(int n) const;

    std::string
    str(int terms = 8) const;

 private:
    long p_ = 0;
    std::vector<PadicNumber> coeffs_;
};

PowerSeriesZp operator+(PowerSeriesZp a, const PowerSeriesZp& b);
PowerSeriesZp operator-(PowerSeriesZp a, const PowerSeriesZp& b);
PowerSeriesZp operator*(PowerSeriesZp a, const PowerSeriesZp& b);
PowerSeriesZp operator*(PowerSeriesZp a, const PadicNumber& b);

// min over i < min(D_a, D_b) of ord_p(a_i - b_i)
int
agreement(const PowerSeriesZp& a, const PowerSeriesZp& b);

// Coleman's norm operator: the series Nf with
//   (Nf)((1+T)^p - 1) = prod_{zeta^p = 1} f(zeta (1 + T) - 1).
// The product is formed in K_0[[T]]; the result is rewritten in the variable
// (1+T)^p - 1 by triangular back-substitution. The output degree is roughly
// (D - N(p-1))/p - N(p-1)/p; max_degree >= 0 caps it and skips the work
// beyond.
PowerSeriesZp
coleman_norm_operator(const PowerSeriesZp& f, int max_degree = -1);

}  // namespace excezero::coleman
