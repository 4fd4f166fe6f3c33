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

#include "excezero/padic/padic_number.hpp"
#include "excezero/tate/tate_period.hpp"

namespace excezero::coleman {

using padic::PadicNumber;

// A continuous homomorphism phi: Q_p^* -> Q_p. It kills the roots of unity,
// so it is fixed by phi(p) and phi(1 + p); equivalently phi = a log_p + b ord_p
// with log_p the Iwasawa branch (log_p p = 0).
class LocalHomClass {
 public:
    LocalHomClass() = default;

    LocalHomClass(PadicNumber value_on_p, PadicNumber value_on_1_plus_p);

    static LocalHomClass
    from_basis(const PadicNumber& a, const PadicNumber& b, int precision);

    static LocalHomClass
    log_p(long p, int precision);

    static LocalHomClass
    ord_p(long p, int precision);

    // log_p - L ord_p, which vanishes on q.
    static LocalHomClass
    branch_log(const tate::TateParameter& t, int precision);

    long
    prime() const {
        return p_;
    }

    const PadicNumber&
    value_on_p() const {
        return on_p_;
    }

    const PadicNumber&
    value_on_1_plus_p() const {
        return on_1_plus_p_;
    }

    // a = phi(1 + p) / log_p(1 + p)
    PadicNumber
    log_coefficient() const;

    // b = phi(p)
    PadicNumber
    ord_coefficient() const {
        return on_p_;
    }

    PadicNumber
    evaluate(const PadicNumber& x) const;

    LocalHomClass
    operator+(const LocalHomClass& other) const;

    LocalHomClass
    scaled(const PadicNumber& alpha) const;

    std::string
    str() const;

 private:
    long p_ = 0;
    PadicNumber on_p_;
    PadicNumber on_1_plus_p_;
};

// The log_p coordinate of phi: 1 on log_p, 0 on ord_p.
PadicNumber
dual_exp_base(const LocalHomClass& phi);

// l = log_p(1 + p) (1 - 1/p).
PadicNumber
l_varsigma(long p, int precision);

struct DerivativeModel {
    // l^-1 z(p^-1)
    PadicNumber from_value;
    // L a(z) l^-1
    PadicNumber from_dual_exp;
    int digits = 0;

    bool
    equal() const;
};

// Both sides of the derivative formula for z vanishing on q. Rejects z with
// z(q) != 0 since only multiples of log_q lie in that image.
DerivativeModel
coleman_derivative_model(const LocalHomClass& z, const tate::TateParameter& t);

}  // namespace excezero::coleman
