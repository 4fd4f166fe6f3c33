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

#include <vector>

#include "excezero/padic/padic_number.hpp"
#include "excezero/tate/curve.hpp"

namespace excezero::tate {

using padic::PadicNumber;

inline constexpr int kInverseJTerms = 40;

// Integer coefficients of 1/j(q) = Delta(q) / E4(q)^3 = q - 744 q^2 + ...,
// index n holding the coefficient of q^n.
std::vector<mpz_class>
inverse_j_series(int terms);

// 1/j evaluated at q (ord q >= 1) with enough terms for q's precision.
PadicNumber
inverse_j_at(const PadicNumber& q);

struct TateParameter {
    long p = 0;
    PadicNumber q;
    int ord_q = 0;
    // log_p(q) / ord_p(q)
    PadicNumber l_invariant;
    // ord_p of the Newton residual j(q_k)^-1 - j^-1 after each step.
    std::vector<int> residual_valuations;
};

// Solves j(q) = j(E) by Newton iteration on the 1/j series. Requires split
// multiplicative reduction at p. q carries precision + ord(q) digits so that
// the L-invariant reaches the requested precision.
TateParameter
tate_period(const CurveData& e, long p, int precision);

// log_p(x) - L * ord_p(x), the branch of the logarithm killing q.
PadicNumber
branch_log(const TateParameter& t, const PadicNumber& x);

}  // namespace excezero::tate
