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

#include <memory>
#include <vector>

#include "excezero/mtt/modular_symbols.hpp"
#include "excezero/padic/padic_number.hpp"
#include "excezero/tate/tate_period.hpp"

namespace excezero::mtt {

using padic::PadicNumber;

// Pairwise sum with a shape fixed by the input length, so the order of
// additions (and hence every precision tag) is reproducible.
PadicNumber
tree_sum(std::vector<PadicNumber> terms);

// mu(a + p^nu Z_p) = [a/p^nu]^+ for a prime to p. With a_p = 1 this is a
// distribution on Z_p^* of total mass zero.
mpq_class
measure(const ModularSymbolTable& table, const mpz_class& a, int nu);

// Riemann sums of the measure at a fixed level nu:
//   L_p(s) ~ sum_{a mod p^nu, p !| a} <a>^(s-1) mu(a + p^nu Z_p).
// Logarithms of the sample points are computed once.
class PadicLFunction {
 public:
    PadicLFunction(std::shared_ptr<const ModularSymbolTable> table, int level, int precision);

    long
    p() const {
        return p_;
    }

    int
    level() const {
        return level_;
    }

    int
    precision() const {
        return precision_;
    }

    const ModularSymbolTable&
    symbols() const {
        return *table_;
    }

    mpq_class
    measure(const mpz_class& a, int nu) const {
        return mtt::measure(*table_, a, nu);
    }

    // Exact rational sum of the measure over the units at level nu.
    mpq_class
    total_mass(int nu) const;

    // Smallest ord_p of a nonzero sampled measure value (0 if all vanish).
    int
    measure_valuation() const {
        return measure_valuation_;
    }

    // s = 1 returns the exact zero.
    PadicNumber
    value(const mpq_class& s) const;

    PadicNumber
    value(const PadicNumber& s) const;

    // First moment sum log<a> mu_a.
    PadicNumber
    derivative_at_1() const;

    // sum (log<a> + shift)^k mu_a
    PadicNumber
    moment(int k, const PadicNumber& shift = PadicNumber()) const;

    // Coefficients of sum mu_a (1 + T)^(log<a>/log(1+p)) in T.
    std::vector<PadicNumber>
    iwasawa_coefficients(int count) const;

    // Absolute precision at which the level-nu Riemann sum can be trusted
    // as an approximation of the integral.
    int
    error_tag(const PadicNumber& s) const;

    int
    derivative_error_tag() const;

 private:
    PadicNumber
    sum_with_exponent(const PadicNumber& t) const;

    std::shared_ptr<const ModularSymbolTable> table_;
    long p_;
    int level_;
    int precision_;
    std::vector<long> residues_;
    std::vector<PadicNumber> masses_;
    std::vector<PadicNumber> logs_;
    mpq_class total_;
    int measure_valuation_ = 0;
};

inline PadicNumber
lp_value(const PadicLFunction& l, const mpq_class& s) {
    return l.value(s);
}

inline PadicNumber
lp_value(const PadicLFunction& l, const PadicNumber& s) {
    return l.value(s);
}

inline PadicNumber
lp_derivative_at_1(const PadicLFunction& l) {
    return l.derivative_at_1();
}

// Derivative at s = 1 against L-invariant times L(E,1)/Omega^+.
struct GreenbergStevensCheck {
    PadicNumber derivative;
    PadicNumber predicted;
    PadicNumber l_invariant;
    mpq_class l_ratio;
    int absolute_digits = 0;
    int relative_digits = 0;
    int error_tag = 0;
};

GreenbergStevensCheck
greenberg_stevens_check(const PadicLFunction& l, const tate::TateParameter& tate);

// <N>^(s/2) L_p(s) against -sign <N>^((2-s)/2) L_p(2-s), N the tame level.
struct FunctionalEquationCheck {
    PadicNumber lhs;
    PadicNumber rhs;
    PadicNumber residual;
    int residual_valuation = 0;
    int error_tag = 0;
    bool within_tag = false;
};

FunctionalEquationCheck
functional_equation_check(const PadicLFunction& l, const mpq_class& s, int sign);

}  // namespace excezero::mtt
