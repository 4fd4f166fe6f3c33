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

#include <vector>

#include "excezero/mtt/lfunction.hpp"
#include "excezero/padic/character.hpp"
#include "excezero/padic/cyclotomic.hpp"

namespace excezero::mtt {

using padic::CyclotomicElement;
using padic::PadicCharacter;

// tau(chi) L(E, chi^-1, 1) / Omega^+ for a primitive character of conductor
// p^(m+1) and p-power order, evaluated in the complex plane for every Galois
// conjugate chi^b and solved back into the basis 1, z, ..., z^(d-1) of
// Q(mu_{p^m}), z = exp(2 pi i / p^m).
struct TwistedPeriod {
    std::vector<mpq_class> coefficients;
    long terms = 0;
    Real root_number_modulus_error = 0;  // | |eta| - 1 | of the twisted root number
    Real functional_equation_residual = 0;
    Real imaginary_residual = 0;  // largest imaginary part of a solved coefficient
};

TwistedPeriod
twisted_period(const ModularSymbolTable& table, const PadicCharacter& chi, SymbolConfig config = {});

// The same element built p-adically inside K_m as a CyclotomicElement over
// Q(mu_{p^m}), i.e. at cyclotomic level m - 1.
CyclotomicElement
twisted_period_element(const TwistedPeriod& tp, const PadicCharacter& chi, int precision);

struct InterpolationReport {
    long p = 0;
    int m = 0;
    long exponent = 0;
    int level = 0;
    CyclotomicElement measure_side;
    CyclotomicElement complex_side;
    TwistedPeriod period;
    int digits_agree = 0;
};

// sum_a chi(a) mu(a + p^(m+1) Z_p) against tau(chi) L(E, chi^-1, 1)/Omega^+.
InterpolationReport
interpolation_check(const ModularSymbolTable& table, const PadicCharacter& chi, int precision,
                    SymbolConfig config = {});

}  // namespace excezero::mtt
