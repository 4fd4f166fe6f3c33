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

#include "excezero/padic/padic_number.hpp"

namespace excezero::padic {

// Iwasawa logarithm: log p = 0 and the Teichmuller component is killed.
// The result carries the relative precision of x as absolute precision.
PadicNumber
padic_log(const PadicNumber& x);

// exp on the disc ord_p(x) >= 1. An exact zero maps to 1 + O(p^precision_if_exact).
PadicNumber
padic_exp(const PadicNumber& x, int precision_if_exact = kDefaultPrecision);

// exp(x) - 1; the exact zero maps to the exact zero.
PadicNumber
padic_expm1(const PadicNumber& x);

// Integer representative of the Teichmuller lift of a modulo p^precision.
mpz_class
teichmuller_integer(long p, const mpz_class& a, int precision);

PadicNumber
teichmuller(long p, const mpz_class& a, int precision);

// omega(u) for the unit part u of x.
PadicNumber
teichmuller(const PadicNumber& x);

// <x> = x / (p^ord(x) omega(unit)), a principal unit.
PadicNumber
principal_unit_part(const PadicNumber& x);

// Square root of a nonzero square with even valuation; the root whose
// leading digit is the smaller residue.
PadicNumber
padic_sqrt(const PadicNumber& x);

// Legendre symbol (a / p) for an odd prime p.
int
legendre_symbol(const mpz_class& a, long p);

}  // namespace excezero::padic
