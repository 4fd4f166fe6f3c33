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

#include "excezero/padic/cyclotomic.hpp"

namespace excezero::padic {

// A character of Z_p^* of p-power order, trivial on mu_{p-1}, factoring
// through (1 + pZ_p)/(1 + p^(m+1)Z_p). It sends 1 + p to zeta_{p^m}^e and
// takes values in K_m.
class PadicCharacter {
 public:
    PadicCharacter(long p, int m, long e);

    long
    prime() const {
        return p_;
    }

    int
    m() const {
        return m_;
    }

    long
    exponent() const {
        return e_;
    }

    // p^(m+1) for a primitive character (p does not divide e).
    long
    conductor() const;

    long
    order() const;

    bool
    is_trivial() const {
        return e_ == 0;
    }

    // k in [0, p^(m+1)) with chi(a) = zeta_{p^(m+1)}^k; a must be prime to p.
    long
    zeta_exponent(const mpz_class& a) const;

    CyclotomicElement
    value(const mpz_class& a, int precision) const;

    // chi^b; for b prime to p this is the Galois conjugate sigma_b o chi.
    PadicCharacter
    power(long b) const;

 private:
    long p_;
    int m_;
    long e_;
    long pm_;
};

// tau(chi) = sum over a mod p^(m+1), p not dividing a, of chi(a) zeta_{p^(m+1)}^a.
CyclotomicElement
gauss_sum(const PadicCharacter& chi, int precision);

}  // namespace excezero::padic
